#include "tcvortex/fit_json.hpp"

#include "tcvortex/errors.hpp"
#include "tcvortex/geo.hpp"
#include "tcvortex/model.hpp"

namespace tcvortex {

namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json optional_pair(const std::optional<Vec2>& v) {
  return v ? json::array({v->x1, v->x2}) : json(nullptr);
}

std::optional<double> read_optional_number(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

std::optional<Vec2> read_optional_pair(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  const json& a = j.at(key);
  if (!a.is_array() || a.size() != 2) throw ParseError(std::string("fit JSON: bad ") + key, 0);
  return Vec2{a[0].get<double>(), a[1].get<double>()};
}

}  // namespace

json fit_result_to_json(const FitResult& fit) {
  json j;
  j["origin"] = fit.origin ? json{{"lat", fit.origin->lat}, {"lon", fit.origin->lon}} : json(nullptr);
  j["l"] = fit.l;
  j["b0"] = optional_number(fit.b0);
  j["epsilon"] = fit.epsilon_used;
  j["bound"] = fit.bound_used;
  j["v0"] = optional_pair(fit.v0);
  j["mn"] = optional_pair(fit.mn);
  j["accepted"] = fit.accepted;
  j["fixed_b0"] = fit.fixed_b0;
  j["b01"] = optional_number(fit.b01);
  j["b02"] = optional_number(fit.b02);
  j["condition_number"] = fit.condition_number;
  j["window_start"] = fit.window_start;
  json window = json::array();
  for (const TimedPoint& p : fit.window) {
    if (fit.origin) {
      const GeoPoint g = unproject(p.x, *fit.origin);
      window.push_back({{"t_hours", p.t / kSecondsPerHour}, {"lat", g.lat}, {"lon", g.lon}});
    } else {
      window.push_back({{"t_hours", p.t / kSecondsPerHour}, {"x1_m", p.x.x1}, {"x2_m", p.x.x2}});
    }
  }
  j["window"] = window;
  return j;
}

FitResult fit_result_from_json(const json& j) {
  try {
    FitResult fit;
    if (!j.at("origin").is_null())
      fit.origin = GeoPoint{j.at("origin").at("lat").get<double>(),
                            j.at("origin").at("lon").get<double>()};
    fit.l = j.at("l").get<double>();
    fit.b0 = read_optional_number(j, "b0");
    fit.epsilon_used = j.at("epsilon").get<double>();
    fit.bound_used = j.value("bound", 0.0);
    fit.v0 = read_optional_pair(j, "v0");
    fit.mn = read_optional_pair(j, "mn");
    fit.accepted = j.at("accepted").get<bool>();
    fit.fixed_b0 = j.value("fixed_b0", false);
    fit.b01 = read_optional_number(j, "b01");
    fit.b02 = read_optional_number(j, "b02");
    fit.condition_number = j.value("condition_number", 0.0);
    fit.window_start = j.value("window_start", std::size_t{0});
    const json& window = j.at("window");
    if (!window.is_array() || window.size() != 3)
      throw ParseError("fit JSON: window must hold three points", 0);
    for (std::size_t k = 0; k < 3; ++k) {
      const json& w = window[k];
      TimedPoint p;
      p.t = w.at("t_hours").get<double>() * kSecondsPerHour;
      if (fit.origin)
        p.x = project({w.at("lat").get<double>(), w.at("lon").get<double>()}, *fit.origin);
      else
        p.x = {w.at("x1_m").get<double>(), w.at("x2_m").get<double>()};
      fit.window[k] = p;
    }
    return fit;
  } catch (const json::exception& e) {
    throw ParseError(std::string("fit JSON: ") + e.what(), 0);
  }
}

std::string write_fit_result(const FitResult& fit) { return fit_result_to_json(fit).dump(2) + "\n"; }

std::string write_fit_results(std::span<const FitResult> fits) {
  json a = json::array();
  for (const FitResult& f : fits) a.push_back(fit_result_to_json(f));
  return a.dump(2) + "\n";
}

}  // namespace tcvortex
