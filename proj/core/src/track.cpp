#include "tcvortex/track.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "tcvortex/errors.hpp"
#include "tcvortex/model.hpp"

namespace tcvortex {

namespace {

constexpr std::string_view kHeader = "t_hours,lat_deg,lon_deg";
constexpr std::string_view kHeaderWithLabel = "t_hours,lat_deg,lon_deg,label";

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_number(std::string_view field, std::size_t line, const char* column) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty() || !std::isfinite(value))
    throw ParseError(fmt::format("line {}: column {} is not a finite number: '{}'", line, column,
                                 field),
                     line);
  return value;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

double interpolate_lon(double lon0, double lon1, double w) {
  return normalize_longitude(lon0 + w * normalize_longitude(lon1 - lon0));
}

}  // namespace

void Track::validate() {
  for (std::size_t i = 0; i < points.size(); ++i) {
    TrackPoint& p = points[i];
    if (!std::isfinite(p.t) || !std::isfinite(p.lat) || !std::isfinite(p.lon))
      throw ValidationError(fmt::format("point {}: non-finite field", i));
    if (std::abs(p.lat) > 90.0)
      throw ValidationError(fmt::format("point {}: latitude {} outside [-90, 90]", i, p.lat));
    p.lon = normalize_longitude(p.lon);
    if (i > 0 && !(p.t > points[i - 1].t))
      throw ValidationError(fmt::format("point {}: time does not increase", i));
  }
  if (!points.empty()) origin = points.front().position();
}

Track parse_track(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  while (!lines.empty() && strip_cr(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty track file", 1);

  const std::string_view header = strip_cr(lines.front());
  std::size_t columns = 0;
  if (header == kHeader)
    columns = 3;
  else if (header == kHeaderWithLabel)
    columns = 4;
  else
    throw ParseError(fmt::format("line 1: expected header '{}' or '{}'", kHeader, kHeaderWithLabel),
                     1);

  Track track;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::vector<std::string_view> fields = split(strip_cr(lines[i]), ',');
    if (fields.size() != columns)
      throw ParseError(
          fmt::format("line {}: expected {} fields, found {}", line_no, columns, fields.size()),
          line_no);
    TrackPoint p;
    p.t = parse_number(fields[0], line_no, "t_hours") * kSecondsPerHour;
    p.lat = parse_number(fields[1], line_no, "lat_deg");
    p.lon = parse_number(fields[2], line_no, "lon_deg");
    if (columns == 4) p.label = std::string(fields[3]);
    if (std::abs(p.lat) > 90.0)
      throw ValidationError(
          fmt::format("line {}: latitude {} outside [-90, 90]", line_no, p.lat));
    if (!track.points.empty() && !(p.t > track.points.back().t))
      throw ValidationError(fmt::format("line {}: time does not increase", line_no));
    p.lon = normalize_longitude(p.lon);
    track.points.push_back(std::move(p));
  }
  if (!track.points.empty()) track.origin = track.points.front().position();
  return track;
}

std::string write_track(const Track& track) {
  const bool labels = std::any_of(track.points.begin(), track.points.end(),
                                  [](const TrackPoint& p) { return !p.label.empty(); });
  std::string out(labels ? kHeaderWithLabel : kHeader);
  out += '\n';
  for (const TrackPoint& p : track.points) {
    out += fmt::format("{:.6f},{:.6f},{:.6f}", p.t / kSecondsPerHour, p.lat, p.lon);
    if (labels) {
      out += ',';
      out += p.label;
    }
    out += '\n';
  }
  return out;
}

Track read_track_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open track file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_track(buffer.str());
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file: " + path);
  out << content;
  if (!out) throw ValidationError("failed writing output file: " + path);
}

ErrorTable evaluate_forecast(const Track& forecast, const Track& actual) {
  if (forecast.points.empty() || actual.points.empty())
    throw DomainError("evaluate_forecast: empty track");
  const auto& f = forecast.points;
  const double t_first = f.front().t;
  const double t_last = f.back().t;

  ErrorTable table;
  for (const TrackPoint& a : actual.points) {
    if (a.t < t_first || a.t > t_last) continue;
    // First forecast point at or after a.t.
    const auto it = std::lower_bound(f.begin(), f.end(), a.t,
                                     [](const TrackPoint& p, double t) { return p.t < t; });
    GeoPoint predicted;
    if (it->t == a.t || it == f.begin()) {
      predicted = it->position();
    } else {
      const TrackPoint& lo = *std::prev(it);
      const double w = (a.t - lo.t) / (it->t - lo.t);
      predicted = {lo.lat + w * (it->lat - lo.lat), interpolate_lon(lo.lon, it->lon, w)};
    }
    table.rows.push_back({a.t - t_first, haversine(predicted, a.position())});
  }
  if (table.rows.empty()) throw DomainError("evaluate_forecast: tracks do not overlap in time");

  double sum = 0.0;
  for (const ErrorRow& r : table.rows) {
    sum += r.error;
    table.max = std::max(table.max, r.error);
  }
  table.mean = sum / static_cast<double>(table.rows.size());
  return table;
}

std::string write_error_table(const ErrorTable& table) {
  std::string out = "lead_hours,error_km\n";
  for (const ErrorRow& r : table.rows)
    out += fmt::format("{:.6f},{:.6f}\n", r.lead / kSecondsPerHour, r.error / 1000.0);
  return out;
}

}  // namespace tcvortex
