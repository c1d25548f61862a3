#include "tcvortex/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tcvortex/errors.hpp"

namespace tcvortex {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

void check_point(GeoPoint p, const char* what) {
  if (!std::isfinite(p.lat) || !std::isfinite(p.lon) || std::abs(p.lat) > 90.0)
    throw DomainError(what);
}

}  // namespace

double normalize_longitude(double lon_deg) {
  double x = std::fmod(lon_deg + 180.0, 360.0);
  if (x <= 0.0) x += 360.0;
  return x - 180.0;
}

Vec2 project(GeoPoint point, GeoPoint origin) {
  check_point(point, "project: invalid point");
  check_point(origin, "project: invalid origin");
  const double dlon = normalize_longitude(point.lon - origin.lon) * kDegToRad;
  const double dlat = (point.lat - origin.lat) * kDegToRad;
  return {kEarthRadius * std::cos(origin.lat * kDegToRad) * dlon, kEarthRadius * dlat};
}

GeoPoint unproject(Vec2 xy, GeoPoint origin) {
  check_point(origin, "unproject: invalid origin");
  if (!std::isfinite(xy.x1) || !std::isfinite(xy.x2))
    throw DomainError("unproject: non-finite plane coordinates");
  const double lat = origin.lat + xy.x2 / kEarthRadius * kRadToDeg;
  if (std::abs(lat) > 90.0) throw OutOfPlaneError("unproject: latitude leaves [-90, 90]");
  const double scale = kEarthRadius * std::cos(origin.lat * kDegToRad);
  if (scale == 0.0) {
    if (xy.x1 != 0.0) throw DomainError("unproject: east offset undefined at a polar origin");
    return {lat, normalize_longitude(origin.lon)};
  }
  return {lat, normalize_longitude(origin.lon + xy.x1 / scale * kRadToDeg)};
}

double haversine(GeoPoint p, GeoPoint q) {
  const double phi1 = p.lat * kDegToRad;
  const double phi2 = q.lat * kDegToRad;
  const double dphi = (q.lat - p.lat) * kDegToRad;
  const double dlambda = normalize_longitude(q.lon - p.lon) * kDegToRad;
  const double s1 = std::sin(0.5 * dphi);
  const double s2 = std::sin(0.5 * dlambda);
  const double h = std::clamp(s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2, 0.0, 1.0);
  return 2.0 * kEarthRadius * std::asin(std::sqrt(h));
}

}  // namespace tcvortex
