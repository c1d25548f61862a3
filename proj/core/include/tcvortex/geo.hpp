#pragma once

#include "tcvortex/plane.hpp"

namespace tcvortex {

/// Mean Earth radius used by the projection and the distance metric, m.
inline constexpr double kEarthRadius = 6371000.0;

/// Geographic position in degrees.
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  friend constexpr bool operator==(GeoPoint, GeoPoint) = default;
};

/// Maps a longitude to (-180, 180].
double normalize_longitude(double lon_deg);

/// Equirectangular tangent plane at `origin`: x1 = R cos(lat0) dlon, x2 = R dlat.
/// Throws DomainError for |lat| > 90 or non-finite input.
Vec2 project(GeoPoint point, GeoPoint origin);

/// Inverse of project. Throws OutOfPlaneError if the latitude leaves
/// [-90, 90], DomainError if the origin is a pole and x1 != 0.
GeoPoint unproject(Vec2 xy, GeoPoint origin);

/// Great-circle distance on the sphere of radius kEarthRadius, m.
double haversine(GeoPoint p, GeoPoint q);

}  // namespace tcvortex
