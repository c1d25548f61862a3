#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tcvortex/geo.hpp"

namespace tcvortex {

struct TrackPoint {
  double t = 0.0;  // seconds on the file's time axis
  double lat = 0.0;
  double lon = 0.0;
  std::string label;

  GeoPoint position() const { return {lat, lon}; }
};

/// Time-ordered eye positions. `origin` is the first point.
struct Track {
  GeoPoint origin;
  std::vector<TrackPoint> points;

  /// Throws ValidationError unless times increase strictly and every
  /// latitude lies in [-90, 90]; normalizes longitudes and resets the origin.
  void validate();
};

/// Parses `t_hours,lat_deg,lon_deg[,label]` CSV. Times are converted to
/// seconds and kept on the file's time axis. Throws ParseError (with the
/// 1-based line number) for malformed content and ValidationError for
/// out-of-range latitudes or non-increasing times.
Track parse_track(std::string_view text);

/// Canonical CSV: fixed six-decimal floats, LF endings, label column only
/// when some point carries a label.
std::string write_track(const Track& track);

Track read_track_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

struct ErrorRow {
  double lead = 0.0;   // s after the first forecast time
  double error = 0.0;  // great-circle distance, m
};

struct ErrorTable {
  std::vector<ErrorRow> rows;
  double mean = 0.0;
  double max = 0.0;
};

/// For each actual point inside the forecast's time range, interpolates the
/// forecast linearly in time and measures the great-circle error. Throws
/// DomainError when the two tracks do not overlap in time.
ErrorTable evaluate_forecast(const Track& forecast, const Track& actual);

/// `lead_hours,error_km` CSV.
std::string write_error_table(const ErrorTable& table);

}  // namespace tcvortex
