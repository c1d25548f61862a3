#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "tcvortex/fitting.hpp"

namespace tcvortex {

/// FitResult as JSON:
///   {origin:{lat,lon}|null, l, b0, epsilon, bound, v0:[V1,V2]|null,
///    mn:[m,n]|null, accepted, fixed_b0, b01, b02, condition_number,
///    window_start, window:[{t_hours, lat, lon}, ...]}
/// Rates in s^-1, velocities in m s^-1, forcing in m s^-2, positions in
/// degrees. Windows without a geographic origin carry {t_hours, x1_m, x2_m}.
nlohmann::json fit_result_to_json(const FitResult& fit);

/// Inverse of fit_result_to_json. Throws ParseError on schema violations.
FitResult fit_result_from_json(const nlohmann::json& j);

/// Pretty-printed document (one object, or an array for several results).
std::string write_fit_result(const FitResult& fit);
std::string write_fit_results(std::span<const FitResult> fits);

}  // namespace tcvortex
