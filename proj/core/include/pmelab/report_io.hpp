#pragma once

#include <string>

#include "pmelab/barenblatt.hpp"
#include "pmelab/experiments.hpp"

namespace pmelab {

/// JSON renderings of the scenario reports. Deterministic: keys are ordered,
/// numbers use shortest round-trip form, no clocks.
std::string to_json(const Lemma34Report& r);
std::string to_json(const Eq2Report& r);
std::string to_json(const Lemma35Report& r);
std::string to_json(const Lemma35Scan& r);
std::string to_json(const ConvergenceReport& r);
std::string to_json(const GradientBoundReport& r);

std::string rate_series_csv(const RateReport& r);

/// Solver run summary (config echo, per-step aggregates, per-snapshot table).
std::string trajectory_json(const Trajectory& traj);

void write_text_file(const std::string& path, const std::string& content);

} // namespace pmelab
