#pragma once

#include <string>
#include <vector>

namespace pmelab {

struct SvgSeries {
    std::string name;
    std::vector<double> times;
    std::vector<double> values;
};

/// Minimal log-linear line chart (linear time axis, log10 value axis) with
/// axis labels and an optional horizontal floor line. Deterministic output.
std::string log_linear_svg(const std::string& title, const std::vector<SvgSeries>& series,
                           double floor_line = 0.0);

} // namespace pmelab
