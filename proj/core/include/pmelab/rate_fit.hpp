#pragma once

#include <vector>

#include "pmelab/errors.hpp"

namespace pmelab {

struct ExpFit {
    double K = 0.0;
    double alpha = 0.0;
    double r_squared = 0.0;
    int points_used = 0;
};

/// Ordinary least squares of log(values) against times, restricted to points
/// above resolution_floor: K = exp(intercept), alpha = -slope. Throws
/// ConfigError when fewer than 4 usable points remain (message carries the
/// count).
ExpFit fit_exponential(const std::vector<double>& times, const std::vector<double>& values,
                       double resolution_floor);

/// Plain OLS slope/intercept/r^2 of y against x (shared by the decay-exponent
/// scans and the Hoelder modulus fit).
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y);

/// Free-boundary distance series with fitted rates. alpha is only marked
/// valid when the fit used enough points and r^2 >= 0.9.
struct RateReport {
    std::vector<double> times;
    std::vector<double> d_pos;   // outer excursion of the free boundary
    std::vector<double> d_gamma; // symmetric boundary-to-boundary distance
    double resolution_floor = 0.0;

    ExpFit pos_fit;
    bool pos_fit_valid = false;
    ExpFit gamma_fit;
    bool gamma_fit_valid = false;
};

} // namespace pmelab
