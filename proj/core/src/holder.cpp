#include "pmelab/holder.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pmelab/rate_fit.hpp"

namespace pmelab {

namespace {

// Oscillation sup_{|x-y|_inf <= r} |f(x) - f(y)| over cells inside the ball.
double oscillation(const ScalarField& f, const std::optional<RegionBall>& ball, int rad_cells) {
    const Grid& g = f.grid();
    const int n = g.cells_per_axis();
    auto inside = [&](int i, int j) {
        if (!ball) return true;
        Pt x;
        x[0] = g.coord(i);
        if (g.dim() == 2) x[1] = g.coord(j);
        return ball->contains(x, g.dim());
    };
    double osc = 0.0;
    if (g.dim() == 1) {
        for (int i = 0; i < n; ++i) {
            if (!inside(i, 0)) continue;
            for (int k = std::max(0, i - rad_cells); k <= std::min(n - 1, i + rad_cells); ++k) {
                if (!inside(k, 0)) continue;
                osc = std::max(osc, std::abs(f[g.index(i)] - f[g.index(k)]));
            }
        }
    } else {
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                if (!inside(i, j)) continue;
                const double v = f[g.index(i, j)];
                for (int jj = std::max(0, j - rad_cells); jj <= std::min(n - 1, j + rad_cells);
                     ++jj) {
                    for (int ii = std::max(0, i - rad_cells);
                         ii <= std::min(n - 1, i + rad_cells); ++ii) {
                        if (!inside(ii, jj)) continue;
                        osc = std::max(osc, std::abs(v - f[g.index(ii, jj)]));
                    }
                }
            }
        }
    }
    return osc;
}

} // namespace

double estimate_holder(const ScalarField& f, const std::optional<RegionBall>& restrict_to,
                       int max_radii) {
    if (f.max_value() == f.min_value())
        throw ConfigError("estimate_holder: field is constant");
    const Grid& g = f.grid();
    std::vector<double> log_r, log_osc;
    int rad_cells = 1;
    for (int k = 0; k < max_radii; ++k, rad_cells *= 2) {
        const double r = rad_cells * g.h();
        if (restrict_to && r > restrict_to->radius) break;
        if (rad_cells >= g.cells_per_axis()) break;
        const double osc = oscillation(f, restrict_to, rad_cells);
        if (osc <= 0.0) continue;
        log_r.push_back(std::log(r));
        log_osc.push_back(std::log(osc));
    }
    if (log_r.size() < 3) throw ConfigError("estimate_holder: fewer than 3 usable radii");
    const LineFit lf = least_squares_line(log_r, log_osc);
    return std::clamp(lf.slope, 1e-6, 1.0);
}

} // namespace pmelab
