#include "pmelab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pmelab {

double mass(const ScalarField& f) {
    double s = 0.0;
    for (std::size_t c = 0; c < f.size(); ++c) s += f[c];
    return s * f.grid().cell_volume();
}

double ball_average(const ScalarField& f, const RegionBall& ball) {
    const Grid& g = f.grid();
    double s = 0.0;
    std::size_t hits = 0;
    for (std::size_t c = 0; c < f.size(); ++c) {
        if (ball.contains(g.center(c), g.dim())) {
            s += f[c];
            ++hits;
        }
    }
    if (hits == 0)
        throw std::invalid_argument("ball_average: no cell center inside ball (radius under-resolved)");
    return s * g.cell_volume() / std::pow(ball.radius, g.dim());
}

double default_support_threshold(const ScalarField& f) { return 1e-8 * f.max_abs(); }

CellMask support(const ScalarField& f, double threshold) {
    if (threshold < 0.0) throw std::invalid_argument("support: threshold must be >= 0");
    CellMask m(f.grid());
    for (std::size_t c = 0; c < f.size(); ++c)
        if (f[c] > threshold) m.set(c);
    return m;
}

CellMask support(const ScalarField& f) { return support(f, default_support_threshold(f)); }

double one_sided_distance(const CellMask& a, const CellMask& b) {
    if (a.empty()) throw std::invalid_argument("one_sided_distance: A is empty");
    const auto bc = b.cells();
    if (bc.empty()) return std::numeric_limits<double>::infinity();
    const Grid& g = a.grid();
    double worst = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        if (!a[c]) continue;
        const Pt x = g.center(c);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t d : bc) best = std::min(best, distance(x, b.grid().center(d), g.dim()));
        worst = std::max(worst, best);
    }
    return worst;
}

double hausdorff_distance(const CellMask& a, const CellMask& b) {
    return std::max(one_sided_distance(a, b), one_sided_distance(b, a));
}

double support_extent(const ScalarField& f, const Pt& origin, double threshold) {
    const Grid& g = f.grid();
    double r = 0.0;
    for (std::size_t c = 0; c < f.size(); ++c)
        if (std::abs(f[c]) > threshold) r = std::max(r, distance(g.center(c), origin, g.dim()));
    return r;
}

double support_edge_clearance(const ScalarField& f, double threshold) {
    const Grid& g = f.grid();
    double clearance = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < f.size(); ++c) {
        if (std::abs(f[c]) <= threshold) continue;
        const Pt x = g.center(c);
        for (int k = 0; k < g.dim(); ++k)
            clearance = std::min({clearance, x[k] - g.lower(), g.upper() - x[k]});
    }
    return clearance;
}

double min_over_ball(const ScalarField& f, const RegionBall& ball) {
    const Grid& g = f.grid();
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < f.size(); ++c)
        if (ball.contains(g.center(c), g.dim())) m = std::min(m, f[c]);
    if (!std::isfinite(m)) throw std::invalid_argument("min_over_ball: no cell center inside ball");
    return m;
}

double max_over_ball(const ScalarField& f, const RegionBall& ball) {
    const Grid& g = f.grid();
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < f.size(); ++c)
        if (ball.contains(g.center(c), g.dim())) m = std::max(m, f[c]);
    if (!std::isfinite(m)) throw std::invalid_argument("max_over_ball: no cell center inside ball");
    return m;
}

} // namespace pmelab
