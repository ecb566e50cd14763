// Test-only oracles, independent of the library's computation paths:
// adaptive quadrature, closed-form profiles evaluated directly, seeded
// random fields.
#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "pmelab/field.hpp"

namespace pmelab::test {

// Adaptive Simpson quadrature.
inline double simpson_rec(const std::function<double(double)>& f, double a, double b,
                          double fa, double fm, double fb, double whole, double tol,
                          int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 40);
}

// Sum-of-parabolic-bumps random field; nonnegative unless allow_negative.
inline ScalarField random_bumps(const Grid& grid, std::mt19937& rng, int n_bumps,
                                bool allow_negative, FieldKind kind) {
    std::uniform_real_distribution<double> amp(0.05, 0.8);
    std::uniform_real_distribution<double> width(0.2, 1.0);
    std::uniform_real_distribution<double> pos(grid.lower() * 0.6, grid.upper() * 0.6);
    ScalarField f(grid, kind, 0.0);
    for (int b = 0; b < n_bumps; ++b) {
        const double A = amp(rng) * (allow_negative && (b % 2) ? -1.0 : 1.0);
        const double w = width(rng);
        Pt c;
        c[0] = pos(rng);
        if (grid.dim() == 2) c[1] = pos(rng);
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double r = distance(grid.center(i), c, grid.dim());
            const double v = 1.0 - r * r / (w * w);
            if (v > 0.0) f[i] += A * v;
        }
    }
    if (!allow_negative)
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] < 0.0) f[i] = 0.0;
    return f;
}

// L1 distance between a field and a closed-form profile on its grid.
inline double l1_against(const ScalarField& f, const std::function<double(const Pt&)>& fn) {
    double s = 0.0;
    for (std::size_t c = 0; c < f.size(); ++c)
        s += std::abs(f[c] - fn(f.grid().center(c)));
    return s * f.grid().cell_volume();
}

inline double l1_between(const ScalarField& a, const ScalarField& b) {
    double s = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) s += std::abs(a[c] - b[c]);
    return s * a.grid().cell_volume();
}

} // namespace pmelab::test
