#include "pmelab/barenblatt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pmelab/errors.hpp"
#include "pmelab/transforms.hpp"

namespace pmelab {

void BarenblattParams::validate() const {
    if (!(C > 0.0)) throw ConfigError("barenblatt: C must be > 0");
    if (!(lambda > 0.0 && lambda < 0.5))
        throw ConfigError("barenblatt: lambda must lie in (0, 1/2)");
    if (!(time_offset > 0.0)) throw ConfigError("barenblatt: time offset must be > 0");
}

double lambda_exponent(double m, int d) {
    if (!(m > 1.0)) throw ConfigError("lambda_exponent: m must be > 1");
    if (d < 1) throw ConfigError("lambda_exponent: d must be >= 1");
    const double lam = 1.0 / ((m - 1.0) * d + 2.0);
    if (!(lam < 0.5)) throw ConfigError("lambda_exponent: expected lambda < 1/2 for m > 1");
    return lam;
}

double barenblatt_pressure(const BarenblattParams& p, const Pt& x, double t, int dim) {
    const double tau = t + p.time_offset;
    double r2 = 0.0;
    for (int k = 0; k < dim; ++k) r2 += (x[k] - p.center[k]) * (x[k] - p.center[k]);
    const double q = p.C * std::pow(tau, 2.0 * p.lambda) - 0.5 * p.lambda * r2;
    return q > 0.0 ? q / tau : 0.0;
}

Pt barenblatt_pressure_gradient(const BarenblattParams& p, const Pt& x, double t, int dim) {
    Pt g;
    if (barenblatt_pressure(p, x, t, dim) <= 0.0) return g;
    const double tau = t + p.time_offset;
    for (int k = 0; k < dim; ++k) g[k] = -p.lambda * (x[k] - p.center[k]) / tau;
    return g;
}

double barenblatt_support_radius(const BarenblattParams& p, double t) {
    const double tau = t + p.time_offset;
    return std::sqrt(2.0 * p.C / p.lambda) * std::pow(tau, p.lambda);
}

double barenblatt_peak(const BarenblattParams& p, double t) {
    const double tau = t + p.time_offset;
    return p.C * std::pow(tau, 2.0 * p.lambda - 1.0);
}

double barenblatt_envelope(const BarenblattParams& p, double t) {
    const double tau = t + p.time_offset;
    return std::sqrt(p.C) * std::pow(tau, p.lambda - 1.0);
}

ScalarField barenblatt_pressure_field(const BarenblattParams& p, const Grid& grid, double t) {
    ScalarField u = sample_field(grid, FieldKind::pressure, t, [&](const Pt& x) {
        return barenblatt_pressure(p, x, t, grid.dim());
    });
    u.set_pressure_cap(std::max(1.0, u.max_value()));
    return u;
}

ScalarField barenblatt_density_field(const BarenblattParams& p, double m, const Grid& grid,
                                     double t) {
    return density_of_pressure(barenblatt_pressure_field(p, grid, t), m);
}

void BarrierParams::validate() const {
    base.validate();
    if (C1 * a < 0.0) throw ConfigError("barrier: C1*a must be >= 0");
}

double drainage(const BarrierParams& bp, double t) {
    // 2 C1 a int_0^t sqrt(C) (s+th)^{lambda-1} ds, closed form.
    const double lam = bp.base.lambda;
    const double th = bp.base.time_offset;
    return 2.0 * bp.C1 * bp.a * std::sqrt(bp.base.C) *
           (std::pow(t + th, lam) - std::pow(th, lam)) / lam;
}

double barrier_eval(const BarrierParams& bp, const Pt& x, double t, int dim) {
    const double v = barenblatt_pressure(bp.base, x, t, dim) - drainage(bp, t);
    return v > 0.0 ? v : 0.0;
}

double barrier_death_time(const BarrierParams& bp, double max_t) {
    if (bp.C1 * bp.a == 0.0) return std::numeric_limits<double>::infinity();
    // Peak decays, drainage grows: bisect the first crossing if there is one.
    auto alive = [&](double t) { return barenblatt_peak(bp.base, t) > drainage(bp, t); };
    if (alive(max_t)) return std::numeric_limits<double>::infinity();
    double lo = 0.0, hi = max_t;
    if (!alive(lo)) return 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (alive(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

GradientBoundReport gradient_bound_check(const BarenblattParams& p, double a, double t_max,
                                         const Grid& grid, int time_samples, double slack) {
    p.validate();
    GradientBoundReport rep;
    rep.slack = slack < 0.0 ? 10.0 * grid.h() : slack;
    rep.max_aU_minus_c = -std::numeric_limits<double>::infinity();
    rep.max_DU_minus_c = -std::numeric_limits<double>::infinity();
    for (int it = 0; it < time_samples; ++it) {
        const double t = t_max * it / (time_samples - 1.0);
        const double c = barenblatt_envelope(p, t);
        for (std::size_t cidx = 0; cidx < grid.cell_count(); ++cidx) {
            const Pt x = grid.center(cidx);
            const double u = barenblatt_pressure(p, x, t, grid.dim());
            if (u <= 0.0) continue;
            const Pt g = barenblatt_pressure_gradient(p, x, t, grid.dim());
            double gn = 0.0;
            for (int k = 0; k < grid.dim(); ++k) gn += g[k] * g[k];
            gn = std::sqrt(gn);
            rep.max_aU_minus_c = std::max(rep.max_aU_minus_c, a * u - c);
            rep.max_DU_minus_c = std::max(rep.max_DU_minus_c, gn - c);
        }
    }
    rep.pass = rep.max_aU_minus_c <= rep.slack && rep.max_DU_minus_c <= rep.slack;
    return rep;
}

SpaceTimeFn barenblatt_fn(const BarenblattParams& p, int dim) {
    SpaceTimeFn fn;
    fn.t_min = -0.5 * p.time_offset;
    fn.eval = [p, dim](const Pt& x, double t) { return barenblatt_pressure(p, x, t, dim); };
    return fn;
}

SpaceTimeFn barrier_fn(const BarrierParams& bp, int dim) {
    SpaceTimeFn fn;
    fn.t_min = -0.5 * bp.base.time_offset;
    fn.eval = [bp, dim](const Pt& x, double t) { return barrier_eval(bp, x, t, dim); };
    return fn;
}

ResidualReport residual_pressure_operator(const SpaceTimeFn& fn, double m, double C1,
                                          double a, const Grid& grid,
                                          const std::vector<double>& times, double delta,
                                          double fd_dt, bool keep_fields) {
    if (!(delta > 0.0)) throw ConfigError("residual: delta must be > 0");
    if (!(fd_dt > 0.0)) throw ConfigError("residual: fd_dt must be > 0");
    const double h = grid.h();
    const int dim = grid.dim();
    ResidualReport rep;
    for (double t : times) {
        if (t - fd_dt < fn.t_min || t + fd_dt > fn.t_max)
            throw std::domain_error("residual: time stencil exits the sampled window");
        double tmax = -std::numeric_limits<double>::infinity();
        ScalarField rf(grid, FieldKind::signed_value, t);
        for (std::size_t c = 0; c < grid.cell_count(); ++c) {
            const Pt x = grid.center(c);
            const double f0 = fn.eval(x, t);
            if (!(f0 > delta)) continue;
            const double ft =
                (fn.eval(x, t + fd_dt) - fn.eval(x, t - fd_dt)) / (2.0 * fd_dt);
            double lap = 0.0, grad2 = 0.0;
            for (int k = 0; k < dim; ++k) {
                Pt xp = x, xm = x;
                xp[k] += h;
                xm[k] -= h;
                const double fp = fn.eval(xp, t), fm = fn.eval(xm, t);
                lap += (fp - 2.0 * f0 + fm) / (h * h);
                const double d1 = (fp - fm) / (2.0 * h);
                grad2 += d1 * d1;
            }
            const double r = ft - (m - 1.0) * f0 * lap - grad2 +
                             C1 * a * (std::sqrt(grad2) + a * f0);
            rep.max_residual = std::max(rep.max_residual, r);
            rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(r));
            tmax = std::max(tmax, r);
            rep.cells_evaluated += 1;
            if (keep_fields) rf[c] = r;
        }
        rep.per_time_max.emplace_back(t, tmax);
        if (keep_fields) rep.fields.push_back(std::move(rf));
    }
    return rep;
}

} // namespace pmelab
