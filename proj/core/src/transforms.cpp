#include "pmelab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace pmelab {

void TransformParams::validate() const {
    if (!(a > 0.0)) throw ConfigError("transform: a must be > 0");
    if (C1 < 0.0) throw ConfigError("transform: C1 must be >= 0");
    if (!(m > 1.0)) throw ConfigError("transform: m must be > 1");
}

void TransformParams::validate_tilted_regime() const {
    validate();
    const double limit = std::min(1.0, 2.0 - m);
    if (!(C1 * a < limit)) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "regime violated: C1*a = %.6g must be below min(1, 2-m) = %.6g "
                      "(requires 1<m<2 and small a)",
                      C1 * a, limit);
        throw RegimeError(buf);
    }
}

ScalarField pressure_of_density(const ScalarField& rho, double m) {
    if (!(m > 1.0)) throw ConfigError("pressure_of_density: m must be > 1");
    ScalarField u(rho.grid(), FieldKind::pressure, rho.time_stamp());
    const double c = m / (m - 1.0);
    double cap = 1.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = c * std::pow(std::max(rho[i], 0.0), m - 1.0);
        cap = std::max(cap, u[i]);
    }
    u.set_pressure_cap(cap);
    return u;
}

ScalarField density_of_pressure(const ScalarField& u, double m) {
    if (!(m > 1.0)) throw ConfigError("density_of_pressure: m must be > 1");
    ScalarField rho(u.grid(), FieldKind::density, u.time_stamp());
    const double c = (m - 1.0) / m;
    for (std::size_t i = 0; i < u.size(); ++i)
        rho[i] = std::pow(c * std::max(u[i], 0.0), 1.0 / (m - 1.0));
    return rho;
}

double mtilde(double m, double C1a, bool require_below_two) {
    if (!(C1a >= 0.0 && C1a < 1.0)) throw ConfigError("mtilde: need 0 <= C1a < 1");
    const double mt = (m - 1.0) / (1.0 - C1a) + 1.0;
    if (C1a > 0.0 && !(mt > m)) throw ConfigError("mtilde: lost monotonicity");
    if (require_below_two && !(mt < 2.0)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "mtilde = %.6g >= 2: outside the tilted-exponent regime", mt);
        throw RegimeError(buf);
    }
    return mt;
}

ScalarField ubar_transform(const ScalarField& u, double C1a) {
    if (!(C1a >= 0.0 && C1a < 1.0)) throw ConfigError("ubar_transform: need 0 <= C1a < 1");
    ScalarField out = u;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (1.0 - C1a) * u[i];
    return out;
}

double lemma35_exponent(double m, int n) {
    if (!(m > 1.0)) throw ConfigError("lemma35_exponent: m must be > 1");
    if (n < 1) throw ConfigError("lemma35_exponent: n must be >= 1");
    return 2.0 / (m * (n + 1));
}

double sample_multilinear(const ScalarField& f, const Pt& y) {
    const Grid& g = f.grid();
    const int n = g.cells_per_axis();
    const double h = g.h();

    // Position in cell-index coordinates; valid within the cell-center hull.
    auto locate = [&](double coord, int& i0, double& frac) {
        const double s = (coord - g.lower()) / h - 0.5;
        if (s < -1e-9 || s > n - 1 + 1e-9)
            throw std::domain_error("sample: point outside cell-center hull");
        const double sc = std::clamp(s, 0.0, static_cast<double>(n - 1));
        i0 = std::min(static_cast<int>(sc), n - 2);
        if (n == 1) i0 = 0;
        frac = sc - i0;
    };

    int i0 = 0;
    double fx = 0.0;
    locate(y[0], i0, fx);
    if (g.dim() == 1) return (1.0 - fx) * f[g.index(i0)] + fx * f[g.index(i0 + 1)];

    int j0 = 0;
    double fy = 0.0;
    locate(y[1], j0, fy);
    const double v00 = f[g.index(i0, j0)], v10 = f[g.index(i0 + 1, j0)];
    const double v01 = f[g.index(i0, j0 + 1)], v11 = f[g.index(i0 + 1, j0 + 1)];
    return (1.0 - fy) * ((1.0 - fx) * v00 + fx * v10) + fy * ((1.0 - fx) * v01 + fx * v11);
}

namespace {

// Shared machinery of both rescalings: target (x, t) -> source (y, s), with
// linear time interpolation between snapshots.
Trajectory resample_trajectory(const Trajectory& traj, const Grid& target_grid,
                               const std::vector<double>& target_times, FieldKind kind,
                               double amplitude,
                               const std::function<Pt(const Pt&)>& map_space,
                               const std::function<double(double)>& map_time) {
    const auto& snaps = traj.snapshots();
    std::vector<double> stimes = traj.times();
    const double ttol = 1e-9 * std::max(1.0, std::abs(stimes.back()));

    std::vector<ScalarField> out;
    std::vector<SnapshotInfo> info;
    for (double t : target_times) {
        const double s = map_time(t);
        if (s < stimes.front() - ttol || s > stimes.back() + ttol) {
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "rescale: mapped time %.6g (from t = %.6g) outside sampled range "
                          "[%.6g, %.6g]",
                          s, t, stimes.front(), stimes.back());
            throw std::domain_error(buf);
        }
        const double sc = std::clamp(s, stimes.front(), stimes.back());
        auto hi = std::upper_bound(stimes.begin(), stimes.end(), sc);
        std::size_t k1 = std::min(static_cast<std::size_t>(hi - stimes.begin()),
                                  stimes.size() - 1);
        std::size_t k0 = k1 == 0 ? 0 : k1 - 1;
        const double span = stimes[k1] - stimes[k0];
        const double theta = span > 0.0 ? (sc - stimes[k0]) / span : 0.0;

        ScalarField g(target_grid, kind, t);
        for (std::size_t c = 0; c < g.size(); ++c) {
            const Pt y = map_space(target_grid.center(c));
            double v;
            try {
                const double v0 = sample_multilinear(snaps[k0], y);
                v = theta == 0.0 ? v0
                                 : (1.0 - theta) * v0 + theta * sample_multilinear(snaps[k1], y);
            } catch (const std::domain_error&) {
                char buf[160];
                std::snprintf(buf, sizeof(buf),
                              "rescale: mapped point (%.6g%s%.6g) at t = %.6g outside sampled "
                              "domain",
                              y[0], target_grid.dim() == 2 ? ", " : "; s = ",
                              target_grid.dim() == 2 ? y[1] : sc, t);
                throw std::domain_error(buf);
            }
            g[c] = amplitude * v;
        }
        if (kind == FieldKind::pressure) g.set_pressure_cap(std::max(1.0, g.max_value()));
        SnapshotInfo si;
        si.time = t;
        si.mass = 0.0;
        si.min_value = g.min_value();
        si.max_value = g.max_value();
        info.push_back(si);
        out.push_back(std::move(g));
    }
    SolverConfig cfg = traj.config();
    cfg.end_time = target_times.empty() ? 0.0 : target_times.back();
    cfg.snapshot_times.clear();
    return Trajectory(std::move(out), cfg, traj.drift(), traj.source(), traj.stats(),
                      std::move(info));
}

} // namespace

Trajectory parabolic_rescale(const Trajectory& traj, const TransformParams& p,
                             const Grid& target_grid,
                             const std::vector<double>& target_times) {
    p.validate();
    if (traj.front().kind() != FieldKind::pressure)
        throw ConfigError("parabolic_rescale: expects a pressure trajectory");
    const double a = p.a, a2 = p.a * p.a, t0 = p.t0;
    const Pt x0 = p.x0;
    const int dim = target_grid.dim();
    return resample_trajectory(
        traj, target_grid, target_times, FieldKind::pressure, 1.0,
        [a, x0, dim](const Pt& x) {
            Pt y;
            for (int k = 0; k < dim; ++k) y[k] = a * (x[k] - x0[k]);
            return y;
        },
        [a2, t0](double t) { return a2 * (t - t0); });
}

Trajectory lemma35_rescale(const Trajectory& traj, double a, double m,
                           const Grid& target_grid,
                           const std::vector<double>& target_times) {
    if (!(a > 0.0)) throw ConfigError("lemma35_rescale: a must be > 0");
    if (traj.front().kind() != FieldKind::density)
        throw ConfigError("lemma35_rescale: expects a density trajectory");
    const double space = std::pow(a, 0.5 * m);
    const int dim = target_grid.dim();
    return resample_trajectory(
        traj, target_grid, target_times, FieldKind::density, 1.0 / a,
        [space, dim](const Pt& x) {
            Pt y;
            for (int k = 0; k < dim; ++k) y[k] = space * x[k];
            return y;
        },
        [a](double t) { return a * t; });
}

namespace {
Trajectory map_kind(const Trajectory& traj, FieldKind want,
                    const std::function<ScalarField(const ScalarField&)>& fn) {
    std::vector<ScalarField> out;
    std::vector<SnapshotInfo> info;
    for (const auto& s : traj.snapshots()) {
        out.push_back(fn(s));
        SnapshotInfo si;
        si.time = out.back().time_stamp();
        si.min_value = out.back().min_value();
        si.max_value = out.back().max_value();
        info.push_back(si);
    }
    (void)want;
    return Trajectory(std::move(out), traj.config(), traj.drift(), traj.source(),
                      traj.stats(), std::move(info));
}
} // namespace

Trajectory to_pressure(const Trajectory& density_traj, double m) {
    return map_kind(density_traj, FieldKind::pressure,
                    [m](const ScalarField& f) { return pressure_of_density(f, m); });
}

Trajectory to_density(const Trajectory& pressure_traj, double m) {
    return map_kind(pressure_traj, FieldKind::density,
                    [m](const ScalarField& f) { return density_of_pressure(f, m); });
}

} // namespace pmelab
