#include "pmelab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pmelab/measure.hpp"

namespace pmelab {

void SolverConfig::validate() const {
    if (!(m > 1.0)) throw ConfigError("solver: m must be > 1");
    if (!(cfl_fraction > 0.0 && cfl_fraction <= 1.0))
        throw ConfigError("solver: cfl_fraction must be in (0,1]");
    if (end_time < 0.0) throw ConfigError("solver: end_time must be >= 0");
    for (double t : snapshot_times)
        if (t < 0.0 || t > end_time * (1.0 + 1e-12))
            throw ConfigError("solver: snapshot time outside [0, end_time]");
}

std::vector<double> SourceTerm::cell_weights(const Grid& grid) const {
    std::vector<double> w(grid.cell_count(), 0.0);
    if (!active || strength == 0.0) return w;
    const double cv = grid.cell_volume();
    for (std::size_t c = 0; c < w.size(); ++c)
        w[c] = ball_cell_overlap(region, grid.dim(), grid.center(c), grid.h()) / cv;
    return w;
}

Trajectory::Trajectory(std::vector<ScalarField> snapshots, SolverConfig config,
                       std::optional<PotentialSpec> drift, std::optional<SourceTerm> source,
                       StepStats stats, std::vector<SnapshotInfo> info)
    : snaps_(std::move(snapshots)), cfg_(std::move(config)), drift_(std::move(drift)),
      source_(std::move(source)), stats_(stats), info_(std::move(info)) {
    if (snaps_.empty()) throw std::invalid_argument("trajectory: no snapshots");
    for (std::size_t i = 0; i + 1 < snaps_.size(); ++i) {
        if (!(snaps_[i].time_stamp() < snaps_[i + 1].time_stamp()))
            throw std::invalid_argument("trajectory: snapshot times not strictly increasing");
        if (snaps_[i].grid() != snaps_[i + 1].grid())
            throw std::invalid_argument("trajectory: snapshots on different grids");
    }
}

const ScalarField& Trajectory::at_time(double t, double tol) const {
    for (const auto& s : snaps_)
        if (std::abs(s.time_stamp() - t) <= tol) return s;
    throw std::invalid_argument("trajectory: no snapshot at requested time");
}

std::vector<double> Trajectory::times() const {
    std::vector<double> out;
    out.reserve(snaps_.size());
    for (const auto& s : snaps_) out.push_back(s.time_stamp());
    return out;
}

namespace {

inline double mono_flux(double v, double m) {
    // w |w|^{m-1}; for nonnegative input this is v^m
    return v >= 0.0 ? std::pow(v, m) : -std::pow(-v, m);
}

// max over cells of the per-axis sum of face drift speeds (l1 bound used for
// both the CFL rule and the monotonicity check).
double max_drift_speed_l1(const Grid& g, const PotentialSpec& phi) {
    const int n = g.cells_per_axis();
    const double h = g.h();
    double vmax = 0.0;
    auto face_speed = [&](const Pt& a, const Pt& b) {
        return std::abs(phi.value(b, g.dim()) - phi.value(a, g.dim())) / h;
    };
    if (g.dim() == 1) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            if (i > 0) s = std::max(s, face_speed(Pt(g.coord(i - 1)), Pt(g.coord(i))));
            if (i < n - 1) s = std::max(s, face_speed(Pt(g.coord(i)), Pt(g.coord(i + 1))));
            vmax = std::max(vmax, s);
        }
    } else {
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                const Pt x(g.coord(i), g.coord(j));
                double sx = 0.0, sy = 0.0;
                if (i > 0) sx = std::max(sx, face_speed(Pt(g.coord(i - 1), x[1]), x));
                if (i < n - 1) sx = std::max(sx, face_speed(x, Pt(g.coord(i + 1), x[1])));
                if (j > 0) sy = std::max(sy, face_speed(Pt(x[0], g.coord(j - 1)), x));
                if (j < n - 1) sy = std::max(sy, face_speed(x, Pt(x[0], g.coord(j + 1))));
                vmax = std::max(vmax, sx + sy);
            }
        }
    }
    return vmax;
}

// dt * (2 d m max^{m-1} / h^2 + V / h) must stay <= 1 for the update to be
// order-preserving.
void check_step_stability(const ScalarField& f, double m, double drift_speed_l1, double dt) {
    const double h = f.grid().h();
    const double diff = 2.0 * f.grid().dim() * m * std::pow(f.max_abs(), m - 1.0) / (h * h);
    const double load = dt * (diff + drift_speed_l1 / h);
    if (load > 1.0 + 1e-9)
        throw SolverAbort("step rejected: dt above the monotone stability bound",
                          f.time_stamp());
}

// Conservative divergence update shared by both equation forms. phi_cells is
// empty when there is no drift.
std::vector<double> flux_divergence(const ScalarField& f, double m,
                                    const std::vector<double>& phi_cells) {
    const Grid& g = f.grid();
    const int n = g.cells_per_axis();
    const double h = g.h();
    const bool drift = !phi_cells.empty();
    std::vector<double> div(f.size(), 0.0);

    auto accumulate_line = [&](auto idx_of, int count) {
        // Faces between consecutive cells along one grid line; zero-flux ends.
        double flux_left = 0.0;
        for (int i = 0; i < count; ++i) {
            const std::size_t c = idx_of(i);
            double flux_right = 0.0;
            if (i < count - 1) {
                const std::size_t cr = idx_of(i + 1);
                flux_right = -(mono_flux(f[cr], m) - mono_flux(f[c], m)) / h;
                if (drift) {
                    const double v = -(phi_cells[cr] - phi_cells[c]) / h;
                    const double up = v > 0.0 ? f[c] : f[cr];
                    flux_right += up * v;
                }
            }
            div[c] += (flux_right - flux_left) / h;
            flux_left = flux_right;
        }
    };

    if (g.dim() == 1) {
        accumulate_line([&](int i) { return g.index(i); }, n);
    } else {
        for (int j = 0; j < n; ++j)
            accumulate_line([&](int i) { return g.index(i, j); }, n);
        for (int i = 0; i < n; ++i)
            accumulate_line([&](int jj) { return g.index(i, jj); }, n);
    }
    return div;
}

struct ScanResult {
    double max_abs = 0.0;
    double min_value = 0.0;
    double max_value = 0.0;
    bool finite = true;
};

ScanResult scan(const ScalarField& f) {
    ScanResult r;
    r.min_value = std::numeric_limits<double>::infinity();
    r.max_value = -r.min_value;
    for (std::size_t c = 0; c < f.size(); ++c) {
        const double v = f[c];
        if (!std::isfinite(v)) r.finite = false;
        r.max_abs = std::max(r.max_abs, std::abs(v));
        r.min_value = std::min(r.min_value, v);
        r.max_value = std::max(r.max_value, v);
    }
    return r;
}

} // namespace

double cfl_dt(const ScalarField& f, double m, const PotentialSpec* drift,
              double cfl_fraction, double remaining_time) {
    const Grid& g = f.grid();
    const double h = g.h();
    double dt = remaining_time;
    const double fmax = f.max_abs();
    if (fmax > 0.0)
        dt = std::min(dt, cfl_fraction * h * h /
                              (2.0 * g.dim() * m * std::pow(fmax, m - 1.0)));
    if (drift && !drift->is_none()) {
        const double v = max_drift_speed_l1(g, *drift);
        if (v > 0.0) dt = std::min(dt, cfl_fraction * h / v);
    }
    if (!(dt > 0.0) && remaining_time > 0.0)
        throw SolverAbort("cfl_dt: nonpositive step", f.time_stamp());
    return dt;
}

ScalarField step_density(const ScalarField& rho, const PotentialSpec& drift, double m,
                         double dt, double positivity_floor, double* clamped_mass) {
    const Grid& g = rho.grid();
    std::vector<double> phi_cells;
    double vl1 = 0.0;
    if (!drift.is_none()) {
        phi_cells.resize(g.cell_count());
        for (std::size_t c = 0; c < phi_cells.size(); ++c)
            phi_cells[c] = drift.value(g.center(c), g.dim());
        vl1 = max_drift_speed_l1(g, drift);
    }
    check_step_stability(rho, m, vl1, dt);

    const auto div = flux_divergence(rho, m, phi_cells);
    ScalarField out(g, FieldKind::density, rho.time_stamp() + dt);
    double clamped = 0.0;
    for (std::size_t c = 0; c < out.size(); ++c) {
        double v = rho[c] - dt * div[c];
        if (v < positivity_floor) {
            clamped += positivity_floor - v;
            v = positivity_floor;
        }
        out[c] = v;
    }
    if (clamped_mass) *clamped_mass += clamped * g.cell_volume();
    return out;
}

ScalarField step_signed(const ScalarField& w, double m, const SourceTerm* source, double dt) {
    const Grid& g = w.grid();
    check_step_stability(w, m, 0.0, dt);
    const auto div = flux_divergence(w, m, {});
    ScalarField out(g, w.kind(), w.time_stamp() + dt);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = w[c] - dt * div[c];
    if (source && source->active && source->strength != 0.0) {
        const auto weights = source->cell_weights(g);
        for (std::size_t c = 0; c < out.size(); ++c)
            out[c] += source->strength * dt * weights[c];
    }
    return out;
}

namespace {

std::vector<double> snapshot_schedule(const SolverConfig& cfg) {
    std::vector<double> ts{0.0, cfg.end_time};
    ts.insert(ts.end(), cfg.snapshot_times.begin(), cfg.snapshot_times.end());
    std::sort(ts.begin(), ts.end());
    std::vector<double> out;
    const double tol = 1e-12 * std::max(1.0, cfg.end_time);
    for (double t : ts)
        if (out.empty() || t - out.back() > tol) out.push_back(t);
    return out;
}

class Stepper {
public:
    Stepper(const SolverConfig& cfg, const std::optional<PotentialSpec>& drift,
            const std::optional<SourceTerm>& source, const ScalarField& initial)
        : cfg_(cfg), drift_(drift), source_(source) {
        if (initial.kind() == FieldKind::pressure)
            throw ConfigError("solve: evolve density or signed fields, not pressure");
        if (initial.kind() == FieldKind::density && source_ && source_->active)
            throw ConfigError("solve: sources are only supported for signed fields");
        if (initial.kind() == FieldKind::signed_value && drift_ && !drift_->is_none())
            throw ConfigError("solve: drift is only supported for density fields");
        if (initial.kind() == FieldKind::density && initial.min_value() < 0.0)
            throw ConfigError("solve: density initial data must be nonnegative");
        guard_ = cfg.support_guard < 0.0 ? 4.0 * initial.grid().h() : cfg.support_guard;
        if (source_ && source_->active && source_->strength != 0.0)
            weights_ = source_->cell_weights(initial.grid());
    }

    double stable_dt(const ScalarField& f, double remaining) const {
        double dt = cfl_dt(f, cfg_.m, drift_ ? &*drift_ : nullptr, cfg_.cfl_fraction,
                           remaining);
        if (!(dt < remaining)) dt = remaining;
        // Keep the source from outrunning the diffusion timescale: at most an
        // amplitude doubling per step, with a small wake-up kick from zero.
        if (!weights_.empty()) {
            const double s = std::abs(source_->strength);
            const double amp = f.max_abs();
            if (amp > 0.0)
                dt = std::min(dt, amp / s);
            else
                dt = std::min(dt, std::max(1e-12, std::min(remaining * 1e-3,
                                                           f.grid().h() * f.grid().h())));
        }
        return dt;
    }

    ScalarField advance(const ScalarField& f, double dt, StepStats& stats) {
        ScalarField out = f;
        if (f.kind() == FieldKind::density) {
            out = step_density(f, drift_ ? *drift_ : PotentialSpec::none(), cfg_.m, dt,
                               cfg_.positivity_floor, &stats.clamped_mass_total);
        } else {
            out = step_signed(f, cfg_.m, source_ ? &*source_ : nullptr, dt);
        }
        const auto sr = scan(out);
        if (!sr.finite) throw NumericsError("solve: non-finite value", out.time_stamp());
        stats.steps += 1;
        stats.min_dt = stats.steps == 1 ? dt : std::min(stats.min_dt, dt);
        stats.max_dt = std::max(stats.max_dt, dt);
        stats.min_value = std::min(stats.min_value, sr.min_value);
        stats.max_value = std::max(stats.max_value, sr.max_value);
        if (guard_ > 0.0) {
            // Cells sitting at the positivity floor are an artificial carpet,
            // not support.
            const double thr = std::max(1e-8 * std::max(sr.max_abs, 1e-300),
                                        cfg_.positivity_floor * (1.0 + 1e-6));
            const double clearance = support_edge_clearance(out, thr);
            if (clearance < guard_)
                throw DomainTooSmall("solve: support reached the box-edge guard band (domain too small)",
                                     out.time_stamp());
        }
        return out;
    }

private:
    const SolverConfig& cfg_;
    const std::optional<PotentialSpec>& drift_;
    const std::optional<SourceTerm>& source_;
    std::vector<double> weights_;
    double guard_ = 0.0;
};

SnapshotInfo info_of(const ScalarField& f) {
    SnapshotInfo si;
    si.time = f.time_stamp();
    si.mass = mass(f);
    si.min_value = f.min_value();
    si.max_value = f.max_value();
    return si;
}

} // namespace

Trajectory solve(const ScalarField& initial, const SolverConfig& cfg,
                 const std::optional<PotentialSpec>& drift,
                 const std::optional<SourceTerm>& source) {
    cfg.validate();
    Stepper stepper(cfg, drift, source, initial);
    const double t0 = initial.time_stamp();
    const auto targets = snapshot_schedule(cfg);

    StepStats stats;
    stats.min_value = initial.min_value();
    stats.max_value = initial.max_value();
    std::vector<ScalarField> snaps;
    std::vector<SnapshotInfo> info;
    snaps.push_back(initial);
    info.push_back(info_of(initial));

    ScalarField field = initial;
    double t = 0.0;
    for (std::size_t k = 1; k < targets.size(); ++k) {
        const double target = targets[k];
        while (t < target - 1e-15 * std::max(1.0, target)) {
            const double dt = stepper.stable_dt(field, target - t);
            field = stepper.advance(field, dt, stats);
            t += dt;
        }
        t = target;
        field.set_time_stamp(t0 + t);
        snaps.push_back(field);
        info.push_back(info_of(field));
    }
    return Trajectory(std::move(snaps), cfg, drift, source, stats, std::move(info));
}

PairRun solve_pair(const ScalarField& lower, const ScalarField& upper,
                   const SolverConfig& cfg, const std::optional<PotentialSpec>& drift,
                   const std::optional<SourceTerm>& source_lower,
                   const std::optional<SourceTerm>& source_upper) {
    cfg.validate();
    if (lower.grid() != upper.grid())
        throw ConfigError("solve_pair: fields must share a grid");
    if (lower.kind() != upper.kind())
        throw ConfigError("solve_pair: fields must share a kind");
    Stepper step_lo(cfg, drift, source_lower, lower);
    Stepper step_hi(cfg, drift, source_upper, upper);
    const double t0 = lower.time_stamp();
    const auto targets = snapshot_schedule(cfg);

    StepStats stats_lo, stats_hi;
    std::vector<ScalarField> snaps_lo{lower}, snaps_hi{upper};
    std::vector<SnapshotInfo> info_lo{info_of(lower)}, info_hi{info_of(upper)};

    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < lower.size(); ++c)
        min_gap = std::min(min_gap, upper[c] - lower[c]);

    ScalarField lo = lower, hi = upper;
    double t = 0.0;
    for (std::size_t k = 1; k < targets.size(); ++k) {
        const double target = targets[k];
        while (t < target - 1e-15 * std::max(1.0, target)) {
            const double dt =
                std::min(step_lo.stable_dt(lo, target - t), step_hi.stable_dt(hi, target - t));
            lo = step_lo.advance(lo, dt, stats_lo);
            hi = step_hi.advance(hi, dt, stats_hi);
            for (std::size_t c = 0; c < lo.size(); ++c)
                min_gap = std::min(min_gap, hi[c] - lo[c]);
            t += dt;
        }
        t = target;
        lo.set_time_stamp(t0 + t);
        hi.set_time_stamp(t0 + t);
        snaps_lo.push_back(lo);
        snaps_hi.push_back(hi);
        info_lo.push_back(info_of(lo));
        info_hi.push_back(info_of(hi));
    }
    PairRun out{Trajectory(std::move(snaps_lo), cfg, drift, source_lower, stats_lo,
                           std::move(info_lo)),
                Trajectory(std::move(snaps_hi), cfg, drift, source_upper, stats_hi,
                           std::move(info_hi)),
                min_gap};
    return out;
}

} // namespace pmelab
