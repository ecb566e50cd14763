#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "pmelab/errors.hpp"
#include "pmelab/field.hpp"
#include "pmelab/potential.hpp"

namespace pmelab {

struct SolverConfig {
    double m = 2.0;              // diffusion exponent, > 1
    double cfl_fraction = 0.45;  // in (0, 1]; <= 0.5 guarantees a monotone update
    double end_time = 0.0;
    std::vector<double> snapshot_times; // relative to run start; merged with {0, end_time}
    double support_guard = -1.0; // min support-to-edge distance; < 0 means 4h, 0 disables
    double positivity_floor = 0.0;

    void validate() const;
};

/// Constant-rate source on a ball, discretized as the exact cell average of
/// strength * indicator: partially covered cells get the covered fraction.
/// The discrete mass balance therefore matches the continuum ball volume.
struct SourceTerm {
    RegionBall region;
    double strength = 0.0; // signed rate, density per unit time
    bool active = true;

    std::vector<double> cell_weights(const Grid& grid) const;
};

struct StepStats {
    long steps = 0;
    double min_dt = 0.0;
    double max_dt = 0.0;
    double clamped_mass_total = 0.0;
    double min_value = 0.0;
    double max_value = 0.0;
};

struct SnapshotInfo {
    double time = 0.0;
    double mass = 0.0;
    double min_value = 0.0;
    double max_value = 0.0;
};

class Trajectory {
public:
    Trajectory(std::vector<ScalarField> snapshots, SolverConfig config,
               std::optional<PotentialSpec> drift, std::optional<SourceTerm> source,
               StepStats stats, std::vector<SnapshotInfo> info);

    const std::vector<ScalarField>& snapshots() const { return snaps_; }
    const ScalarField& front() const { return snaps_.front(); }
    const ScalarField& back() const { return snaps_.back(); }
    const ScalarField& at_time(double t, double tol = 1e-9) const;
    std::vector<double> times() const;

    const SolverConfig& config() const { return cfg_; }
    const std::optional<PotentialSpec>& drift() const { return drift_; }
    const std::optional<SourceTerm>& source() const { return source_; }
    const StepStats& stats() const { return stats_; }
    const std::vector<SnapshotInfo>& snapshot_info() const { return info_; }

private:
    std::vector<ScalarField> snaps_;
    SolverConfig cfg_;
    std::optional<PotentialSpec> drift_;
    std::optional<SourceTerm> source_;
    StepStats stats_;
    std::vector<SnapshotInfo> info_;
};

/// Stable explicit step size:
///   cfl_fraction * min(h^2 / (2 d m max|f|^{m-1}), h / max|grad Phi|_l1),
/// capped at remaining_time; a field with nothing to evolve gets the full
/// remaining time. The l1 gradient norm keeps the 2D upwind update monotone
/// when both limits bind at once.
double cfl_dt(const ScalarField& f, double m, const PotentialSpec* drift,
              double cfl_fraction = 0.45,
              double remaining_time = std::numeric_limits<double>::infinity());

/// One conservative explicit step of rho_t = div(grad(rho^m) + rho grad Phi):
/// centered differences of rho^m, first-order upwinding of the drift on rho,
/// zero-flux box edges. Result clamped at positivity_floor with the clamped
/// mass accumulated into *clamped_mass. Throws SolverAbort on a dt above the
/// monotonicity bound.
ScalarField step_density(const ScalarField& rho, const PotentialSpec& drift, double m,
                         double dt, double positivity_floor = 0.0,
                         double* clamped_mass = nullptr);

/// One conservative explicit step of w_t = div(grad(w |w|^{m-1})) + source.
/// No clamping: w may cross zero.
ScalarField step_signed(const ScalarField& w, double m, const SourceTerm* source, double dt);

/// Time loop with exact landing on snapshot times (dt truncation, never
/// interpolation). density fields evolve with the optional drift; signed
/// fields with the optional source. Aborts with DomainTooSmall when the
/// support enters the guard band, NumericsError on NaN.
Trajectory solve(const ScalarField& initial, const SolverConfig& cfg,
                 const std::optional<PotentialSpec>& drift = std::nullopt,
                 const std::optional<SourceTerm>& source = std::nullopt);

/// Evolves two initial data in lockstep (shared dt = min of the two stability
/// limits each step) and tracks the worst cellwise gap min(upper - lower) over
/// the whole run. The shared monotone update preserves cellwise order exactly
/// up to rounding, provided source_lower <= source_upper pointwise.
struct PairRun {
    Trajectory lower;
    Trajectory upper;
    double min_gap = 0.0; // min over steps and cells of (upper - lower)
};

PairRun solve_pair(const ScalarField& lower, const ScalarField& upper,
                   const SolverConfig& cfg,
                   const std::optional<PotentialSpec>& drift = std::nullopt,
                   const std::optional<SourceTerm>& source_lower = std::nullopt,
                   const std::optional<SourceTerm>& source_upper = std::nullopt);

} // namespace pmelab
