#pragma once

#include <vector>

#include "pmelab/field.hpp"
#include "pmelab/solver.hpp"

namespace pmelab {

/// Parameters of the space-time rescalings and the tilted-exponent transform.
struct TransformParams {
    double a = 1.0;   // scale, > 0
    Pt x0;            // spatial anchor
    double t0 = 0.0;  // temporal anchor
    double C1 = 0.0;  // drift constant, >= 0
    double m = 2.0;

    void validate() const;
    /// C1 * a must stay below min(1, 2 - m) for the tilted exponent to remain
    /// below 2; throws RegimeError otherwise.
    void validate_tilted_regime() const;
};

/// u = (m/(m-1)) rho^{m-1}, cellwise. 0 maps to 0 for m > 1.
ScalarField pressure_of_density(const ScalarField& rho, double m);

/// rho = ((m-1)/m * u)^{1/(m-1)}, cellwise.
ScalarField density_of_pressure(const ScalarField& u, double m);

/// Tilted exponent (m-1)/(1 - C1a) + 1; strictly above m for C1a > 0.
/// With require_below_two set, throws RegimeError when the result reaches 2.
double mtilde(double m, double C1a, bool require_below_two = false);

/// Cellwise multiplication by (1 - C1a).
ScalarField ubar_transform(const ScalarField& u, double C1a);

/// k = 2 / (m (n+1)); equals 1/(n+1) at m = 2.
double lemma35_exponent(double m, int n);

/// Space-time resampling of a pressure trajectory:
///   u_res(x, t) = u(a (x - x0), a^2 (t - t0)),
/// multilinear in space, linear in time between snapshots. Throws
/// std::domain_error naming the offending (x, t) when a mapped point leaves
/// the sampled domain.
Trajectory parabolic_rescale(const Trajectory& traj, const TransformParams& p,
                             const Grid& target_grid, const std::vector<double>& target_times);

/// Density-form scaling rho_res(x, t) = a^{-1} rho(a^{m/2} x, a t), same
/// interpolation rules.
Trajectory lemma35_rescale(const Trajectory& traj, double a, double m,
                           const Grid& target_grid, const std::vector<double>& target_times);

/// Multilinear sample of a single field at point y (cell-center hull only).
double sample_multilinear(const ScalarField& f, const Pt& y);

/// Converts every snapshot of a density trajectory to pressure form (or back).
Trajectory to_pressure(const Trajectory& density_traj, double m);
Trajectory to_density(const Trajectory& pressure_traj, double m);

} // namespace pmelab
