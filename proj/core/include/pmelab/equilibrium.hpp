#pragma once

#include "pmelab/field.hpp"
#include "pmelab/potential.hpp"

namespace pmelab {

/// Stationary pressure profile u = (Cbar - Phi)_+ matched to a prescribed
/// density mass.
struct EquilibriumProfile {
    ScalarField pressure;  // (Cbar - Phi)_+ sampled on the grid
    double Cbar = 0.0;
    double mass_target = 0.0;
};

/// Bisection on Cbar so that the discrete mass of the corresponding density
/// ((m-1)/m (Cbar - Phi)_+)^{1/(m-1)} matches mass_target to 1e-10 relative.
/// Throws ConfigError when the target is unreachable on the box.
EquilibriumProfile compute_equilibrium(const PotentialSpec& potential, double mass_target,
                                       const Grid& grid, double m);

} // namespace pmelab
