#include "pmelab/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "pmelab/errors.hpp"
#include "pmelab/measure.hpp"
#include "pmelab/transforms.hpp"

namespace pmelab {

namespace {

ScalarField pressure_profile(const PotentialSpec& phi, double cbar, const Grid& grid) {
    ScalarField u = sample_field(grid, FieldKind::pressure, 0.0, [&](const Pt& x) {
        const double v = cbar - phi.value(x, grid.dim());
        return v > 0.0 ? v : 0.0;
    });
    u.set_pressure_cap(std::max(1.0, u.max_value()));
    return u;
}

double mass_at(const PotentialSpec& phi, double cbar, const Grid& grid, double m) {
    return mass(density_of_pressure(pressure_profile(phi, cbar, grid), m));
}

} // namespace

EquilibriumProfile compute_equilibrium(const PotentialSpec& potential, double mass_target,
                                       const Grid& grid, double m) {
    if (!(mass_target > 0.0)) throw ConfigError("equilibrium: mass_target must be > 0");
    if (!(m > 1.0)) throw ConfigError("equilibrium: m must be > 1");

    double phi_min = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < grid.cell_count(); ++c)
        phi_min = std::min(phi_min, potential.value(grid.center(c), grid.dim()));

    double lo = phi_min, hi = phi_min + 1.0;
    int expand = 0;
    while (mass_at(potential, hi, grid, m) < mass_target) {
        hi = phi_min + 2.0 * (hi - phi_min);
        if (++expand > 60)
            throw ConfigError("equilibrium: mass_target unreachable on this box");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double mm = mass_at(potential, mid, grid, m);
        if (std::abs(mm - mass_target) <= 1e-10 * mass_target) {
            lo = hi = mid;
            break;
        }
        (mm < mass_target ? lo : hi) = mid;
    }
    const double cbar = 0.5 * (lo + hi);
    EquilibriumProfile eq{pressure_profile(potential, cbar, grid), cbar, mass_target};
    return eq;
}

} // namespace pmelab
