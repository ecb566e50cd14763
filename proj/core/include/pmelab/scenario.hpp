#pragma once

#include <string>

#include "pmelab/equilibrium.hpp"
#include "pmelab/potential.hpp"
#include "pmelab/solver.hpp"

namespace pmelab {

struct GridSpec {
    double lower = -4.0;
    double upper = 4.0;
    int cells = 512;

    Grid make(int dim) const { return Grid(dim, lower, upper, cells); }
};

enum class InitialKind {
    zero,
    bump,              // A (1 - |x-c|^2/R^2)_+, A from height or mass or auto
    barenblatt,        // density matching the self-similar pressure profile
    capped_indicator,  // unit-pressure density cap times the indicator of B_R(c)
    scaled_equilibrium,// density of (cbar - s Phi)_+ : flatter than equilibrium
    equilibrium        // mass-matched stationary profile itself
};

std::string to_string(InitialKind k);
InitialKind initial_kind_from_string(const std::string& s);

struct InitialSpec {
    InitialKind kind = InitialKind::bump;
    double radius = 1.0;
    double height = -1.0;      // < 0: derive from mass (or scenario hypothesis)
    double mass = -1.0;        // > 0: normalize the profile to this mass
    Pt center;
    double cbar = 0.5;          // scaled_equilibrium
    double pressure_scale = 0.5;
    double barenblatt_C = 1.0;
};

struct OutputSpec {
    bool write_fields = true;
    bool write_svg = true;
    std::string mass_check = "auto"; // auto | on | off
};

/// Everything a scenario run needs, with every constant exposed. Members with
/// negative sentinels resolve to documented defaults derived from the others.
struct ScenarioConfig {
    double m = 1.5;
    int dim = 1;
    PotentialSpec potential = PotentialSpec::quadratic();
    double a = 0.1;
    double k = 0.3;
    double k_prime = -1.0; // < 0: 1 - lambda(m, dim)
    double gamma = 0.5;    // assumed Hoelder exponent, in (0,1)
    double c0 = 1e-2;
    double C1 = -1.0;      // < 0: potential C^2 bound over the unit ball at x0
    double C2 = -1.0;      // < 0: 2 C1 / (mtilde - 1)
    Pt x0;
    double t0 = 0.0;
    double t1 = 0.0;
    double hypothesis_radius = 2.0; // small-mass hypothesis ball (decay runs)
    double kappa_radius = -1.0;     // compact-support box; < 0: hypothesis_radius + 1
    GridSpec grid;
    SolverConfig solver;
    InitialSpec initial;
    OutputSpec output;
    unsigned seed = 12345;

    double resolved_C1() const;
    double resolved_C2() const;
    double resolved_k_prime() const;
    double resolved_kappa_radius() const;
    double mtilde_value() const; // tilted exponent at C1 a

    void validate_common() const;
    /// 1 < m < 2, gamma in (0,1), 0 < k < 1, and C1 a below 2 - m so the
    /// tilted exponent stays below 2. Throws RegimeError with the violated
    /// inequality spelled out.
    void validate_lemma34_regime() const;
};

/// Density cap whose pressure is exactly 1: ((m-1)/m)^{1/(m-1)}.
double unit_pressure_density(double m);

/// Builds the initial density field described by cfg.initial.
ScalarField make_initial_data(const ScenarioConfig& cfg);

/// Bump centered at x0 with support radius 2a, scaled so the discrete ball
/// average over B_a(x0) sits just above a^k.
ScalarField lemma34_hypothesis_data(const ScenarioConfig& cfg);

} // namespace pmelab
