#pragma once

#include <functional>
#include <vector>

#include "pmelab/field.hpp"
#include "pmelab/geometry.hpp"

namespace pmelab {

/// Self-similar pressure profile
///   U(x, t) = (C (t+th)^{2 lambda} - (lambda/2) |x - center|^2)_+ / (t + th)
/// with lambda = 1/((m-1) d + 2). An exact solution of the drift-free
/// pressure equation u_t = (m-1) u Lap(u) + |Du|^2 on its positivity set.
struct BarenblattParams {
    double C = 1.0;
    double lambda = 0.25;
    Pt center;
    double time_offset = 1.0;

    void validate() const; // C > 0, 0 < lambda < 1/2
};

/// Exponent 1/((m-1) d + 2); asserts the result stays below 1/2 for m > 1.
double lambda_exponent(double m, int d);

double barenblatt_pressure(const BarenblattParams& p, const Pt& x, double t, int dim);
Pt barenblatt_pressure_gradient(const BarenblattParams& p, const Pt& x, double t, int dim);
double barenblatt_support_radius(const BarenblattParams& p, double t);
double barenblatt_peak(const BarenblattParams& p, double t);

/// Envelope c(t) = sqrt(C) (t+th)^{lambda-1} bounding a*U and |DU|.
double barenblatt_envelope(const BarenblattParams& p, double t);

/// Sampled density profile matching the pressure U via the exponent m.
ScalarField barenblatt_density_field(const BarenblattParams& p, double m, const Grid& grid,
                                     double t);
ScalarField barenblatt_pressure_field(const BarenblattParams& p, const Grid& grid, double t);

/// Drained barrier: (U(x - center, t) - drainage(t))_+ with the drainage
/// integral 2 C1 a int_0^t c(s) ds in closed form.
struct BarrierParams {
    BarenblattParams base;
    double C1 = 0.0;
    double a = 0.0;

    void validate() const;
};

double drainage(const BarrierParams& bp, double t);
double barrier_eval(const BarrierParams& bp, const Pt& x, double t, int dim);

/// Time at which the drainage term swallows the profile peak (barrier becomes
/// identically zero); +inf when it never does before max_t.
double barrier_death_time(const BarrierParams& bp, double max_t);

struct GradientBoundReport {
    double max_aU_minus_c = 0.0; // max over samples of a*U - c(t)
    double max_DU_minus_c = 0.0; // max over samples of |DU| - c(t)
    double slack = 0.0;
    bool pass = false;
};

/// Samples a*U and |DU| over the positivity set for t in [0, t_max] and
/// compares against the envelope c(t). PASS means both stay below c(t) up to
/// the numerical slack (10 h by default).
GradientBoundReport gradient_bound_check(const BarenblattParams& p, double a, double t_max,
                                         const Grid& grid, int time_samples = 33,
                                         double slack = -1.0);

/// Space-time scalar function with an optional validity box/time window; the
/// residual sweep evaluates a centered stencil around each sample.
struct SpaceTimeFn {
    std::function<double(const Pt&, double)> eval;
    double t_min = -0.5; // closed forms here are defined for t + offset > 0
    double t_max = std::numeric_limits<double>::infinity();
};

SpaceTimeFn barenblatt_fn(const BarenblattParams& p, int dim);
SpaceTimeFn barrier_fn(const BarrierParams& bp, int dim);

struct ResidualReport {
    double max_residual = -std::numeric_limits<double>::infinity();
    double max_abs_residual = 0.0;
    std::size_t cells_evaluated = 0;
    std::vector<std::pair<double, double>> per_time_max; // (t, max residual at t)
    std::vector<ScalarField> fields;                     // kept when requested
};

/// Central-difference residual of the drifted pressure operator,
///   R = f_t - (m-1) f Lap(f) - |Df|^2 + C1 a (|Df| + a f),
/// evaluated on cells where f > delta. A subsolution certificate is
/// max R <= tol(h, dt). Throws std::domain_error when the stencil leaves the
/// function's declared time window.
ResidualReport residual_pressure_operator(const SpaceTimeFn& fn, double m, double C1,
                                          double a, const Grid& grid,
                                          const std::vector<double>& times, double delta,
                                          double fd_dt, bool keep_fields = false);

} // namespace pmelab
