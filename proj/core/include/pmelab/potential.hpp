#pragma once

#include <string>
#include <vector>

#include "pmelab/geometry.hpp"
#include "pmelab/grid.hpp"

namespace pmelab {

enum class PotentialForm {
    none,             // no drift
    quadratic,        // |x - c|^2 / 2
    scaled_quadratic, // b |x - c|^2 / 2
    cosine_well,      // amp * sum_k (1 - cos(omega (x_k - c_k)))
    polynomial        // sum_j coeff[j] * |x - c|^(2j)
};

std::string to_string(PotentialForm f);
PotentialForm potential_form_from_string(const std::string& s);

/// Closed-form drift potential with mutually consistent evaluators for the
/// value, gradient and Laplacian, plus conservative bounds used for CFL
/// control and for the drift constant derived from the C^2 norm.
class PotentialSpec {
public:
    PotentialSpec() : form_(PotentialForm::none) {}

    static PotentialSpec none();
    static PotentialSpec quadratic(Pt center = Pt());
    static PotentialSpec scaled_quadratic(double b, Pt center = Pt());
    static PotentialSpec cosine_well(double amp, double omega, Pt center = Pt());
    static PotentialSpec polynomial(std::vector<double> coeffs_of_r2, Pt center = Pt());

    PotentialForm form() const { return form_; }
    bool is_none() const { return form_ == PotentialForm::none; }
    const Pt& center() const { return center_; }
    double param_b() const { return b_; }
    double param_amp() const { return amp_; }
    double param_omega() const { return omega_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    double value(const Pt& x, int dim) const;
    Pt gradient(const Pt& x, int dim) const;
    double laplacian(const Pt& x, int dim) const;

    /// sup over the ball of |Phi| + |DPhi| + |D2Phi| (operator norm bound).
    double c2_norm_bound(const RegionBall& ball, int dim) const;

    /// Bounds on third/fourth derivatives over |x - c| <= R, used to budget
    /// the finite-difference consistency checks.
    double d3_bound(double R, int dim) const;
    double d4_bound(double R, int dim) const;

    /// Central-difference check of gradient/Laplacian against the analytic
    /// evaluators on the grid; returns the worst absolute mismatch.
    double fd_consistency_error(const Grid& grid) const;

private:
    PotentialForm form_;
    Pt center_;
    double b_ = 1.0;
    double amp_ = 1.0;
    double omega_ = 1.0;
    std::vector<double> coeffs_;
};

} // namespace pmelab
