#include "pmelab/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pmelab {

std::string to_string(PotentialForm f) {
    switch (f) {
    case PotentialForm::none: return "none";
    case PotentialForm::quadratic: return "quadratic";
    case PotentialForm::scaled_quadratic: return "scaled_quadratic";
    case PotentialForm::cosine_well: return "cosine_well";
    case PotentialForm::polynomial: return "polynomial";
    }
    return "unknown";
}

PotentialForm potential_form_from_string(const std::string& s) {
    if (s == "none") return PotentialForm::none;
    if (s == "quadratic") return PotentialForm::quadratic;
    if (s == "scaled_quadratic") return PotentialForm::scaled_quadratic;
    if (s == "cosine_well") return PotentialForm::cosine_well;
    if (s == "polynomial") return PotentialForm::polynomial;
    throw std::invalid_argument("unknown potential form: " + s);
}

PotentialSpec PotentialSpec::none() { return PotentialSpec(); }

PotentialSpec PotentialSpec::quadratic(Pt center) {
    PotentialSpec p;
    p.form_ = PotentialForm::quadratic;
    p.center_ = center;
    p.b_ = 1.0;
    return p;
}

PotentialSpec PotentialSpec::scaled_quadratic(double b, Pt center) {
    PotentialSpec p;
    p.form_ = PotentialForm::scaled_quadratic;
    p.center_ = center;
    p.b_ = b;
    return p;
}

PotentialSpec PotentialSpec::cosine_well(double amp, double omega, Pt center) {
    if (amp < 0.0 || omega <= 0.0)
        throw std::invalid_argument("cosine_well: need amp >= 0, omega > 0");
    PotentialSpec p;
    p.form_ = PotentialForm::cosine_well;
    p.center_ = center;
    p.amp_ = amp;
    p.omega_ = omega;
    return p;
}

PotentialSpec PotentialSpec::polynomial(std::vector<double> coeffs_of_r2, Pt center) {
    PotentialSpec p;
    p.form_ = PotentialForm::polynomial;
    p.center_ = center;
    p.coeffs_ = std::move(coeffs_of_r2);
    return p;
}

double PotentialSpec::value(const Pt& x, int dim) const {
    switch (form_) {
    case PotentialForm::none: return 0.0;
    case PotentialForm::quadratic:
    case PotentialForm::scaled_quadratic: {
        double r2 = 0.0;
        for (int k = 0; k < dim; ++k) r2 += (x[k] - center_[k]) * (x[k] - center_[k]);
        return 0.5 * b_ * r2;
    }
    case PotentialForm::cosine_well: {
        double s = 0.0;
        for (int k = 0; k < dim; ++k) s += 1.0 - std::cos(omega_ * (x[k] - center_[k]));
        return amp_ * s;
    }
    case PotentialForm::polynomial: {
        double r2 = 0.0;
        for (int k = 0; k < dim; ++k) r2 += (x[k] - center_[k]) * (x[k] - center_[k]);
        double s = 0.0, p = 1.0;
        for (double c : coeffs_) {
            s += c * p;
            p *= r2;
        }
        return s;
    }
    }
    return 0.0;
}

Pt PotentialSpec::gradient(const Pt& x, int dim) const {
    Pt g;
    switch (form_) {
    case PotentialForm::none: break;
    case PotentialForm::quadratic:
    case PotentialForm::scaled_quadratic:
        for (int k = 0; k < dim; ++k) g[k] = b_ * (x[k] - center_[k]);
        break;
    case PotentialForm::cosine_well:
        for (int k = 0; k < dim; ++k) g[k] = amp_ * omega_ * std::sin(omega_ * (x[k] - center_[k]));
        break;
    case PotentialForm::polynomial: {
        double r2 = 0.0;
        for (int k = 0; k < dim; ++k) r2 += (x[k] - center_[k]) * (x[k] - center_[k]);
        // d/dx_k sum c_j (r^2)^j = (sum c_j j (r^2)^(j-1)) * 2 (x_k - c_k)
        double s = 0.0, p = 1.0;
        for (std::size_t j = 1; j < coeffs_.size(); ++j) {
            s += coeffs_[j] * static_cast<double>(j) * p;
            p *= r2;
        }
        for (int k = 0; k < dim; ++k) g[k] = 2.0 * s * (x[k] - center_[k]);
        break;
    }
    }
    return g;
}

double PotentialSpec::laplacian(const Pt& x, int dim) const {
    switch (form_) {
    case PotentialForm::none: return 0.0;
    case PotentialForm::quadratic:
    case PotentialForm::scaled_quadratic: return b_ * dim;
    case PotentialForm::cosine_well: {
        double s = 0.0;
        for (int k = 0; k < dim; ++k) s += std::cos(omega_ * (x[k] - center_[k]));
        return amp_ * omega_ * omega_ * s;
    }
    case PotentialForm::polynomial: {
        double r2 = 0.0;
        for (int k = 0; k < dim; ++k) r2 += (x[k] - center_[k]) * (x[k] - center_[k]);
        // Laplacian of (r^2)^j = 2j (dim + 2(j-1)) (r^2)^(j-1)
        double s = 0.0, p = 1.0;
        for (std::size_t j = 1; j < coeffs_.size(); ++j) {
            const double jd = static_cast<double>(j);
            s += coeffs_[j] * 2.0 * jd * (dim + 2.0 * (jd - 1.0)) * p;
            p *= r2;
        }
        return s;
    }
    }
    return 0.0;
}

double PotentialSpec::c2_norm_bound(const RegionBall& ball, int dim) const {
    const double R = distance(ball.center, center_, dim) + ball.radius;
    switch (form_) {
    case PotentialForm::none: return 0.0;
    case PotentialForm::quadratic:
    case PotentialForm::scaled_quadratic:
        return std::abs(b_) * (0.5 * R * R + R + 1.0);
    case PotentialForm::cosine_well:
        return amp_ * (2.0 * dim + omega_ * std::sqrt(static_cast<double>(dim)) +
                       omega_ * omega_);
    case PotentialForm::polynomial: {
        double s = 0.0, p = 1.0; // p = R^(2(j-1)) below where needed
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            const double jd = static_cast<double>(j);
            const double a = std::abs(coeffs_[j]);
            const double R2j = std::pow(R, 2.0 * jd);
            s += a * R2j;
            if (j >= 1) {
                s += a * 2.0 * jd * std::pow(R, 2.0 * jd - 1.0);
                s += a * 2.0 * jd * (2.0 * jd - 1.0) * std::pow(R, 2.0 * jd - 2.0);
            }
        }
        (void)p;
        return s;
    }
    }
    return 0.0;
}

double PotentialSpec::d3_bound(double R, int dim) const {
    switch (form_) {
    case PotentialForm::none:
    case PotentialForm::quadratic:
    case PotentialForm::scaled_quadratic: return 0.0;
    case PotentialForm::cosine_well: return amp_ * omega_ * omega_ * omega_;
    case PotentialForm::polynomial: {
        double s = 0.0;
        for (std::size_t j = 2; j < coeffs_.size(); ++j) {
            const double jd = static_cast<double>(j);
            s += std::abs(coeffs_[j]) * 2.0 * jd * (2.0 * jd - 1.0) * (2.0 * jd - 2.0) *
                 std::pow(R, 2.0 * jd - 3.0);
        }
        (void)dim;
        return s;
    }
    }
    return 0.0;
}

double PotentialSpec::d4_bound(double R, int dim) const {
    switch (form_) {
    case PotentialForm::none:
    case PotentialForm::quadratic:
    case PotentialForm::scaled_quadratic: return 0.0;
    case PotentialForm::cosine_well: return amp_ * std::pow(omega_, 4.0);
    case PotentialForm::polynomial: {
        double s = 0.0;
        for (std::size_t j = 2; j < coeffs_.size(); ++j) {
            const double jd = static_cast<double>(j);
            double f = 2.0 * jd * (2.0 * jd - 1.0) * (2.0 * jd - 2.0);
            if (2.0 * jd - 3.0 > 0.0) f *= (2.0 * jd - 3.0);
            s += std::abs(coeffs_[j]) * f * std::pow(R, std::max(2.0 * jd - 4.0, 0.0));
        }
        (void)dim;
        return s;
    }
    }
    return 0.0;
}

double PotentialSpec::fd_consistency_error(const Grid& grid) const {
    const int dim = grid.dim();
    const double h = grid.h();
    double worst = 0.0;
    for (std::size_t c = 0; c < grid.cell_count(); ++c) {
        const Pt x = grid.center(c);
        const Pt g = gradient(x, dim);
        double lap_fd = 0.0;
        bool interior = true;
        for (int k = 0; k < dim; ++k) {
            Pt xp = x, xm = x;
            xp[k] += h;
            xm[k] -= h;
            if (xp[k] > grid.upper() || xm[k] < grid.lower()) {
                interior = false;
                break;
            }
            const double vp = value(xp, dim), vm = value(xm, dim);
            worst = std::max(worst, std::abs((vp - vm) / (2.0 * h) - g[k]));
            lap_fd += (vp - 2.0 * value(x, dim) + vm) / (h * h);
        }
        if (interior) worst = std::max(worst, std::abs(lap_fd - laplacian(x, dim)));
    }
    return worst;
}

} // namespace pmelab
