#include "pmelab/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pmelab {

std::string to_string(FieldKind k) {
    switch (k) {
    case FieldKind::density: return "density";
    case FieldKind::pressure: return "pressure";
    case FieldKind::signed_value: return "signed";
    }
    return "unknown";
}

FieldKind field_kind_from_string(const std::string& s) {
    if (s == "density") return FieldKind::density;
    if (s == "pressure") return FieldKind::pressure;
    if (s == "signed") return FieldKind::signed_value;
    throw std::invalid_argument("unknown field kind: " + s);
}

ScalarField::ScalarField(Grid grid, FieldKind kind, std::vector<double> values,
                         double time_stamp)
    : grid_(grid), kind_(kind), time_(time_stamp), values_(std::move(values)) {
    if (values_.size() != grid_.cell_count())
        throw std::invalid_argument("field: value count does not match grid");
}

double ScalarField::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double ScalarField::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool ScalarField::all_finite() const {
    for (double v : values_)
        if (!std::isfinite(v)) return false;
    return true;
}

void ScalarField::check_invariants(double tol) const {
    if (!all_finite()) throw std::invalid_argument("field: non-finite value");
    if (kind_ == FieldKind::density) {
        if (min_value() < -tol) throw std::invalid_argument("density field: negative value");
    } else if (kind_ == FieldKind::pressure) {
        if (min_value() < -tol) throw std::invalid_argument("pressure field: negative value");
        if (max_value() > pressure_cap_ * (1.0 + 1e-9) + tol)
            throw std::invalid_argument("pressure field: value above cap");
    }
}

} // namespace pmelab
