#pragma once

#include <string>
#include <vector>

#include "pmelab/grid.hpp"

namespace pmelab {

enum class FieldKind { density, pressure, signed_value };

std::string to_string(FieldKind k);
FieldKind field_kind_from_string(const std::string& s);

/// Cell-centered grid function. Value semantics; immutable by convention once
/// handed to a consumer (steppers return fresh fields).
class ScalarField {
public:
    ScalarField(Grid grid, FieldKind kind, double time_stamp = 0.0)
        : grid_(grid), kind_(kind), time_(time_stamp),
          values_(grid.cell_count(), 0.0) {}

    ScalarField(Grid grid, FieldKind kind, std::vector<double> values, double time_stamp = 0.0);

    const Grid& grid() const { return grid_; }
    FieldKind kind() const { return kind_; }
    double time_stamp() const { return time_; }
    void set_time_stamp(double t) { time_ = t; }

    double pressure_cap() const { return pressure_cap_; }
    void set_pressure_cap(double cap) { pressure_cap_ = cap; }

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    double min_value() const;
    double max_value() const;
    double max_abs() const;
    bool all_finite() const;

    /// Throws std::invalid_argument when a kind-specific range invariant is
    /// violated (negative density, pressure above the cap, non-finite entries).
    void check_invariants(double tol = 1e-12) const;

private:
    Grid grid_;
    FieldKind kind_;
    double time_;
    double pressure_cap_ = 1.0;
    std::vector<double> values_;
};

/// Builds a field by evaluating fn at every cell center.
template <typename Fn>
ScalarField sample_field(const Grid& grid, FieldKind kind, double time, Fn&& fn) {
    ScalarField f(grid, kind, time);
    for (std::size_t c = 0; c < grid.cell_count(); ++c) f[c] = fn(grid.center(c));
    return f;
}

} // namespace pmelab
