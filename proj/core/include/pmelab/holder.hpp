#pragma once

#include <optional>

#include "pmelab/field.hpp"
#include "pmelab/geometry.hpp"

namespace pmelab {

/// Empirical Hoelder exponent: least-squares slope of log oscillation against
/// log radius over dyadic radii (multiples of the spacing), restricted to the
/// given ball when one is supplied. 2D windows are sup-metric balls (squares).
/// The result is clamped into (0, 1]. Throws ConfigError for constant fields
/// or when fewer than 3 radii produce a positive oscillation.
double estimate_holder(const ScalarField& f, const std::optional<RegionBall>& restrict_to,
                       int max_radii = 8);

} // namespace pmelab
