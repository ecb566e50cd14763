#pragma once

#include "pmelab/field.hpp"
#include "pmelab/mask.hpp"

namespace pmelab {

/// Cell-sum (midpoint) quadrature: h^d * sum of values. Matches the
/// conservative solver exactly, so discrete mass balance is an identity.
double mass(const ScalarField& f);

/// radius^{-d} * integral of f over cells whose center lies in the ball.
/// Throws std::invalid_argument when no cell center lies in the ball.
double ball_average(const ScalarField& f, const RegionBall& ball);

/// Mask of cells with value strictly above the threshold.
CellMask support(const ScalarField& f, double threshold);

/// Same with the default threshold 1e-8 * max|f| (explicit schemes leave
/// round-off tails).
CellMask support(const ScalarField& f);

double default_support_threshold(const ScalarField& f);

/// sup over cells of A of the distance to the nearest cell of B, between cell
/// centers. Returns +infinity when B is empty. Throws when A is empty.
double one_sided_distance(const CellMask& a, const CellMask& b);

/// max of the two one-sided distances.
double hausdorff_distance(const CellMask& a, const CellMask& b);

/// Largest center distance from origin_center over cells with |f| > threshold;
/// 0 when none. Used for support-growth tracking and the box-edge guard.
double support_extent(const ScalarField& f, const Pt& origin, double threshold);

/// Smallest distance from any cell with |f| > threshold to the box edge.
double support_edge_clearance(const ScalarField& f, double threshold);

double min_over_ball(const ScalarField& f, const RegionBall& ball);
double max_over_ball(const ScalarField& f, const RegionBall& ball);

} // namespace pmelab
