#pragma once

#include <optional>
#include <span>

#include "tvp/geometry.hpp"
#include "tvp/scalar.hpp"

namespace tvp {

/// Nearest point of conv(points) to the origin, with the combination that
/// produces it. Optimality holds exactly: <v, point> >= distance_sq for
/// every input v.
struct MinNormResult {
  Vector point;
  WeightedCombination combination;
  Rational distance_sq;
};

/// Wolfe's min-norm-point method in exact arithmetic. Starts from the input
/// point of smallest norm (smallest index on ties); entering points are the
/// smallest-index minimizers of <v, x>. The combination lists the final
/// corral in ascending index order.
MinNormResult min_norm_point(std::span<const Vector> points);

/// Reference answer by enumerating every affinely independent subset,
/// projecting the origin onto its affine hull and keeping the closest
/// projection with nonnegative weights. Ties go to the lexicographically
/// smallest support. Exponential; meant for a dozen points at most.
MinNormResult min_norm_bruteforce(std::span<const Vector> points);

/// Exact convex weights expressing q over `points`, or nullopt when q lies
/// outside their hull. Membership is decided by distance_sq == 0 after
/// translating q to the origin.
std::optional<WeightedCombination> point_in_hull(const Vector& q, std::span<const Vector> points);

/// True when <v, z> >= <z, z> for every v.
bool satisfies_optimality(const MinNormResult& result, std::span<const Vector> points);

}  // namespace tvp
