#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tvp/geometry.hpp"

namespace tvp {

/// Two-part partition of d+2 points with intersecting hulls. `weights` is
/// indexed by point; each group's weights sum to 1 and both groups combine
/// to `common_point`.
struct RadonCertificate {
  std::vector<std::size_t> group1;
  std::vector<std::size_t> group2;
  std::vector<Rational> weights;
  Point common_point;

  friend bool operator==(const RadonCertificate&, const RadonCertificate&) = default;
};

/// Splits exactly d+2 points by the sign of a linear dependence among their
/// lifts. Indices with a zero coefficient go to group1 with zero weight.
RadonCertificate radon_partition(std::span<const Point> points);

}  // namespace tvp
