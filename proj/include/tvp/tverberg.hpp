#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tvp/colorful.hpp"
#include "tvp/geometry.hpp"

namespace tvp {

/// r groups covering [N] whose weighted combinations coincide.
/// `weights` is indexed by point.
struct PartitionCertificate {
  std::size_t r = 0;
  std::vector<std::vector<std::size_t>> groups;
  std::vector<Rational> weights;
  Point common_point;
  /// Pivots taken by the colorful solver.
  std::size_t iterations = 0;

  /// Per-group indices with strictly positive weight.
  std::vector<std::vector<std::size_t>> positive_support() const;

  friend bool operator==(const PartitionCertificate&, const PartitionCertificate&) = default;
};

/// (d+1)(r-1)+1
std::size_t tverberg_count(std::size_t d, std::size_t r);

/// phi_{1,i}, ..., phi_{r,i} for one lifted point.
std::vector<Vector> phi_class(const LiftedPoint& p, std::size_t r);

/// Color classes M_i = {phi_{1,i}, ..., phi_{r,i}} in R^{(d+1)(r-1)}.
/// For j < r, phi_{j,i} holds the lifted point in block j (coordinates
/// [(j-1)(d+1), j(d+1))) and zeros elsewhere; phi_{r,i} repeats the negated
/// lifted point in every block, so each class sums to zero.
ColorClasses build_phi(std::span<const LiftedPoint> lifted, std::size_t r);

/// Divides every group's weights by that group's total (all totals must be
/// equal and positive) and recomputes the common point.
PartitionCertificate normalize_groups(std::span<const Point> points, PartitionCertificate cert);

/// Partition of (d+1)(r-1)+1 points into r groups with a common hull point,
/// read off from a colorful transversal of the phi classes.
PartitionCertificate tverberg_partition(std::span<const Point> points, std::size_t r);

}  // namespace tvp
