#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tvp/scalar.hpp"

namespace tvp {

/// Input point in R^d. d = 0 is allowed (the single point of R^0).
struct Point {
  Vector coords;

  std::size_t dim() const { return coords.dim(); }
  friend bool operator==(const Point&, const Point&) = default;
};

/// A point with a trailing coordinate fixed to 1.
class LiftedPoint {
public:
  /// Throws ContractError unless the last coordinate is exactly 1.
  explicit LiftedPoint(Vector coords);

  const Vector& coords() const { return coords_; }
  std::size_t dim() const { return coords_.dim(); }
  /// Drops the trailing 1.
  Point project() const;

private:
  Vector coords_;
};

LiftedPoint lift(const Point& p);

/// Convex combination sum_k weights[k] * host[indices[k]] over some host list.
struct WeightedCombination {
  std::vector<std::size_t> indices;
  std::vector<Rational> weights;
  Vector value;

  /// Weight of host index i (zero when absent).
  Rational weight_of(std::size_t host_index) const;
  /// Weights laid out over all `host_size` host indices.
  std::vector<Rational> dense(std::size_t host_size) const;
  /// Indices carrying a strictly positive weight, ascending.
  std::vector<std::size_t> support() const;
};

/// sum_k weights[k] * host[indices[k]]; checks indices and dimensions.
Vector combine(std::span<const Vector> host, std::span<const std::size_t> indices,
               std::span<const Rational> weights);

/// True when indices are distinct and in range, weights are nonnegative and sum
/// to one, and value is the stated combination.
bool is_valid_combination(const WeightedCombination& comb, std::span<const Vector> host);

/// Rewrites `comb` (which must equal `target`) over an affinely independent
/// subset of its indices. Each step moves the weights along an affine
/// dependence until one hits zero and removes exactly that index; when several
/// reach zero at once the largest index goes and the others stay with weight
/// zero. An already independent input is returned unchanged.
WeightedCombination caratheodory_reduce(const Vector& target, const WeightedCombination& comb,
                                        std::span<const Vector> host);

}  // namespace tvp
