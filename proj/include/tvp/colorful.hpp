#pragma once

// Colorful Caratheodory: given n+1 point sets in R^n whose hulls each contain
// the origin, find one point per set whose hull contains the origin.

#include <cstddef>
#include <optional>
#include <vector>

#include "tvp/geometry.hpp"
#include "tvp/scalar.hpp"

namespace tvp {

struct ColorClasses {
  std::size_t dim = 0;
  std::vector<std::vector<Vector>> classes;

  /// Throws SizeError/DimensionError unless there are dim+1 nonempty classes of
  /// dim-dimensional vectors.
  void validate() const;
};

/// One chosen point per class. The witness, once solved, expresses the origin
/// with `indices` naming colors (not positions inside a class).
struct Transversal {
  std::vector<std::size_t> choice;
  std::optional<WeightedCombination> witness;

  std::vector<Vector> chosen(const ColorClasses& classes) const;
};

/// Convex weights expressing the origin over each class. Throws
/// HypothesisError naming the first class whose hull misses the origin.
std::vector<WeightedCombination> check_centered(const ColorClasses& classes);

struct PivotResult {
  Transversal next;
  Rational distance_sq;
};

/// One distance-decreasing exchange. Requires the origin outside the hull of
/// the current choice. The nearest point z is reduced to an affinely
/// independent support, the smallest color absent from that support is
/// swapped for its point minimizing <p, z> (smallest index on ties), and the
/// new squared distance is returned; it is strictly smaller than before.
PivotResult pivot_step(const ColorClasses& classes, const Transversal& current);

struct ColorfulResult {
  Transversal transversal;
  /// Number of pivots performed.
  std::size_t iterations = 0;
  /// Squared distance of each visited transversal, ending in 0.
  std::vector<Rational> distances;
};

/// Pivots from `start` (first point of every class by default) until the
/// origin lies in the chosen hull. Checks the centering hypothesis first.
ColorfulResult colorful_caratheodory(const ColorClasses& classes,
                                     std::optional<Transversal> start = std::nullopt);

/// prod |M_i|, saturating at SIZE_MAX.
std::size_t transversal_count(const ColorClasses& classes);

}  // namespace tvp
