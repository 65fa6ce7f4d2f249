#include "tvp/colorful.hpp"

#include <limits>
#include <string>

#include "tvp/error.hpp"
#include "tvp/minnorm.hpp"

namespace tvp {

void ColorClasses::validate() const {
  if (classes.size() != dim + 1) {
    throw SizeError("colorful Caratheodory in R^" + std::to_string(dim) + " needs " + std::to_string(dim + 1) +
                    " color classes, got " + std::to_string(classes.size()));
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].empty()) throw SizeError("color class " + std::to_string(k + 1) + " is empty");
    require_dim(classes[k], dim, "color class " + std::to_string(k + 1));
  }
}

std::vector<Vector> Transversal::chosen(const ColorClasses& classes) const {
  if (choice.size() != classes.classes.size()) throw ContractError("transversal has the wrong number of choices");
  std::vector<Vector> out;
  out.reserve(choice.size());
  for (std::size_t k = 0; k < choice.size(); ++k) {
    if (choice[k] >= classes.classes[k].size()) throw ContractError("transversal choice out of range");
    out.push_back(classes.classes[k][choice[k]]);
  }
  return out;
}

std::vector<WeightedCombination> check_centered(const ColorClasses& classes) {
  classes.validate();
  const Vector origin = Vector::zeros(classes.dim);
  std::vector<WeightedCombination> out;
  out.reserve(classes.classes.size());
  for (std::size_t k = 0; k < classes.classes.size(); ++k) {
    auto comb = point_in_hull(origin, classes.classes[k]);
    if (!comb) {
      throw HypothesisError(k, "the origin is not in the convex hull of color class " + std::to_string(k + 1));
    }
    out.push_back(std::move(*comb));
  }
  return out;
}

std::size_t transversal_count(const ColorClasses& classes) {
  std::size_t total = 1;
  for (const auto& c : classes.classes) {
    if (c.size() != 0 && total > std::numeric_limits<std::size_t>::max() / c.size()) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= c.size();
  }
  return total;
}

namespace {

struct Exchange {
  Transversal next;
  MinNormResult nearest;
};

Exchange exchange(const ColorClasses& classes, const Transversal& current, const MinNormResult& nearest) {
  if (nearest.distance_sq.is_zero()) {
    throw ContractError("pivot_step: the origin already lies in the hull of the transversal");
  }
  const auto chosen = current.chosen(classes);
  const Vector& z = nearest.point;
  WeightedCombination reduced = caratheodory_reduce(z, nearest.combination, chosen);
  const auto support = reduced.support();
  // z != 0 is on the boundary of the hull, so at most n points carry weight.
  if (support.size() > classes.dim) {
    throw ContractError("pivot_step: reduced support has " + std::to_string(support.size()) + " > n points");
  }

  std::size_t color = 0;
  for (std::size_t s : support) {
    if (s != color) break;
    ++color;
  }

  const auto& pool = classes.classes[color];
  std::size_t pick = 0;
  Rational lowest = dot(pool[0], z);
  for (std::size_t i = 1; i < pool.size(); ++i) {
    Rational v = dot(pool[i], z);
    if (v < lowest) {
      lowest = std::move(v);
      pick = i;
    }
  }
  if (lowest.sign() > 0) {
    throw HypothesisError(color, "color class " + std::to_string(color + 1) +
                                     " lies strictly on one side of a hyperplane through the origin");
  }

  Transversal next{current.choice, std::nullopt};
  next.choice[color] = pick;
  MinNormResult after = min_norm_point(next.chosen(classes));
  if (!(after.distance_sq < nearest.distance_sq)) {
    throw ContractError("pivot_step: distance did not decrease");
  }
  return Exchange{std::move(next), std::move(after)};
}

}  // namespace

PivotResult pivot_step(const ColorClasses& classes, const Transversal& current) {
  classes.validate();
  Exchange e = exchange(classes, current, min_norm_point(current.chosen(classes)));
  return PivotResult{std::move(e.next), std::move(e.nearest.distance_sq)};
}

ColorfulResult colorful_caratheodory(const ColorClasses& classes, std::optional<Transversal> start) {
  check_centered(classes);

  ColorfulResult result;
  if (start) {
    result.transversal.choice = start->choice;
  } else {
    result.transversal.choice.assign(classes.classes.size(), 0);
  }

  const std::size_t bound = transversal_count(classes);
  MinNormResult nearest = min_norm_point(result.transversal.chosen(classes));
  for (;;) {
    result.distances.push_back(nearest.distance_sq);
    if (nearest.distance_sq.is_zero()) {
      result.transversal.witness = std::move(nearest.combination);
      return result;
    }
    if (result.iterations >= bound) {
      throw ContractError("colorful_caratheodory: iteration bound exceeded");
    }
    Exchange step = exchange(classes, result.transversal, nearest);
    result.transversal = std::move(step.next);
    nearest = std::move(step.nearest);
    ++result.iterations;
  }
}

}  // namespace tvp
