#include "tvp/minnorm.hpp"

#include <algorithm>
#include <numeric>

#include "tvp/error.hpp"

namespace tvp {

namespace {

/// Weights of the point of aff(corral) nearest the origin, from the bordered
/// system [G 1; 1^T 0][alpha; mu] = [0; 1] with G the Gram matrix.
std::optional<std::vector<Rational>> affine_minimizer(std::span<const Vector> points,
                                                      std::span<const std::size_t> corral) {
  const std::size_t k = corral.size();
  Matrix a(k + 1, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Rational g = dot(points[corral[i]], points[corral[j]]);
      a[i][j] = g;
      a[j][i] = g;
    }
    a[i][k] = 1;
    a[k][i] = 1;
  }
  std::vector<Rational> rhs(k + 1);
  rhs[k] = 1;
  auto sol = solve_linear(std::move(a), std::move(rhs));
  if (!sol) return std::nullopt;
  sol->pop_back();
  return sol;
}

MinNormResult finish(std::span<const Vector> points, std::vector<std::size_t> idx, std::vector<Rational> w) {
  std::vector<std::size_t> order(idx.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return idx[a] < idx[b]; });
  WeightedCombination comb;
  for (auto o : order) {
    comb.indices.push_back(idx[o]);
    comb.weights.push_back(w[o]);
  }
  comb.value = combine(points, comb.indices, comb.weights);
  Rational dist = dot(comb.value, comb.value);
  return MinNormResult{comb.value, std::move(comb), std::move(dist)};
}

}  // namespace

MinNormResult min_norm_point(std::span<const Vector> points) {
  common_dim(points, "min_norm_point");

  std::size_t start = 0;
  Rational best = dot(points[0], points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Rational nn = dot(points[i], points[i]);
    if (nn < best) {
      best = std::move(nn);
      start = i;
    }
  }

  std::vector<std::size_t> corral{start};
  std::vector<Rational> lambda{Rational(1)};
  Vector x = points[start];

  for (;;) {
    const Rational xx = dot(x, x);
    std::size_t entering = 0;
    Rational lowest = dot(points[0], x);
    for (std::size_t i = 1; i < points.size(); ++i) {
      Rational v = dot(points[i], x);
      if (v < lowest) {
        lowest = std::move(v);
        entering = i;
      }
    }
    if (lowest >= xx) break;
    if (std::find(corral.begin(), corral.end(), entering) != corral.end()) {
      throw ContractError("min_norm_point: entering point already in the corral");
    }
    corral.push_back(entering);
    lambda.emplace_back(0);

    // Minor cycles: walk toward the affine minimizer until it is interior.
    for (;;) {
      auto alpha = affine_minimizer(points, corral);
      if (!alpha) throw ContractError("min_norm_point: corral lost affine independence");

      bool interior = std::all_of(alpha->begin(), alpha->end(), [](const Rational& a) { return a.sign() > 0; });
      if (interior) {
        lambda = std::move(*alpha);
        x = combine(points, corral, lambda);
        break;
      }

      std::optional<Rational> theta;
      std::size_t drop = 0;
      for (std::size_t k = 0; k < corral.size(); ++k) {
        if ((*alpha)[k].sign() > 0) continue;
        Rational t = lambda[k] / (lambda[k] - (*alpha)[k]);
        if (!theta || t < *theta) {
          theta = std::move(t);
          drop = k;
        }
      }
      if (theta->is_zero()) {
        throw ContractError("min_norm_point: entering point rejected without progress");
      }

      std::vector<std::size_t> next_corral;
      std::vector<Rational> next_lambda;
      const Rational keep = Rational(1) - *theta;
      for (std::size_t k = 0; k < corral.size(); ++k) {
        Rational l = k == drop ? Rational(0) : *theta * (*alpha)[k] + keep * lambda[k];
        if (l.sign() > 0) {
          next_corral.push_back(corral[k]);
          next_lambda.push_back(std::move(l));
        } else if (l.sign() < 0) {
          throw ContractError("min_norm_point: negative weight in minor cycle");
        }
      }
      corral = std::move(next_corral);
      lambda = std::move(next_lambda);
      x = combine(points, corral, lambda);
    }
  }

  return finish(points, std::move(corral), std::move(lambda));
}

MinNormResult min_norm_bruteforce(std::span<const Vector> points) {
  const std::size_t n = common_dim(points, "min_norm_bruteforce");
  const std::size_t m = points.size();
  if (m > 20) throw ContractError("min_norm_bruteforce: too many points for enumeration");

  std::optional<MinNormResult> best;
  std::vector<std::size_t> best_subset;

  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1ul << i)) subset.push_back(i);
    }
    if (subset.size() > n + 1) continue;

    std::vector<Vector> pts;
    for (auto i : subset) pts.push_back(points[i]);
    if (affine_dependence(pts)) continue;

    // Normal equations in the differences s_i - s_0.
    const std::size_t k = subset.size() - 1;
    std::vector<Vector> diffs;
    for (std::size_t i = 1; i <= k; ++i) diffs.push_back(pts[i] - pts[0]);
    Matrix gram(k, std::vector<Rational>(k));
    std::vector<Rational> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(diffs[i], diffs[j]);
      rhs[i] = -dot(diffs[i], pts[0]);
    }
    auto beta = solve_linear(std::move(gram), std::move(rhs));
    if (!beta) throw ContractError("min_norm_bruteforce: singular system on an independent subset");

    std::vector<Rational> weights(subset.size());
    Rational rest(1);
    for (std::size_t i = 0; i < k; ++i) {
      weights[i + 1] = (*beta)[i];
      rest -= (*beta)[i];
    }
    weights[0] = rest;
    if (std::any_of(weights.begin(), weights.end(), [](const Rational& w) { return w.sign() < 0; })) continue;

    Vector z = pts[0];
    for (std::size_t i = 0; i < k; ++i) z.add_scaled((*beta)[i], diffs[i]);
    Rational dist = dot(z, z);
    if (!best || dist < best->distance_sq || (dist == best->distance_sq && subset < best_subset)) {
      WeightedCombination comb{subset, weights, z};
      best = MinNormResult{z, std::move(comb), std::move(dist)};
      best_subset = subset;
    }
  }
  if (!best) throw ContractError("min_norm_bruteforce: no feasible subset (impossible for nonempty input)");
  return *best;
}

std::optional<WeightedCombination> point_in_hull(const Vector& q, std::span<const Vector> points) {
  if (points.empty()) return std::nullopt;
  require_dim(points, q.dim(), "point_in_hull");
  std::vector<Vector> shifted;
  shifted.reserve(points.size());
  for (const auto& v : points) shifted.push_back(v - q);
  MinNormResult r = min_norm_point(shifted);
  if (!r.distance_sq.is_zero()) return std::nullopt;
  WeightedCombination comb = std::move(r.combination);
  comb.value = combine(points, comb.indices, comb.weights);
  if (comb.value != q) throw ContractError("point_in_hull: recombination does not reproduce q");
  return comb;
}

bool satisfies_optimality(const MinNormResult& result, std::span<const Vector> points) {
  if (result.distance_sq != dot(result.point, result.point)) return false;
  for (const auto& v : points) {
    if (dot(v, result.point) < result.distance_sq) return false;
  }
  return true;
}

}  // namespace tvp
