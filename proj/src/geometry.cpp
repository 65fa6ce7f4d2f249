#include "tvp/geometry.hpp"

#include <algorithm>
#include <string>

#include "tvp/error.hpp"

namespace tvp {

LiftedPoint::LiftedPoint(Vector coords) : coords_(std::move(coords)) {
  if (coords_.dim() == 0 || coords_[coords_.dim() - 1] != Rational(1)) {
    throw ContractError("lifted point must end in the coordinate 1");
  }
}

Point LiftedPoint::project() const {
  std::vector<Rational> c(coords_.begin(), coords_.end() - 1);
  return Point{Vector(std::move(c))};
}

LiftedPoint lift(const Point& p) {
  std::vector<Rational> c(p.coords.begin(), p.coords.end());
  c.emplace_back(1);
  return LiftedPoint(Vector(std::move(c)));
}

Rational WeightedCombination::weight_of(std::size_t host_index) const {
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] == host_index) return weights[k];
  }
  return Rational(0);
}

std::vector<Rational> WeightedCombination::dense(std::size_t host_size) const {
  std::vector<Rational> out(host_size);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= host_size) throw ContractError("combination index out of range");
    out[indices[k]] = weights[k];
  }
  return out;
}

std::vector<std::size_t> WeightedCombination::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (weights[k].sign() > 0) out.push_back(indices[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Vector combine(std::span<const Vector> host, std::span<const std::size_t> indices,
               std::span<const Rational> weights) {
  if (indices.size() != weights.size()) throw ContractError("combine: indices/weights length mismatch");
  if (host.empty()) throw ContractError("combine: empty host list");
  Vector out = Vector::zeros(host.front().dim());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= host.size()) throw ContractError("combine: index out of range");
    out.add_scaled(weights[k], host[indices[k]]);
  }
  return out;
}

bool is_valid_combination(const WeightedCombination& comb, std::span<const Vector> host) {
  if (comb.indices.size() != comb.weights.size() || comb.indices.empty() || host.empty()) return false;
  std::vector<bool> seen(host.size(), false);
  Rational total;
  for (std::size_t k = 0; k < comb.indices.size(); ++k) {
    const auto i = comb.indices[k];
    if (i >= host.size() || seen[i]) return false;
    seen[i] = true;
    if (comb.weights[k].sign() < 0) return false;
    if (host[i].dim() != comb.value.dim()) return false;
    total += comb.weights[k];
  }
  if (total != Rational(1)) return false;
  return combine(host, comb.indices, comb.weights) == comb.value;
}

WeightedCombination caratheodory_reduce(const Vector& target, const WeightedCombination& comb,
                                        std::span<const Vector> host) {
  if (!host.empty()) require_dim(host, target.dim(), "caratheodory_reduce");
  if (comb.value != target || !is_valid_combination(comb, host)) {
    throw ContractError("caratheodory_reduce: combination does not express the target");
  }

  std::vector<std::size_t> idx = comb.indices;
  std::vector<Rational> w = comb.weights;

  bool reduced = false;
  for (;;) {
    std::vector<Vector> pts;
    pts.reserve(idx.size());
    for (auto i : idx) pts.push_back(host[i]);
    auto gamma = affine_dependence(pts);
    if (!gamma) break;
    reduced = true;

    // sum gamma = 0 and gamma != 0, so some entry is positive.
    std::optional<Rational> step;
    std::size_t drop = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if ((*gamma)[k].sign() <= 0) continue;
      Rational ratio = w[k] / (*gamma)[k];
      if (!step || ratio < *step || (ratio == *step && idx[k] > idx[drop])) {
        step = ratio;
        drop = k;
      }
    }
    if (!step) throw ContractError("caratheodory_reduce: affine dependence without positive entry");

    std::vector<std::size_t> next_idx;
    std::vector<Rational> next_w;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k == drop) continue;
      Rational nw = w[k] - *step * (*gamma)[k];
      if (nw.sign() < 0) throw ContractError("caratheodory_reduce: negative weight after shift");
      next_idx.push_back(idx[k]);
      next_w.push_back(std::move(nw));
    }
    idx = std::move(next_idx);
    w = std::move(next_w);
  }

  if (!reduced) return comb;

  WeightedCombination out{idx, w, combine(host, idx, w)};
  if (out.value != target) throw ContractError("caratheodory_reduce: value drifted");
  return out;
}

}  // namespace tvp
