#include "tvp/tverberg.hpp"

#include <string>

#include "tvp/error.hpp"

namespace tvp {

std::vector<std::vector<std::size_t>> PartitionCertificate::positive_support() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(groups.size());
  for (const auto& g : groups) {
    auto& s = out.emplace_back();
    for (auto i : g) {
      if (i < weights.size() && weights[i].sign() > 0) s.push_back(i);
    }
  }
  return out;
}

std::size_t tverberg_count(std::size_t d, std::size_t r) { return (d + 1) * (r - 1) + 1; }

std::vector<Vector> phi_class(const LiftedPoint& p, std::size_t r) {
  if (r < 2) throw SizeError("phi_class: r must be at least 2");
  const std::size_t block = p.dim();
  const std::size_t dim = block * (r - 1);
  std::vector<Vector> cls;
  cls.reserve(r);
  for (std::size_t j = 0; j + 1 < r; ++j) {
    Vector phi = Vector::zeros(dim);
    for (std::size_t c = 0; c < block; ++c) phi[j * block + c] = p.coords()[c];
    cls.push_back(std::move(phi));
  }
  Vector last = Vector::zeros(dim);
  for (std::size_t j = 0; j + 1 < r; ++j) {
    for (std::size_t c = 0; c < block; ++c) last[j * block + c] = -p.coords()[c];
  }
  cls.push_back(std::move(last));
  return cls;
}

ColorClasses build_phi(std::span<const LiftedPoint> lifted, std::size_t r) {
  if (r < 2) throw SizeError("build_phi: r must be at least 2");
  if (lifted.empty()) throw SizeError("build_phi: no points");
  const std::size_t block = lifted.front().dim();
  const std::size_t d = block - 1;
  if (lifted.size() != tverberg_count(d, r)) {
    throw SizeError("build_phi: need (d+1)(r-1)+1 = " + std::to_string(tverberg_count(d, r)) + " points, got " +
                    std::to_string(lifted.size()));
  }

  ColorClasses out;
  out.dim = block * (r - 1);
  out.classes.reserve(lifted.size());
  for (const auto& p : lifted) {
    if (p.dim() != block) throw DimensionError("build_phi: lifted points differ in dimension");
    out.classes.push_back(phi_class(p, r));
  }
  return out;
}

namespace {

Vector group_sum(std::span<const Point> points, const std::vector<std::size_t>& group,
                 const std::vector<Rational>& weights, std::size_t d) {
  Vector s = Vector::zeros(d);
  for (auto i : group) s.add_scaled(weights[i], points[i].coords);
  return s;
}

}  // namespace

PartitionCertificate normalize_groups(std::span<const Point> points, PartitionCertificate cert) {
  if (cert.groups.empty() || points.empty()) throw ContractError("normalize_groups: empty certificate");
  if (cert.weights.size() != points.size()) throw ContractError("normalize_groups: weight count mismatch");
  const std::size_t d = points.front().dim();

  std::vector<Rational> totals;
  for (const auto& g : cert.groups) {
    Rational t;
    for (auto i : g) t += cert.weights.at(i);
    totals.push_back(std::move(t));
  }
  for (const auto& t : totals) {
    if (t.sign() <= 0) throw ContractError("normalize_groups: group with zero total weight");
    if (t != totals.front()) throw ContractError("normalize_groups: group totals differ");
  }
  for (const auto& g : cert.groups) {
    for (auto i : g) cert.weights[i] /= totals.front();
  }

  Vector common = group_sum(points, cert.groups.front(), cert.weights, d);
  for (std::size_t j = 1; j < cert.groups.size(); ++j) {
    if (group_sum(points, cert.groups[j], cert.weights, d) != common) {
      throw ContractError("normalize_groups: groups disagree on the common point");
    }
  }
  cert.common_point = Point{std::move(common)};
  return cert;
}

PartitionCertificate tverberg_partition(std::span<const Point> points, std::size_t r) {
  if (r < 2) throw SizeError("tverberg_partition: r must be at least 2");
  if (points.empty()) throw SizeError("tverberg_partition: no points");
  const std::size_t d = points.front().dim();
  const std::size_t n_points = tverberg_count(d, r);
  if (points.size() != n_points) {
    throw SizeError("tverberg_partition: need (d+1)(r-1)+1 = " + std::to_string(n_points) + " points in R^" +
                    std::to_string(d) + " for r = " + std::to_string(r) + ", got " + std::to_string(points.size()));
  }

  std::vector<LiftedPoint> lifted;
  lifted.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != d) {
      throw DimensionError("tverberg_partition: point " + std::to_string(i) + " has wrong dimension");
    }
    lifted.push_back(lift(points[i]));
  }

  const ColorClasses classes = build_phi(lifted, r);
  ColorfulResult solved = colorful_caratheodory(classes);
  const Transversal& t = solved.transversal;
  const WeightedCombination& witness = *t.witness;

  PartitionCertificate cert;
  cert.r = r;
  cert.iterations = solved.iterations;
  cert.groups.resize(r);
  cert.weights = witness.dense(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) cert.groups[t.choice[i]].push_back(i);

  // The witness, expanded through phi, must cancel: S_1^+ = ... = S_r^+.
  Vector expanded = Vector::zeros(classes.dim);
  for (std::size_t i = 0; i < points.size(); ++i) expanded.add_scaled(cert.weights[i], classes.classes[i][t.choice[i]]);
  if (!expanded.is_zero()) throw ContractError("tverberg_partition: witness does not cancel through phi");

  std::vector<Vector> sums;
  for (const auto& g : cert.groups) {
    Vector s = Vector::zeros(d + 1);
    for (auto i : g) s.add_scaled(cert.weights[i], lifted[i].coords());
    sums.push_back(std::move(s));
  }
  const Rational share = Rational(1) / Rational(static_cast<long>(r));
  for (const auto& s : sums) {
    if (s != sums.front()) throw ContractError("tverberg_partition: lifted group sums differ");
    if (s[d] != share) throw ContractError("tverberg_partition: group total is not 1/r");
  }

  return normalize_groups(points, std::move(cert));
}

}  // namespace tvp
