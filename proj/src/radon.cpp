#include "tvp/radon.hpp"

#include <string>

#include "tvp/error.hpp"

namespace tvp {

RadonCertificate radon_partition(std::span<const Point> points) {
  if (points.empty()) throw SizeError("radon_partition: no points");
  const std::size_t d = points.front().dim();
  if (points.size() != d + 2) {
    throw SizeError("radon_partition: need d+2 = " + std::to_string(d + 2) + " points in R^" + std::to_string(d) +
                    ", got " + std::to_string(points.size()));
  }
  std::vector<Vector> lifted;
  lifted.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != d) throw DimensionError("radon_partition: point " + std::to_string(i) + " has wrong dimension");
    lifted.push_back(lift(points[i]).coords());
  }

  // d+2 vectors in R^{d+1} are always dependent.
  auto mu = nullspace_vector(lifted);
  if (!mu) throw ContractError("radon_partition: no linear dependence among lifted points");

  RadonCertificate cert;
  cert.weights.resize(points.size());
  Rational total1, total2;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rational& m = (*mu)[i];
    if (m.sign() >= 0) {
      cert.group1.push_back(i);
      total1 += m;
    } else {
      cert.group2.push_back(i);
      total2 -= m;
    }
    cert.weights[i] = abs(m);
  }
  // The lifted last coordinate forces equal totals.
  if (total1 != total2 || total1.is_zero()) throw ContractError("radon_partition: unequal or zero group totals");

  for (auto& w : cert.weights) w /= total1;

  Vector side1 = Vector::zeros(d), side2 = Vector::zeros(d);
  for (auto i : cert.group1) side1.add_scaled(cert.weights[i], points[i].coords);
  for (auto i : cert.group2) side2.add_scaled(cert.weights[i], points[i].coords);
  if (side1 != side2) throw ContractError("radon_partition: group combinations differ");
  cert.common_point = Point{std::move(side1)};
  return cert;
}

}  // namespace tvp
