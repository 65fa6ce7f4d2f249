#pragma once

// Shared helpers for the test binaries: literal builders, seeded generators and
// independent checks that do not go through the solver code paths.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tvp/geometry.hpp"
#include "tvp/scalar.hpp"

namespace tvp::test {

inline Rational q(const char* text) { return Rational::parse(text); }

inline Vector vec(std::initializer_list<long> xs) {
  std::vector<Rational> c;
  for (long x : xs) c.emplace_back(x);
  return Vector(std::move(c));
}

inline Vector vecq(std::initializer_list<const char*> xs) {
  std::vector<Rational> c;
  for (auto x : xs) c.push_back(Rational::parse(x));
  return Vector(std::move(c));
}

inline Point pt(std::initializer_list<long> xs) { return Point{vec(xs)}; }

inline std::vector<Point> points_1d(std::initializer_list<long> xs) {
  std::vector<Point> out;
  for (long x : xs) out.push_back(Point{Vector{Rational(x)}});
  return out;
}

inline std::vector<Rational> rats(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(Rational::parse(x));
  return out;
}

/// True when a and b are nonzero multiples of each other.
inline bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return false;
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    Rational r = a[i] / b[i];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio.has_value();
}

inline Vector linear_combination(std::span<const Vector> vs, const std::vector<Rational>& c) {
  Vector out = Vector::zeros(vs.front().dim());
  for (std::size_t i = 0; i < vs.size(); ++i) out.add_scaled(c[i], vs[i]);
  return out;
}

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Vector vector(std::size_t dim, long lo, long hi) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < dim; ++i) c.emplace_back(integer(lo, hi));
    return Vector(std::move(c));
  }

  std::vector<Point> points(std::size_t count, std::size_t dim, long lo, long hi) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(Point{vector(dim, lo, hi)});
    return out;
  }

  /// Copies a few earlier points over later ones.
  void duplicate_some(std::vector<Point>& pts) {
    if (pts.size() < 2) return;
    std::size_t copies = static_cast<std::size_t>(integer(1, static_cast<long>(pts.size() / 2)));
    for (std::size_t k = 0; k < copies; ++k) {
      auto from = static_cast<std::size_t>(integer(0, static_cast<long>(pts.size()) - 1));
      auto to = static_cast<std::size_t>(integer(0, static_cast<long>(pts.size()) - 1));
      pts[to] = pts[from];
    }
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace tvp::test
