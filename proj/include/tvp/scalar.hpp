#pragma once

// Exact rational scalars, coordinate vectors and the elimination kernels
// built on them. Every number in the library is a Rational.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tvp {

/// Arbitrary-precision rational in canonical form (gcd 1, positive denominator).
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}
  Rational(int value) : value_(value) {}
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts "p", "p/q" and terminating decimals ("-0.25", "1.5e3").
  /// Anything else, including a zero denominator, throws ParseError.
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when q = 1; the sign sits on the numerator.
  std::string str() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }
  double to_double() const { return value_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
  mpq_class value_;
};

Rational abs(const Rational& q);

/// Coordinate vector over Rational.
class Vector {
public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim) {}
  explicit Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Vector zeros(std::size_t dim) { return Vector(dim); }

  std::size_t dim() const { return coords_.size(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(const Rational& s);
  /// this += s * x
  Vector& add_scaled(const Rational& s, const Vector& x);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator-(Vector a) { return a *= Rational(-1); }
  friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
  friend bool operator==(const Vector&, const Vector&) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << v.str(); }

private:
  std::vector<Rational> coords_;
};

Rational dot(const Vector& a, const Vector& b);

/// Throws DimensionError unless every vector has dimension `dim`.
void require_dim(std::span<const Vector> vectors, std::size_t dim, std::string_view what);

/// Common dimension of a nonempty list; DimensionError on mismatch.
std::size_t common_dim(std::span<const Vector> vectors, std::string_view what);

/// Nonzero mu with sum_i mu_i * vectors[i] = 0, or nullopt when the vectors
/// are linearly independent. Elimination takes the leftmost pivot column and
/// the smallest available row, and the free variable used is the first
/// non-pivot column (set to 1), so results are reproducible.
std::optional<std::vector<Rational>> nullspace_vector(std::span<const Vector> vectors);

/// Nonzero gamma with sum gamma_i = 0 and sum gamma_i * vectors[i] = 0, or
/// nullopt when the vectors are affinely independent.
std::optional<std::vector<Rational>> affine_dependence(std::span<const Vector> vectors);

/// Dense row-major matrix used by the solvers.
using Matrix = std::vector<std::vector<Rational>>;

/// Solves the square system A x = b; nullopt when A is singular.
std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b);

}  // namespace tvp
