#include "tvp/scalar.hpp"

#include <cctype>
#include <sstream>

#include "tvp/error.hpp"

namespace tvp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void reject(std::string_view text, std::string_view why) {
  throw ParseError("not an exact rational: \"" + std::string(text) + "\" (" + std::string(why) + ")");
}

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

Rational parse_decimal(std::string_view text, std::string_view body, bool negative) {
  std::string_view mantissa = body;
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = body.substr(0, e);
    std::string_view exp_text = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) reject(text, "bad exponent");
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string digits;
  long fraction_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view whole = mantissa.substr(0, dot);
    std::string_view frac = mantissa.substr(dot + 1);
    if (whole.empty() && frac.empty()) reject(text, "no digits");
    if (!whole.empty() && !all_digits(whole)) reject(text, "bad integer part");
    if (!frac.empty() && !all_digits(frac)) reject(text, "bad fractional part");
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(mantissa)) reject(text, "bad digits");
    digits = std::string(mantissa);
  }

  mpq_class value{mpz_class(digits, 10)};
  long scale = exponent - fraction_digits;
  if (scale > 0) value *= mpq_class(pow10(static_cast<unsigned long>(scale)));
  if (scale < 0) value /= mpq_class(pow10(static_cast<unsigned long>(-scale)));
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw ContractError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ContractError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  if (body.empty()) reject(text, "empty");

  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) reject(text, "expected p/q with integer p, q");
    mpz_class d(std::string(den), 10);
    if (d == 0) reject(text, "zero denominator");
    mpq_class value(mpz_class(std::string(num), 10), d);
    value.canonicalize();
    if (negative) value = -value;
    return Rational(value);
  }
  if (body.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text, body, negative);
  if (!all_digits(body)) reject(text, "bad digits");
  mpq_class value{mpz_class(std::string(body), 10)};
  if (negative) value = -value;
  return Rational(value);
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

bool Vector::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& rhs) {
  if (rhs.dim() != dim()) throw DimensionError("vector addition with mismatched dimensions");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  if (rhs.dim() != dim()) throw DimensionError("vector subtraction with mismatched dimensions");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Vector& Vector::add_scaled(const Rational& s, const Vector& x) {
  if (x.dim() != dim()) throw DimensionError("vector update with mismatched dimensions");
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += s * x[i];
  return *this;
}

std::string Vector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw DimensionError("dot product with mismatched dimensions");
  mpq_class acc;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(acc);
}

void require_dim(std::span<const Vector> vectors, std::size_t dim, std::string_view what) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].dim() != dim) {
      throw DimensionError(std::string(what) + ": vector " + std::to_string(i) + " has dimension " +
                           std::to_string(vectors[i].dim()) + ", expected " + std::to_string(dim));
    }
  }
}

std::size_t common_dim(std::span<const Vector> vectors, std::string_view what) {
  if (vectors.empty()) throw ContractError(std::string(what) + ": empty input");
  require_dim(vectors, vectors.front().dim(), what);
  return vectors.front().dim();
}

namespace {

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col].is_zero()) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    Rational inv = Rational(1) / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> nullspace_vector(std::span<const Vector> vectors) {
  const std::size_t n = common_dim(vectors, "nullspace_vector");
  const std::size_t k = vectors.size();

  // Columns are the input vectors.
  Matrix m(n, std::vector<Rational>(k));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t r = 0; r < n; ++r) m[r][c] = vectors[c][r];
  }
  const auto pivots = rref(m, k);
  if (pivots.size() == k) return std::nullopt;

  std::vector<bool> is_pivot(k, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rational> mu(k);
  mu[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) mu[pivots[r]] = -m[r][free_col];
  return mu;
}

std::optional<std::vector<Rational>> affine_dependence(std::span<const Vector> vectors) {
  const std::size_t n = common_dim(vectors, "affine_dependence");
  std::vector<Vector> lifted;
  lifted.reserve(vectors.size());
  for (const auto& v : vectors) {
    Vector w(n + 1);
    for (std::size_t i = 0; i < n; ++i) w[i] = v[i];
    w[n] = 1;
    lifted.push_back(std::move(w));
  }
  return nullspace_vector(lifted);
}

std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (n == 0) return std::vector<Rational>{};
  if (b.size() != n) throw DimensionError("solve_linear: right-hand side size mismatch");
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r].size() != n) throw DimensionError("solve_linear: matrix is not square");
    a[r].push_back(b[r]);
  }
  const auto pivots = rref(a, n + 1);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = a[r][n];
  return x;
}

}  // namespace tvp
