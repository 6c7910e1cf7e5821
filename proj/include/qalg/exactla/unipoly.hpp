#pragma once

#include "qalg/exactla/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qalg {

/// Univariate polynomial over Q; coefficients indexed by degree.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UniPoly(long c) : UniPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Rational> coeffs);
  /// Coefficients from the constant term upward.
  UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

  static UniPoly x();
  static UniPoly monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  UniPoly monic() const;
  Rational eval(const Rational& at) const;
  std::string to_string(char var = 'x') const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws std::domain_error when b is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  UniPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const UniPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<UniPoly> data_;
};

/// Smith normal form diagonal over Q[x]: min(rows, cols) entries, each monic
/// or zero, with d_i | d_{i+1}.
///
/// The rank over Q(x) and a multiple of the last nonzero determinantal divisor
/// are found by exact evaluation and interpolation; elimination then runs
/// modulo that multiple so degrees stay small. Matrices that are rank deficient
/// on both sides fall back to plain elimination over Q[x].
std::vector<UniPoly> smith_diagonal(PolyMatrix m);

}  // namespace qalg
