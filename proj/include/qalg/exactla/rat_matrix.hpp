#pragma once

#include "qalg/exactla/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace qalg {

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense row-major matrix of exact rationals. Dimensions are fixed at creation.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v);

struct RowEchelon {
  RatMatrix form;                   // same shape as the input; zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // ascending pivot columns
};

/// Reduced row-echelon (row canonical) form. Pivot search takes the first
/// nonzero entry in each column scan.
RowEchelon rcf(const RatMatrix& m);

/// Canonical integral nullspace basis: one vector per free column, in
/// ascending free-column order. Each vector has its free coordinate positive,
/// integer entries, and overall gcd 1.
std::vector<std::vector<Integer>> nullspace_cib(const RatMatrix& m);
std::vector<std::vector<Integer>> nullspace_cib(const RowEchelon& e);

/// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrixError.
RatMatrix invert(const RatMatrix& m);

/// Incrementally maintained row canonical form. Rows are appended one at a
/// time; the stored basis is always fully reduced.
class RatRowReducer {
 public:
  explicit RatRowReducer(std::size_t cols);

  /// Returns true when the row increased the rank.
  bool add_row(std::vector<Rational> row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  std::vector<std::size_t> pivots() const;

  /// rank x cols matrix of the reduced basis rows ordered by pivot column.
  RatMatrix form() const;
  std::vector<std::vector<Integer>> nullspace_cib() const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;  // sorted by pivot column
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace qalg
