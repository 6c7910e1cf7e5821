#include "qalg/exactla/rat_matrix.hpp"

#include <algorithm>
#include <utility>

namespace qalg {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

RowEchelon rcf(const RatMatrix& m) {
  RowEchelon e{m, 0, {}};
  RatMatrix& a = e.form;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, lead);
    Rational inv = 1 / a(lead, col);
    for (std::size_t j = col; j < a.cols(); ++j) {
      if (a(lead, j) != 0) a(lead, j) *= inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (a(lead, j) != 0) a(i, j) -= f * a(lead, j);
      }
    }
    e.pivots.push_back(col);
    ++lead;
  }
  e.rank = lead;
  return e;
}

namespace {

std::vector<std::vector<Integer>> cib_from_rows(std::size_t cols,
                                                const std::vector<std::size_t>& pivots,
                                                auto&& entry) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -entry(r, f);
    basis.push_back(primitive_integer_vector(v));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<Integer>> nullspace_cib(const RowEchelon& e) {
  return cib_from_rows(e.form.cols(), e.pivots,
                       [&](std::size_t r, std::size_t c) -> const Rational& { return e.form(r, c); });
}

std::vector<std::vector<Integer>> nullspace_cib(const RatMatrix& m) { return nullspace_cib(rcf(m)); }

RatMatrix invert(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw SingularMatrixError("cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw SingularMatrixError("matrix is singular");
    a.swap_rows(piv, col);
    inv.swap_rows(piv, col);
    Rational s = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      if (a(col, j) != 0) a(col, j) *= s;
      if (inv(col, j) != 0) inv(col, j) *= s;
    }
    // Column indices where the pivot row is nonzero; C is very sparse.
    std::vector<std::size_t> nz_a, nz_inv;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(col, j) != 0) nz_a.push_back(j);
      if (inv(col, j) != 0) nz_inv.push_back(j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (auto j : nz_a) a(i, j) -= f * a(col, j);
      for (auto j : nz_inv) inv(i, j) -= f * inv(col, j);
    }
  }
  return inv;
}

RatRowReducer::RatRowReducer(std::size_t cols) : cols_(cols) {}

bool RatRowReducer::add_row(std::vector<Rational> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = row[pivot_cols_[r]];
    if (f == 0) continue;
    const auto& base = rows_[r];
    for (std::size_t j = pivot_cols_[r]; j < cols_; ++j) {
      if (base[j] != 0) row[j] -= f * base[j];
    }
  }
  std::size_t lead = 0;
  while (lead < cols_ && row[lead] == 0) ++lead;
  if (lead == cols_) return false;
  Rational inv = 1 / row[lead];
  for (std::size_t j = lead; j < cols_; ++j) {
    if (row[j] != 0) row[j] *= inv;
  }
  for (auto& other : rows_) {
    const Rational f = other[lead];
    if (f == 0) continue;
    for (std::size_t j = lead; j < cols_; ++j) {
      if (row[j] != 0) other[j] -= f * row[j];
    }
  }
  auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), lead) - pivot_cols_.begin();
  pivot_cols_.insert(pivot_cols_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

std::vector<std::size_t> RatRowReducer::pivots() const { return pivot_cols_; }

RatMatrix RatRowReducer::form() const {
  RatMatrix m(rows_.size(), cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = rows_[i][j];
  }
  return m;
}

std::vector<std::vector<Integer>> RatRowReducer::nullspace_cib() const {
  return cib_from_rows(cols_, pivot_cols_,
                       [&](std::size_t r, std::size_t c) -> const Rational& { return rows_[r][c]; });
}

}  // namespace qalg
