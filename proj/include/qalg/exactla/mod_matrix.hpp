#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qalg {

bool is_prime(std::uint32_t p);
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

/// Dense row-major matrix over Z/p. Requires p prime and p < 2^16 so that
/// products of residues fit comfortably in 32 bits.
class ModMatrix {
 public:
  ModMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  std::uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Stores value mod p.
  void set(std::size_t i, std::size_t j, std::int64_t value);

  std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::uint32_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

struct ModEchelon {
  ModMatrix form;
  std::size_t rank;
};

ModEchelon mod_rcf(const ModMatrix& m);

/// Incremental row reduction over Z/p for wide matrices with many redundant
/// rows. Stored rows are kept in insertion order; each is zero at the pivot
/// columns of all earlier rows, so reduction of a new row is a single pass.
/// Accumulation is done in 32-bit lanes and folded mod p only when needed.
class ModRowReducer {
 public:
  ModRowReducer(std::uint32_t p, std::size_t cols);

  std::uint32_t modulus() const { return p_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Reduces `row` (entries already in [0, p)) and keeps it when independent.
  /// Returns true on rank increase.
  bool add_row(std::span<const std::uint32_t> row);

  /// Rank increase from appending the rows of `block` (row-major, width cols()).
  std::size_t add_rows(std::span<const std::uint32_t> block);

  /// True iff `row` lies in the current row space.
  bool contains(std::span<const std::uint32_t> row) const;

  /// Stored row r (insertion order, scaled to 1 at its leading column).
  const std::vector<std::uint32_t>& row(std::size_t r) const { return rows_[r]; }

  /// Pivot columns in ascending order.
  std::vector<std::size_t> pivot_columns() const;

  /// Fully reduced row-echelon form of the accumulated rows (rank x cols).
  ModMatrix reduced_form() const;

  /// Nullspace basis with one vector per free column, free coordinate 1.
  std::vector<std::vector<std::uint32_t>> nullspace() const;

 private:
  // Reduces acc (values < p) in place against stored rows; returns leading column or cols_.
  std::size_t reduce(std::vector<std::uint32_t>& acc) const;

  std::uint32_t p_;
  std::size_t cols_;
  std::uint32_t fold_every_;  // additions allowed between folds
  std::vector<std::vector<std::uint32_t>> rows_;  // monic at pivot
  std::vector<std::size_t> pivots_;               // pivot of rows_[i]
};

}  // namespace qalg
