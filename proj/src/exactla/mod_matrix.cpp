#include "qalg/exactla/mod_matrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qalg {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("residue is not invertible");
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

namespace {

void check_modulus(std::uint32_t p) {
  if (p >= (1u << 16) || !is_prime(p)) throw std::invalid_argument("modulus must be a prime below 65536");
}

}  // namespace

ModMatrix::ModMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  check_modulus(p);
}

void ModMatrix::set(std::size_t i, std::size_t j, std::int64_t value) {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  data_[i * cols_ + j] = static_cast<std::uint32_t>(r);
}

ModEchelon mod_rcf(const ModMatrix& m) {
  ModRowReducer red(m.modulus(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) red.add_row(m.row(i));
  ModMatrix reduced = red.reduced_form();
  ModMatrix out(m.modulus(), m.rows(), m.cols());
  for (std::size_t i = 0; i < reduced.rows(); ++i) {
    std::copy(reduced.row(i).begin(), reduced.row(i).end(), out.row(i).begin());
  }
  return {out, red.rank()};
}

ModRowReducer::ModRowReducer(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols) {
  check_modulus(p);
  const std::uint64_t step = static_cast<std::uint64_t>(p - 1) * (p - 1);
  const std::uint64_t room = std::numeric_limits<std::uint32_t>::max() - p;
  fold_every_ = static_cast<std::uint32_t>(std::clamp<std::uint64_t>(step == 0 ? 1 : room / step, 1, 1u << 20));
}

std::size_t ModRowReducer::reduce(std::vector<std::uint32_t>& acc) const {
  std::uint32_t pending = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t piv = pivots_[r];
    const std::uint32_t c = acc[piv] % p_;
    if (c == 0) {
      acc[piv] = 0;
      continue;
    }
    if (pending == fold_every_) {
      for (auto& x : acc) x %= p_;
      pending = 0;
    }
    const std::uint32_t mult = p_ - c;
    const std::uint32_t* src = rows_[r].data();
    std::uint32_t* dst = acc.data();
    for (std::size_t j = piv; j < cols_; ++j) dst[j] += mult * src[j];
    ++pending;
  }
  for (auto& x : acc) x %= p_;
  std::size_t lead = 0;
  while (lead < cols_ && acc[lead] == 0) ++lead;
  return lead;
}

bool ModRowReducer::add_row(std::span<const std::uint32_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  std::vector<std::uint32_t> acc(row.begin(), row.end());
  for (auto& x : acc) x %= p_;
  const std::size_t lead = reduce(acc);
  if (lead == cols_) return false;
  const std::uint32_t inv = mod_inverse(acc[lead], p_);
  for (std::size_t j = lead; j < cols_; ++j) acc[j] = acc[j] * inv % p_;
  rows_.push_back(std::move(acc));
  pivots_.push_back(lead);
  return true;
}

std::size_t ModRowReducer::add_rows(std::span<const std::uint32_t> block) {
  if (cols_ == 0) return 0;
  std::size_t gained = 0;
  for (std::size_t off = 0; off + cols_ <= block.size(); off += cols_) {
    gained += add_row(block.subspan(off, cols_));
  }
  return gained;
}

bool ModRowReducer::contains(std::span<const std::uint32_t> row) const {
  std::vector<std::uint32_t> acc(row.begin(), row.end());
  for (auto& x : acc) x %= p_;
  return reduce(acc) == cols_;
}

std::vector<std::size_t> ModRowReducer::pivot_columns() const {
  auto out = pivots_;
  std::sort(out.begin(), out.end());
  return out;
}

ModMatrix ModRowReducer::reduced_form() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });

  // Back-substitution from the rightmost pivot; each row is cleared at the
  // pivots of all rows to its right.
  std::vector<std::vector<std::uint32_t>> done(rows_.size());
  for (std::size_t k = order.size(); k-- > 0;) {
    std::vector<std::uint32_t> acc = rows_[order[k]];
    for (std::size_t l = k + 1; l < order.size(); ++l) {
      const std::size_t piv = pivots_[order[l]];
      const std::uint32_t c = acc[piv];
      if (c == 0) continue;
      const auto& src = done[l];
      const std::uint32_t mult = p_ - c;
      for (std::size_t j = piv; j < cols_; ++j) acc[j] = (acc[j] + mult * src[j]) % p_;
    }
    done[k] = std::move(acc);
  }
  ModMatrix out(p_, rows_.size(), cols_);
  for (std::size_t i = 0; i < done.size(); ++i) std::copy(done[i].begin(), done[i].end(), out.row(i).begin());
  return out;
}

std::vector<std::vector<std::uint32_t>> ModRowReducer::nullspace() const {
  const ModMatrix form = reduced_form();
  const auto piv = pivot_columns();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p_ - form(r, f)) % p_;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qalg
