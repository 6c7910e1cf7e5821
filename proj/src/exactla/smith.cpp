#include "qalg/exactla/unipoly.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace qalg {

namespace {

class SmithWork {
 public:
  explicit SmithWork(PolyMatrix m) : a_(std::move(m)) {}

  std::vector<UniPoly> run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    std::vector<UniPoly> diag;
    for (std::size_t k = 0; k < n; ++k) {
      if (!settle(k)) {
        diag.resize(n);  // remaining block is zero
        break;
      }
      diag.push_back(a_(k, k).monic());
    }
    return diag;
  }

 private:
  // Brings a gcd-minimal pivot to (k, k) with row k and column k cleared and
  // dividing every entry of the trailing block. Returns false if block is zero.
  bool settle(std::size_t k) {
    for (;;) {
      auto pos = min_degree_entry(k);
      if (!pos) return false;
      swap_rows(k, pos->first);
      swap_cols(k, pos->second);
      make_row_monic_at(k, k);

      bool dirty = false;
      for (std::size_t i = k + 1; i < a_.rows(); ++i) {
        if (a_(i, k).is_zero()) continue;
        auto [q, r] = divmod(a_(i, k), a_(k, k));
        for (std::size_t j = k; j < a_.cols(); ++j) {
          if (a_(k, j).is_zero()) continue;
          a_(i, j) -= q * a_(k, j);
        }
        normalize_row(i, k);
        dirty = dirty || !r.is_zero();
      }
      for (std::size_t j = k + 1; j < a_.cols(); ++j) {
        if (a_(k, j).is_zero()) continue;
        auto [q, r] = divmod(a_(k, j), a_(k, k));
        for (std::size_t i = k; i < a_.rows(); ++i) {
          if (a_(i, k).is_zero()) continue;
          a_(i, j) -= q * a_(i, k);
        }
        dirty = dirty || !r.is_zero();
      }
      if (dirty) continue;

      // Row k and column k are now clear apart from the pivot.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < a_.rows() && divides_all; ++i) {
        for (std::size_t j = k + 1; j < a_.cols(); ++j) {
          if (a_(i, j).is_zero()) continue;
          if (!divmod(a_(i, j), a_(k, k)).second.is_zero()) {
            for (std::size_t jj = k; jj < a_.cols(); ++jj) a_(k, jj) += a_(i, jj);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) return true;
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> min_degree_entry(std::size_t k) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    long best_deg = 0;
    for (std::size_t i = k; i < a_.rows(); ++i) {
      for (std::size_t j = k; j < a_.cols(); ++j) {
        const UniPoly& e = a_(i, j);
        if (e.is_zero()) continue;
        if (!best || e.degree() < best_deg) {
          best = {i, j};
          best_deg = e.degree();
          if (best_deg == 0) return best;
        }
      }
    }
    return best;
  }

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(r1, j), a_(r2, j));
  }

  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, c1), a_(i, c2));
  }

  void make_row_monic_at(std::size_t i, std::size_t k) {
    const Rational s = Rational(1) / a_(i, k).leading();
    for (std::size_t j = k; j < a_.cols(); ++j) a_(i, j) *= s;
  }

  // Scales row i (columns >= k) by a nonzero rational so that all coefficients
  // are coprime integers. Multiplying a row by a unit leaves the Smith form unchanged.
  void normalize_row(std::size_t i, std::size_t k) {
    Integer num_gcd = 0, den_lcm = 1;
    for (std::size_t j = k; j < a_.cols(); ++j) {
      for (const auto& c : a_(i, j).coeffs()) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
      }
    }
    if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return;
    Rational s(den_lcm, num_gcd);
    s.canonicalize();
    for (std::size_t j = k; j < a_.cols(); ++j) a_(i, j) *= s;
  }

  PolyMatrix a_;
};

// Scales a row of polynomials by a nonzero rational so its coefficients are
// coprime integers.
void normalize_polys(std::vector<UniPoly>& row) {
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& e : row) {
    for (const auto& c : e.coeffs()) {
      if (c == 0) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return;
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  for (auto& e : row) e *= s;
}

// Inverse of a modulo m, or nothing when they share a factor.
std::optional<UniPoly> inverse_mod(const UniPoly& a, const UniPoly& m) {
  UniPoly r0 = m, r1 = divmod(a, m).second, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.degree() != 0) return std::nullopt;
  t0 *= Rational(1) / r0.leading();
  return divmod(t0, m).second;
}

// Smith form of a matrix whose row module contains modulus * Q[x]^cols, so
// the work happens in Q[x]/(modulus). Common factors shared by the whole
// trailing block are divided out (shrinking the modulus), then a unit of the
// residue ring is pivoted to 1 and its column cleared by plain elimination.
// No remainder sequences run on the entries, which keeps coefficients small.
class ResidueSmith {
 public:
  ResidueSmith(const PolyMatrix& m, UniPoly modulus) : mod_(std::move(modulus)), rng_(0x51a7) {
    rows_.assign(m.rows(), std::vector<UniPoly>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) rows_[i][j] = divmod(m(i, j), mod_).second;
      normalize_polys(rows_[i]);
    }
  }

  std::vector<UniPoly> run() {
    const std::size_t n = rows_.empty() ? 0 : rows_[0].size();
    std::vector<UniPoly> diag;
    while (diag.size() < n) {
      if (mod_.degree() == 0) {
        diag.resize(n, scale_);
        break;
      }
      auto unit = find_unit();
      if (!unit) {
        const UniPoly h = block_gcd();
        if (h.degree() < 0 || h == mod_) {  // block is zero modulo mod_
          diag.resize(n, scale_ * mod_);
          break;
        }
        if (h.degree() > 0) {
          divide_block(h);
          continue;
        }
        mix();
        continue;
      }
      eliminate(unit->first, unit->second);
      diag.push_back(scale_);
    }
    return diag;
  }

 private:
  using Cell = std::pair<std::size_t, std::size_t>;

  std::optional<Cell> find_unit() const {
    const std::size_t n = rows_[0].size();
    std::optional<Cell> best;
    long best_deg = 0;
    for (std::size_t i = top_; i < rows_.size(); ++i) {
      for (std::size_t j = top_; j < n; ++j) {
        const UniPoly& e = rows_[i][j];
        if (e.is_zero() || (best && e.degree() >= best_deg)) continue;
        if (gcd(e, mod_).degree() != 0) continue;
        best = Cell{i, j};
        best_deg = e.degree();
        if (best_deg == 0) return best;
      }
    }
    return best;
  }

  // gcd of the modulus with every entry of the trailing block; zero if the
  // block is empty.
  UniPoly block_gcd() const {
    UniPoly h = mod_;
    for (std::size_t i = top_; i < rows_.size(); ++i)
      for (std::size_t j = top_; j < rows_[i].size(); ++j) {
        if (rows_[i][j].is_zero()) continue;
        h = gcd(h, rows_[i][j]);
        if (h.degree() == 0) return h;
      }
    return h;
  }

  void divide_block(const UniPoly& h) {
    mod_ = divmod(mod_, h).first;
    scale_ = scale_ * h;
    for (std::size_t i = top_; i < rows_.size(); ++i) {
      for (std::size_t j = top_; j < rows_[i].size(); ++j) {
        if (rows_[i][j].is_zero()) continue;
        rows_[i][j] = divmod(divmod(rows_[i][j], h).first, mod_).second;
      }
      normalize_polys(rows_[i]);
    }
  }

  // Each residue field sees some unit in the block, so after adding random
  // multiples of the other rows and columns into the leading ones, the
  // corner entry is a unit in every factor with high probability.
  void mix() {
    std::uniform_int_distribution<long> pick(-20, 20);
    auto& target = rows_[top_];
    for (std::size_t i = top_ + 1; i < rows_.size(); ++i) {
      const Rational c(pick(rng_));
      if (c == 0) continue;
      for (std::size_t j = top_; j < target.size(); ++j) {
        UniPoly add = rows_[i][j];
        add *= c;
        target[j] += add;
      }
    }
    for (std::size_t j = top_ + 1; j < target.size(); ++j) {
      const Rational c(pick(rng_));
      if (c == 0) continue;
      for (std::size_t i = top_; i < rows_.size(); ++i) {
        UniPoly add = rows_[i][j];
        add *= c;
        rows_[i][top_] += add;
      }
    }
    for (std::size_t i = top_; i < rows_.size(); ++i) normalize_polys(rows_[i]);
  }

  void eliminate(std::size_t pi, std::size_t pj) {
    std::swap(rows_[top_], rows_[pi]);
    for (auto& row : rows_) std::swap(row[top_], row[pj]);
    auto& pivot = rows_[top_];
    const UniPoly inv = *inverse_mod(pivot[top_], mod_);
    for (std::size_t j = top_; j < pivot.size(); ++j) pivot[j] = divmod(pivot[j] * inv, mod_).second;
    for (std::size_t i = top_ + 1; i < rows_.size(); ++i) {
      auto& row = rows_[i];
      if (row[top_].is_zero()) continue;
      const UniPoly f = row[top_];
      for (std::size_t j = top_; j < row.size(); ++j) {
        if (pivot[j].is_zero()) continue;
        row[j] = divmod(row[j] - f * pivot[j], mod_).second;
      }
      normalize_polys(row);
    }
    // With a unit pivot the rest of the pivot row clears by column operations
    // that touch nothing else.
    ++top_;
  }

  std::vector<std::vector<UniPoly>> rows_;
  UniPoly mod_;
  UniPoly scale_ = UniPoly(1);
  std::size_t top_ = 0;
  std::mt19937_64 rng_;
};

using IntRows = std::vector<std::vector<Integer>>;

// Fraction-free elimination in place. Returns the rank; for square input the
// determinant is written to det (zero when singular).
std::size_t bareiss(IntRows& a, Integer* det = nullptr) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Integer prev = 1;
  std::size_t rank = 0;
  bool negate = false;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      std::swap(a[p], a[rank]);
      negate = !negate;
    }
    const Integer& piv = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer& x = a[i][j];
        x *= piv;
        mpz_submul(x.get_mpz_t(), a[i][c].get_mpz_t(), a[rank][j].get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    ++rank;
  }
  if (det) {
    *det = (rank == rows && rows == cols) ? (rows ? a[rows - 1][cols - 1] : Integer(1)) : Integer(0);
    if (negate) *det = -*det;
  }
  return rank;
}

// Newton interpolation through (k, values[k]) for k = 0, 1, ...
UniPoly interpolate(const std::vector<Integer>& values) {
  std::vector<Rational> dd(values.begin(), values.end());
  const std::size_t n = dd.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / Rational(static_cast<long>(level));
    }
  }
  UniPoly out;
  for (std::size_t k = n; k-- > 0;) {
    out *= UniPoly{Rational(-static_cast<long>(k)), Rational(1)};
    out += UniPoly(dd[k]);
  }
  return out;
}

IntRows random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> pick(-30, 30);
  IntRows out(rows, std::vector<Integer>(cols));
  for (auto& row : out)
    for (auto& x : row) x = pick(rng);
  return out;
}

IntRows multiply(const IntRows& a, const IntRows& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  IntRows out(a.size(), std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        mpz_addmul(out[i][j].get_mpz_t(), a[i][k].get_mpz_t(), b[k][j].get_mpz_t());
    }
  return out;
}

}  // namespace

std::vector<UniPoly> smith_diagonal(PolyMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t full = std::min(rows, cols);
  long max_deg = -1;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) max_deg = std::max(max_deg, m(i, j).degree());
  if (max_deg < 0) return std::vector<UniPoly>(full);

  // Clear denominators row by row (a unit scaling), as integer coefficient lists.
  std::vector<std::vector<std::vector<Integer>>> ints(rows, std::vector<std::vector<Integer>>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& c : m(i, j).coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& c : m(i, j).coeffs()) {
        Rational scaled = c * den;
        ints[i][j].push_back(scaled.get_num());
      }
  }
  auto evaluate_at = [&](long at) {
    IntRows out(rows, std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const auto& cs = ints[i][j];
        for (std::size_t k = cs.size(); k-- > 0;) {
          out[i][j] *= at;
          out[i][j] += cs[k];
        }
      }
    return out;
  };

  // Every r x r minor has degree at most r * max_deg <= full * max_deg, so the
  // nonzero minors cannot all vanish at this many distinct points: the maximum
  // rank seen is the rank over Q(x), and degree-bounded minors interpolate exactly.
  const std::size_t points = full * static_cast<std::size_t>(max_deg) + 1;
  std::vector<IntRows> samples;
  samples.reserve(points);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < points; ++k) {
    samples.push_back(evaluate_at(static_cast<long>(k)));
    IntRows scratch = samples.back();
    rank = std::max(rank, bareiss(scratch));
  }
  if (rank == 0) return std::vector<UniPoly>(full);

  // Random integer combinations of r x r minors are multiples of the r-th
  // determinantal divisor; their gcd is a multiple too, and usually equal.
  std::mt19937_64 rng(0x5eed);
  UniPoly multiple;
  int found = 0;
  for (int attempt = 0; attempt < 12 && found < 3 && multiple.degree() != 0; ++attempt) {
    const IntRows left = rank < rows ? random_integer_matrix(rng, rank, rows) : IntRows{};
    const IntRows right = rank < cols ? random_integer_matrix(rng, cols, rank) : IntRows{};
    std::vector<Integer> dets(points);
    bool nonzero = false;
    for (std::size_t k = 0; k < points; ++k) {
      IntRows sq = samples[k];
      if (!left.empty()) sq = multiply(left, sq);
      if (!right.empty()) sq = multiply(sq, right);
      bareiss(sq, &dets[k]);
      nonzero = nonzero || dets[k] != 0;
    }
    if (!nonzero) continue;
    multiple = gcd(multiple, interpolate(dets));
    ++found;
  }

  std::vector<UniPoly> diag;
  if (found > 0 && multiple.degree() == 0) {
    diag.assign(rank, UniPoly(1));
  } else if (found > 0 && (rank == cols || rank == rows)) {
    // With full column rank the row module contains multiple * Q[x]^cols, so
    // entries may be reduced modulo it. Full row rank is handled by transposing.
    if (rank == cols) {
      diag = ResidueSmith(m, multiple).run();
    } else {
      PolyMatrix t(cols, rows);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t(j, i) = std::move(m(i, j));
      diag = ResidueSmith(t, multiple).run();
    }
  } else {
    diag = SmithWork(std::move(m)).run();
  }
  diag.resize(full);
  return diag;
}

}  // namespace qalg
