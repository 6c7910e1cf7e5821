#include "qalg/exactla/mod_matrix.hpp"
#include "qalg/exactla/rat_matrix.hpp"
#include "qalg/exactla/unipoly.hpp"

#include <doctest.h>

#include <random>

using namespace qalg;

namespace {

using IntBasis = std::vector<std::vector<Integer>>;

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  RatMatrix m(r, c);
  std::uniform_int_distribution<long> d(lo, hi);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rcf of small matrices") {
  auto e = rcf(RatMatrix{{2, 4}});
  CHECK(e.form == RatMatrix{{1, 2}});
  CHECK(e.rank == 1);
  CHECK(e.pivots == std::vector<std::size_t>{0});

  auto id = rcf(RatMatrix::identity(3));
  CHECK(id.form == RatMatrix::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto e6 = rcf(RatMatrix{{1, 4, 0}, {0, 2, 5}});
  CHECK(e6.form == RatMatrix{{1, 0, -10}, {0, 1, Rational(5, 2)}});
  CHECK(e6.rank == 2);
}

TEST_CASE("canonical integral nullspace basis") {
  CHECK(nullspace_cib(RatMatrix{{2, 4}}) == IntBasis{ints({-2, 1})});
  CHECK(nullspace_cib(RatMatrix{{1, 4, 0}, {0, 2, 5}}) == IntBasis{ints({20, -5, 2})});
  RatMatrix e8_12{{2, 6, 0, 0, 0}, {0, 3, 5, 7, 0}, {0, 0, 0, 4, 8}};
  CHECK(nullspace_cib(e8_12) == IntBasis{ints({15, -5, 3, 0, 0}), ints({-42, 14, 0, -6, 3})});
  CHECK(nullspace_cib(RatMatrix{{1, 2}, {3, 5}}).empty());
}

TEST_CASE("exact inverse") {
  RatMatrix d(5, 5);
  const long diag[] = {1, 4, 6, 4, 1};
  for (int i = 0; i < 5; ++i) d(i, i) = diag[i];
  RatMatrix inv = invert(d);
  for (int i = 0; i < 5; ++i) CHECK(inv(i, i) == Rational(1, diag[i]));
  CHECK(invert(RatMatrix::identity(4)) == RatMatrix::identity(4));
  CHECK(invert(RatMatrix{{1, 1}, {0, 2}}) == RatMatrix{{1, Rational(-1, 2)}, {0, Rational(1, 2)}});
  CHECK_THROWS_AS(invert(RatMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
}

TEST_CASE("rcf and nullspace properties on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
    RatMatrix m = random_int_matrix(rng, r, c, -3, 3);
    if (trial % 3 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(r / 2, j);
    }
    auto e = rcf(m);
    CHECK(rcf(e.form).form == e.form);
    auto ns = nullspace_cib(e);
    CHECK(e.rank + ns.size() == c);
    for (const auto& v : ns) {
      Integer g = 0;
      for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      CHECK(g == 1);
      for (std::size_t i = 0; i < r; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < c; ++j) s += m(i, j) * Rational(v[j]);
        CHECK(s == 0);
      }
    }
    // Row spaces agree: stacking m under its rcf does not raise the rank.
    RatRowReducer red(c);
    for (std::size_t i = 0; i < e.rank; ++i) red.add_row({e.form.row(i).begin(), e.form.row(i).end()});
    for (std::size_t i = 0; i < r; ++i) red.add_row({m.row(i).begin(), m.row(i).end()});
    CHECK(red.rank() == e.rank);
    CHECK(red.form() == rcf(red.form()).form);
    CHECK(red.nullspace_cib() == ns);
    if (r == c && e.rank == r) CHECK(invert(m) * m == RatMatrix::identity(r));
  }
}

TEST_CASE("modular row reduction") {
  ModMatrix m(101, 1, 2);
  m.set(0, 0, 2);
  m.set(0, 1, 4);
  auto e = mod_rcf(m);
  CHECK(e.rank == 1);
  CHECK(e.form(0, 0) == 1);
  CHECK(e.form(0, 1) == 2);

  auto z = mod_rcf(ModMatrix(101, 3, 4));
  CHECK(z.rank == 0);
  CHECK(z.form == ModMatrix(101, 3, 4));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t rows = 50, cols = 60;
    RatMatrix q = random_int_matrix(rng, rows, cols, 0, 100);
    // Force some dependence so the rank is not trivially full.
    for (std::size_t j = 0; j < cols; ++j) q(rows - 1, j) = 0;
    ModMatrix mm(101, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) mm.set(i, j, q(i, j).get_num().get_si());
    auto me = mod_rcf(mm);
    CHECK(me.rank == rcf(q).rank);
    ModRowReducer red(101, cols);
    for (std::size_t i = 0; i < rows; ++i) red.add_row(mm.row(i));
    for (const auto& v : red.nullspace()) {
      for (std::size_t i = 0; i < rows; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += std::uint64_t(mm(i, j)) * v[j];
        CHECK(s % 101 == 0);
      }
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  const UniPoly x = UniPoly::x();
  CHECK(gcd(x * x - UniPoly(1), x - UniPoly(1)) == x - UniPoly(1));
  CHECK((x + UniPoly(1)) * (x - UniPoly(1)) == x * x - UniPoly(1));
  auto [q, r] = divmod(x * x * x, x - UniPoly(2));
  CHECK(q == x * x + UniPoly(2) * x + UniPoly(4));
  CHECK(r == UniPoly(8));
  CHECK_THROWS(divmod(x, UniPoly()));
  CHECK((x - UniPoly(Rational(5, 4))).to_string() == "x - 5/4");
}

TEST_CASE("smith normal form over Q[x]") {
  const UniPoly x = UniPoly::x();
  PolyMatrix a(2, 2);
  a(0, 0) = x;
  a(1, 1) = UniPoly(1);
  CHECK(smith_diagonal(a) == std::vector<UniPoly>{UniPoly(1), x});

  PolyMatrix b(2, 2);
  b(0, 0) = x;
  b(1, 1) = x - UniPoly(1);
  CHECK(smith_diagonal(b) == std::vector<UniPoly>{UniPoly(1), x * x - x});

  PolyMatrix c(3, 2);
  c(0, 0) = UniPoly(2) * x;
  c(1, 0) = UniPoly(4) * x;
  c(0, 1) = x * x;
  c(1, 1) = UniPoly(2) * x * x;
  c(2, 1) = UniPoly(0);
  CHECK(smith_diagonal(c) == std::vector<UniPoly>{x, UniPoly()});

  // Divisibility chain and determinant on random square matrices.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = UniPoly{Rational(long(rng() % 5) - 2), Rational(long(rng() % 3) - 1)};
    UniPoly det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                  m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    auto d = smith_diagonal(m);
    REQUIRE(d.size() == 3);
    for (int i = 0; i + 1 < 3; ++i) {
      if (!d[i + 1].is_zero()) CHECK(divmod(d[i + 1], d[i]).second.is_zero());
    }
    if (!det.is_zero()) CHECK(d[0] * d[1] * d[2] == det.monic());
  }
}

TEST_CASE("smith form survives unimodular scrambling") {
  const UniPoly x = UniPoly::x();
  const UniPoly a = x - UniPoly(2);
  const std::vector<UniPoly> expected{UniPoly(1), a, a * a * (x + UniPoly(1))};
  PolyMatrix d(4, 3);
  for (std::size_t i = 0; i < 3; ++i) d(i, i) = expected[i];

  // Unit lower-triangular row mixing and a polynomial column operation.
  std::mt19937_64 rng(11);
  PolyMatrix m(4, 3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      UniPoly acc = d(i, j);
      for (std::size_t k = 0; k < i; ++k) acc += UniPoly(long(rng() % 7) - 3) * d(k, j);
      m(i, j) = acc;
    }
  for (std::size_t i = 0; i < 4; ++i) m(i, 2) += (x * x + UniPoly(3)) * m(i, 0);
  CHECK(smith_diagonal(m) == expected);
  CHECK(smith_diagonal(d) == expected);
}

TEST_CASE("smith form of a matrix rank deficient on both sides") {
  const UniPoly x = UniPoly::x();
  PolyMatrix m(2, 2);
  m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = x * (x + UniPoly(1));
  CHECK(smith_diagonal(m) == std::vector<UniPoly>{x * x + x, UniPoly()});
}

TEST_CASE("polynomial gcd with large coefficients") {
  const UniPoly x = UniPoly::x();
  const UniPoly r = x - UniPoly(Rational(5, 4));
  UniPoly big = UniPoly(1);
  for (int k = 0; k < 12; ++k) big *= x + UniPoly(Rational(1000003 * (k + 1), 7));
  const UniPoly a = r * r * r * (x * x + UniPoly(1)) * big;
  const UniPoly b = r * r * (x + UniPoly(3)) * UniPoly(Rational(22, 9));
  CHECK(gcd(a, b) == r * r);
  CHECK(gcd(a, a * UniPoly(Rational(-3, 5))) == a.monic());
  CHECK(gcd(x + UniPoly(1), x) == UniPoly(1));
}
