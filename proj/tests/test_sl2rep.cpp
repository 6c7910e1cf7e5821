#include "golden.hpp"

#include "qalg/sl2rep/structure.hpp"
#include "qalg/sl2rep/weight_basis.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace qalg;

namespace {

std::vector<Rational> basis_vector(int n, int i) {
  std::vector<Rational> v(static_cast<std::size_t>(n + 1));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::vector<Rational> scaled(const std::vector<Rational>& a, const Rational& c) {
  std::vector<Rational> out(a);
  for (auto& x : out) x *= c;
  return out;
}

QuadCombination minus(QuadCombination a, const QuadCombination& b) {
  for (const auto& [t, c] : b) a[t] -= c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

QuadCombination times(QuadCombination a, const Rational& c) {
  for (auto& kv : a) kv.second *= c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

std::vector<Rational> random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Rational> v(static_cast<std::size_t>(n + 1));
  for (auto& x : v) x = d(rng);
  return v;
}

RatMatrix to_matrix(const golden::Json& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto r = golden::rationals(rows[i]);
    for (std::size_t j = 0; j < r.size(); ++j) m(i, j) = r[j];
  }
  return m;
}

}  // namespace

TEST_CASE("generators of sl2 satisfy the commutation relations on V(n)") {
  for (int n : {1, 4, 7, 10}) {
    for (int i = 0; i <= n; ++i) {
      const auto v = basis_vector(n, i);
      auto H = [&](const auto& x) { return act(Generator::H, n, x); };
      auto E = [&](const auto& x) { return act(Generator::E, n, x); };
      auto F = [&](const auto& x) { return act(Generator::F, n, x); };
      CHECK(sub(E(F(v)), F(E(v))) == H(v));
      CHECK(sub(H(E(v)), E(H(v))) == scaled(E(v), 2));
      CHECK(sub(H(F(v)), F(H(v))) == scaled(F(v), -2));
    }
  }
}

TEST_CASE("commutation relations hold on the fourth exterior power") {
  for (int n : {4, 6, 8}) {
    for (const auto& t : quadruple_basis(n)) {
      const QuadCombination v{{t, 1}};
      auto H = [&](const auto& x) { return act_on_combination(Generator::H, n, x); };
      auto E = [&](const auto& x) { return act_on_combination(Generator::E, n, x); };
      auto F = [&](const auto& x) { return act_on_combination(Generator::F, n, x); };
      CHECK(minus(E(F(v)), F(E(v))) == H(v));
      CHECK(minus(H(E(v)), E(H(v))) == times(E(v), 2));
      CHECK(minus(H(F(v)), F(H(v))) == times(F(v), -2));
    }
  }
}

TEST_CASE("quadruple basis size and order") {
  for (int n : {4, 6, 8, 10}) {
    const auto basis = quadruple_basis(n);
    const long m = n + 1;
    CHECK(basis.size() == static_cast<std::size_t>(m * (m - 1) * (m - 2) * (m - 3) / 24));
    for (std::size_t i = 1; i < basis.size(); ++i) CHECK(standard_before(basis[i - 1], basis[i]));
  }
}

TEST_CASE("tensor bases match the reference tables") {
  const auto data = golden::load("weight_bases.json")["tensor_basis"];
  for (const auto& [key, by_weight] : data.items()) {
    const int n = std::stoi(key);
    for (const auto& [wkey, quads] : by_weight.items()) {
      const auto slice = quadruples_of_weight(n, std::stoi(wkey));
      REQUIRE(slice.size() == quads.size());
      for (std::size_t j = 0; j < slice.size(); ++j) {
        CHECK(slice[j].w == quads[j].get<std::array<int, 4>>());
      }
    }
  }
}

TEST_CASE("decompositions of the fourth exterior power") {
  const auto data = golden::load("multiplicity_tables.json")["decompositions"];
  for (const auto& [key, expected] : data.items()) {
    std::map<int, int, std::greater<>> want;
    for (const auto& [w, m] : expected.items()) want[std::stoi(w)] = m.get<int>();
    CHECK(decompose(std::stoi(key)) == want);
  }
}

TEST_CASE("highest weight vector examples: E-matrix, rcf and CIB") {
  const auto data = golden::load("highest_weight_examples.json");
  REQUIRE(data.size() == 12);
  for (const auto& ex : data) {
    const int n = ex["n"], w = ex["weight"];
    CAPTURE(n);
    CAPTURE(w);
    const RatMatrix e = e_action_matrix(n, w);
    CHECK(e == to_matrix(ex["e_matrix"]));
    const auto echelon = rcf(e);
    RatMatrix top(echelon.rank, e.cols());
    for (std::size_t i = 0; i < echelon.rank; ++i)
      for (std::size_t j = 0; j < e.cols(); ++j) top(i, j) = echelon.form(i, j);
    CHECK(top == to_matrix(ex["rcf"]));
    const auto cib = nullspace_cib(echelon);
    REQUIRE(cib.size() == ex["cib"].size());
    for (std::size_t k = 0; k < cib.size(); ++k) {
      const auto want = golden::rationals(ex["cib"][k]);
      REQUIRE(cib[k].size() == want.size());
      for (std::size_t j = 0; j < want.size(); ++j) CHECK(Rational(cib[k][j]) == want[j]);
      // the same vectors come out of highest_weight_vectors
      CHECK(highest_weight_vectors(n, w)[k].dense(n) == want);
    }
  }
}

TEST_CASE("weight vector bases match the reference tables") {
  const auto data = golden::load("weight_bases.json")["weight_basis"];
  for (const auto& [key, summands] : data.items()) {
    const int n = std::stoi(key);
    const auto basis = weight_vector_basis(n);
    std::size_t pos = 0;
    for (const auto& summand : summands) {
      const int hw = summand["highest_weight"], copy = summand["copy"];
      for (int k = 0; k <= hw; ++k, ++pos) {
        REQUIRE(pos < basis.size());
        const auto& v = basis[pos];
        CHECK(v.highest_weight == hw);
        CHECK(v.copy == copy);
        CHECK(v.f_power == k);
        CHECK(v.dense(n) == golden::rationals(summand["vectors"][std::to_string(hw - 2 * k)]));
      }
    }
    CHECK(pos == basis.size());
  }
}

TEST_CASE("weight vector matrix times its inverse is the identity") {
  for (int n : {4, 6, 8}) {
    const auto c = weight_vector_matrix(n, weight_vector_basis(n));
    CHECK(c * invert(c) == RatMatrix::identity(c.rows()));
  }
}

TEST_CASE("structure constants match the reference integral tables") {
  const auto data = golden::load("structure_tables.json");
  for (const auto& [key, entries] : data.items()) {
    const int n = std::stoi(key.substr(0, key.find('/')));
    const int copy = std::stoi(key.substr(key.find('/') + 1));
    const auto st = structure_table(n, copy);
    std::map<Quadruple, Integer> ours;
    for (const auto& e : st.entries) ours[e.quad] = e.integral;
    REQUIRE(ours.size() == entries.size());
    for (const auto& e : entries) {
      const Quadruple q{e[0].get<std::array<int, 4>>()};
      CAPTURE(q.to_string());
      REQUIRE(ours.count(q) == 1);
      CHECK(ours[q] == Integer(e[1].get<long>()));
    }
  }
}

TEST_CASE("structure copies beyond the multiplicity are rejected") {
  CHECK_THROWS_AS(structure_table(4, 1), std::out_of_range);
  CHECK_THROWS_AS(structure_table(5, 0), std::out_of_range);
}

TEST_CASE("bracket is alternating") {
  std::mt19937_64 rng(7);
  for (int n : {4, 6, 8}) {
    const auto st = structure_table(n, 0);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_vector(rng, n), b = random_vector(rng, n), c = random_vector(rng, n),
                 d = random_vector(rng, n);
      const auto base = bracket(st, a, b, c, d);
      CHECK(bracket(st, b, a, c, d) == scaled(base, -1));
      CHECK(bracket(st, a, c, b, d) == scaled(base, -1));
      CHECK(bracket(st, a, b, d, c) == scaled(base, -1));
      CHECK(bracket(st, d, b, c, a) == scaled(base, -1));
      const auto zero = std::vector<Rational>(static_cast<std::size_t>(n + 1));
      CHECK(bracket(st, a, b, a, d) == zero);
    }
  }
}

TEST_CASE("generators act as derivations of the bracket") {
  std::mt19937_64 rng(11);
  for (int n : {4, 6, 8}) {
    for (const auto& st : structure_tables(n)) {
      for (Generator g : {Generator::H, Generator::E, Generator::F}) {
        auto D = [&](const auto& x) { return act(g, n, x); };
        for (int trial = 0; trial < 10; ++trial) {
          const auto a = random_vector(rng, n), b = random_vector(rng, n), c = random_vector(rng, n),
                     d = random_vector(rng, n);
          const auto lhs = D(bracket(st, a, b, c, d));
          auto rhs = bracket(st, D(a), b, c, d);
          for (const auto& part : {bracket(st, a, D(b), c, d), bracket(st, a, b, D(c), d), bracket(st, a, b, c, D(d))})
            for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += part[i];
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("structure tables round-trip through both text forms") {
  for (const auto& st : structure_tables(8)) {
    for (TableForm form : {TableForm::Integral, TableForm::Rational}) {
      std::stringstream ss;
      write_structure(ss, st, form);
      const auto back = read_structure(ss);
      CHECK(back.n == st.n);
      CHECK(back.copy == st.copy);
      CHECK(back.scale == st.scale);
      REQUIRE(back.entries.size() == st.entries.size());
      for (std::size_t i = 0; i < st.entries.size(); ++i) {
        CHECK(back.entries[i].quad == st.entries[i].quad);
        CHECK(back.entries[i].rational == st.entries[i].rational);
        CHECK(back.entries[i].integral == st.entries[i].integral);
      }
    }
  }
}

TEST_CASE("malformed structure files are rejected") {
  std::istringstream bad_header("n=4 copy=0\n");
  CHECK_THROWS(read_structure(bad_header));
  std::istringstream fraction_in_integral("# n=4 copy=0 scale=1\n[4,2,0,-2] = 1/2\n");
  CHECK_THROWS(read_structure(fraction_in_integral));
}
