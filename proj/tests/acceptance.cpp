// Acceptance runner: one PASS/FAIL line per criterion. With arguments, runs
// only the listed criterion numbers.

#include "golden.hpp"

#include "qalg/identity/generators.hpp"
#include "qalg/identity/search.hpp"
#include "qalg/multiplicity/multiplicity.hpp"
#include "qalg/sl2rep/structure.hpp"
#include "qalg/sl2rep/weight_basis.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace qalg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

// Structure tables are shared between criteria; n = 10 costs a 330 x 330 inversion.
const std::vector<StructureTable>& tables(int n) {
  static std::map<int, std::vector<StructureTable>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, structure_tables(n)).first;
  return it->second;
}

RationalConstants constants(int n, int copy) { return indexed_constants(tables(n).at(static_cast<std::size_t>(copy))); }

RatMatrix to_matrix(const golden::Json& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto r = golden::rationals(rows[i]);
    for (std::size_t j = 0; j < r.size(); ++j) m(i, j) = r[j];
  }
  return m;
}

std::vector<Rational> random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Rational> v(static_cast<std::size_t>(n + 1));
  for (auto& x : v) x = d(rng);
  return v;
}

std::string diag_summary(const std::vector<UniPoly>& diag) {
  std::string s;
  for (std::size_t i = 0; i < diag.size();) {
    std::size_t j = i;
    while (j < diag.size() && diag[j] == diag[i]) ++j;
    s += (s.empty() ? "" : ", ") + (diag[i].is_zero() ? std::string("0") : diag[i].to_string()) + " x" +
         std::to_string(j - i);
    i = j;
  }
  return s;
}

// ---------------------------------------------------------------------------

Outcome multiplicity_tables() {
  Outcome o;
  const auto data = golden::load("multiplicity_tables.json");
  int grid_bad = 0;
  for (int q = 0; q < 10; ++q)
    for (int k = 0; k < 12; ++k)
      if (multiplicity(24L * q + 2L * k) != Integer(data["grid"][q][k].get<long>())) ++grid_bad;
  o.require(grid_bad == 0, std::to_string(grid_bad) + " grid entries differ");
  int poly_bad = 0;
  for (const auto& row : data["scaled_polynomials"]) {
    const int r = row["r"];
    const auto a = scaled_dim_weight_n_poly(r);
    const auto b = scaled_dim_weight_n_plus_2_poly(r);
    const auto m = scaled_multiplicity_poly(r);
    for (int i = 0; i < 4; ++i) poly_bad += a[i] != Integer(row["weight_n"][i].get<long>());
    for (int i = 0; i < 4; ++i) poly_bad += b[i] != Integer(row["weight_n_plus_2"][i].get<long>());
    for (int i = 0; i < 3; ++i) poly_bad += m[i] != Integer(row["multiplicity"][i].get<long>());
  }
  o.require(poly_bad == 0, std::to_string(poly_bad) + " scaled coefficients differ");
  int brute_bad = 0;
  for (long n = 0; n <= 200; n += 2) brute_bad += multiplicity(n) != multiplicity_brute(n);
  o.require(brute_bad == 0, std::to_string(brute_bad) + " brute-force disagreements");
  if (o.pass) o.detail = "120 grid entries, 12 residue classes, brute force n <= 200";
  return o;
}

Outcome generating_polynomials() {
  Outcome o;
  const auto pn = golden::load("multiplicity_tables.json")["pn"];
  for (const auto& [key, terms] : pn.items()) {
    const UniPoly p = pn_polynomial(std::stoi(key));
    bool same = true;
    for (long e = 0; e <= std::max<long>(p.degree(), 40); ++e) {
      const std::string ek = std::to_string(e);
      same = same && p.coeff(static_cast<std::size_t>(e)) == (terms.contains(ek) ? terms[ek].get<long>() : 0);
    }
    o.require(same, "P_" + key + " differs");
  }
  if (o.pass) o.detail = "n = 4, 6, 8, 10";
  return o;
}

Outcome decompositions() {
  Outcome o;
  const auto data = golden::load("multiplicity_tables.json")["decompositions"];
  for (const auto& [key, expected] : data.items()) {
    std::map<int, int, std::greater<>> want;
    for (const auto& [w, m] : expected.items()) want[std::stoi(w)] = m.get<int>();
    o.require(decompose(std::stoi(key)) == want, "n = " + key + " differs");
  }
  if (o.pass) o.detail = "n = 4, 6, 8, 10";
  return o;
}

Outcome highest_weight_examples() {
  Outcome o;
  const auto data = golden::load("highest_weight_examples.json");
  std::size_t vectors = 0;
  for (const auto& ex : data) {
    const int n = ex["n"], w = ex["weight"];
    const std::string where = "n = " + std::to_string(n) + " weight " + std::to_string(w);
    const RatMatrix e = e_action_matrix(n, w);
    o.require(e == to_matrix(ex["e_matrix"]), where + ": E-matrix");
    const auto echelon = rcf(e);
    RatMatrix top(echelon.rank, e.cols());
    for (std::size_t i = 0; i < echelon.rank; ++i)
      for (std::size_t j = 0; j < e.cols(); ++j) top(i, j) = echelon.form(i, j);
    o.require(top == to_matrix(ex["rcf"]), where + ": rcf");
    const auto hwv = highest_weight_vectors(n, w);
    bool same = hwv.size() == ex["cib"].size();
    for (std::size_t k = 0; same && k < hwv.size(); ++k) same = hwv[k].dense(n) == golden::rationals(ex["cib"][k]);
    o.require(same, where + ": CIB");
    vectors += hwv.size();
  }
  // weights not listed in the examples carry a single trivial top vector or none
  for (int n : {6, 8}) {
    std::set<int> listed;
    for (const auto& ex : data)
      if (ex["n"] == n) listed.insert(ex["weight"].get<int>());
    for (const auto& [w, mult] : decompose(n)) {
      if (listed.count(w)) continue;
      const auto hwv = highest_weight_vectors(n, w);
      o.require(hwv.size() == 1 && hwv[0].coeffs.size() == 1 && hwv[0].coeffs.begin()->second == 1,
                "unlisted weight " + std::to_string(w) + " of n = " + std::to_string(n));
    }
  }
  if (o.pass) o.detail = std::to_string(data.size()) + " examples, " + std::to_string(vectors) + " vectors";
  return o;
}

Outcome weight_vector_bases() {
  Outcome o;
  const auto data = golden::load("weight_bases.json")["weight_basis"];
  std::size_t rows = 0;
  for (const auto& [key, summands] : data.items()) {
    const int n = std::stoi(key);
    const auto basis = weight_vector_basis(n);
    std::size_t pos = 0;
    bool same = true;
    for (const auto& summand : summands) {
      const int hw = summand["highest_weight"], copy = summand["copy"];
      for (int k = 0; k <= hw && same; ++k, ++pos) {
        same = pos < basis.size() && basis[pos].highest_weight == hw && basis[pos].copy == copy &&
               basis[pos].f_power == k &&
               basis[pos].dense(n) == golden::rationals(summand["vectors"][std::to_string(hw - 2 * k)]);
      }
    }
    o.require(same && pos == basis.size(), "n = " + key + " differs at row " + std::to_string(pos));
    rows += pos;
  }
  const auto c = weight_vector_matrix(10, weight_vector_basis(10));
  o.require(c.rows() == 330 && c * invert(c) == RatMatrix::identity(330), "n = 10 inverse check");
  if (o.pass) o.detail = std::to_string(rows) + " rows for n = 6, 8; 330 x 330 inverse for n = 10";
  return o;
}

Outcome structure_constants() {
  Outcome o;
  const auto data = golden::load("structure_tables.json");
  std::size_t count = 0;
  for (const auto& [key, entries] : data.items()) {
    const int n = std::stoi(key.substr(0, key.find('/')));
    const int copy = std::stoi(key.substr(key.find('/') + 1));
    std::map<Quadruple, Integer> ours;
    for (const auto& e : tables(n).at(static_cast<std::size_t>(copy)).entries) ours[e.quad] = e.integral;
    bool same = ours.size() == entries.size();
    for (const auto& e : entries) {
      const Quadruple q{e[0].get<std::array<int, 4>>()};
      same = same && ours.count(q) && ours[q] == Integer(e[1].get<long>());
    }
    o.require(same, "table n = " + std::to_string(n) + " copy " + std::to_string(copy));
    count += entries.size();
  }
  o.require(tables(10).size() == 2, "n = 10 should have two copies");
  if (o.pass) {
    o.detail = std::to_string(count) + " entries; n = 10 scales " + tables(10)[0].scale.get_str() + ", " +
               tables(10)[1].scale.get_str();
  }
  return o;
}

Outcome derivation_invariance() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t checks = 0;
  for (int n : {4, 6, 8, 10}) {
    for (const auto& st : tables(n)) {
      for (Generator g : {Generator::H, Generator::E, Generator::F}) {
        auto D = [&](const auto& x) { return act(g, n, x); };
        for (int trial = 0; trial < 50; ++trial) {
          const auto a = random_vector(rng, n), b = random_vector(rng, n), c = random_vector(rng, n),
                     d = random_vector(rng, n);
          auto rhs = bracket(st, D(a), b, c, d);
          for (const auto& part : {bracket(st, a, D(b), c, d), bracket(st, a, b, D(c), d), bracket(st, a, b, c, D(d))})
            for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += part[i];
          const bool ok = D(bracket(st, a, b, c, d)) == rhs;
          o.require(ok, "n = " + std::to_string(n) + " copy " + std::to_string(st.copy));
          ++checks;
          if (!ok) return o;
        }
      }
    }
  }
  o.detail = std::to_string(checks) + " Leibniz checks";
  return o;
}

// Degree-7 searches are reused by the property suite.
struct Degree7Case {
  std::string label;
  int n;
  RationalConstants constants;
  SearchResult result;
};

std::vector<Degree7Case>& degree7_cases() {
  static std::vector<Degree7Case> cases;
  if (cases.empty()) {
    const auto cfg = SearchConfig::rational_defaults();
    auto add = [&](std::string label, int n, RationalConstants c) {
      auto res = fill_and_reduce(c, n, 7, cfg);
      cases.push_back({std::move(label), n, std::move(c), std::move(res)});
    };
    add("V(4)", 4, constants(4, 0));
    add("V(6)", 6, constants(6, 0));
    add("V(8) g", 8, constants(8, 1));
    add("V(10) g", 10, constants(10, 1));
    add("V(10) f+5/4 g", 10, combine(constants(10, 0), constants(10, 1), Rational(5, 4)));
  }
  return cases;
}

Outcome degree7_searches() {
  Outcome o;
  const auto D = canonical_identity(IdentityKind::Derivation);
  const auto S = canonical_identity(IdentityKind::AlternatingSum);
  const auto& cases = degree7_cases();
  std::ostringstream detail;
  for (const auto& c : cases) detail << (&c == &cases[0] ? "" : ", ") << c.label << " " << c.result.rank << "/" << c.result.nullity();

  const auto& v4 = cases[0].result;
  o.require(v4.rank == 14 && v4.nullity() == 21, "V(4) dimensions");
  o.require(in_span(D, v4.nullspace) && module_generators({D}).dimension == 21, "V(4) not generated by D");
  for (std::size_t k = 1; k < cases.size(); ++k) {
    const auto& r = cases[k].result;
    if (k == 3) {
      o.require(r.rank == 35 && r.nullity() == 0, cases[k].label + " dimensions");
    } else {
      o.require(r.nullity() == 1 && in_span(S, r.nullspace), cases[k].label + " nullspace is not span(S)");
    }
  }
  o.require(cases[1].result.rank == 34, "V(6) rank");
  o.detail = detail.str() + (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome parametric_scans() {
  Outcome o;
  std::string detail;
  for (int n : {8, 10}) {
    const auto scan = parametric_scan(constants(n, 0), constants(n, 1), n, 7, 4, SearchConfig::rational_defaults());
    std::vector<UniPoly> want;
    if (n == 8) {
      want.assign(34, UniPoly(Rational(1)));
      want.push_back(UniPoly());
    } else {
      want.assign(28, UniPoly(Rational(1)));
      want.insert(want.end(), 7, UniPoly{Rational(-5, 4), Rational(1)});
    }
    o.require(scan.diagonal == want, "n = " + std::to_string(n) + " diagonal " + diag_summary(scan.diagonal));
    detail += (detail.empty() ? "" : "; ") + ("V(" + std::to_string(n) + ") " + diag_summary(scan.diagonal));
  }
  if (o.pass) o.detail = detail;
  return o;
}

Outcome identity_relations() {
  Outcome o;
  const auto D = canonical_identity(IdentityKind::Derivation);
  const auto S = canonical_identity(IdentityKind::AlternatingSum);
  RatRowReducer orbit(35);
  for (const auto& perm : all_permutations(7)) orbit.add_row(apply_permutation(D, perm).coeffs);
  const std::size_t module_rank = orbit.rank();
  o.require(!orbit.add_row(S.coeffs), "S is not in the module of D");

  struct Target {
    std::string label;
    int n;
    RationalConstants c;
  };
  const std::vector<Target> targets{{"V(6)", 6, constants(6, 0)},
                                    {"V(8) f", 8, constants(8, 0)},
                                    {"V(8) g", 8, constants(8, 1)},
                                    {"V(10) f+5/4 g", 10, combine(constants(10, 0), constants(10, 1), Rational(5, 4))}};
  Prng rng(77);
  for (const auto& t : targets) {
    bool zero = true;
    for (int trial = 0; trial < 50 && zero; ++trial) {
      for (const auto& x : evaluate_identity(S, t.c, t.n, random_arguments(rng, 7, t.n, 10))) zero = zero && x == 0;
    }
    o.require(zero, "S does not vanish on " + t.label);
  }
  if (o.pass) o.detail = "module of D has rank " + std::to_string(module_rank) + "; S vanishes on 4 structures";
  return o;
}

Outcome degree10_modular() {
  Outcome o;
  std::string detail;
  struct Case {
    int n;
    IdentityKind kind;
    std::size_t rank, nullity, module_dim;
  };
  for (const Case& c : {Case{4, IdentityKind::Derivation, 660, 5115, 5115},
                        Case{6, IdentityKind::AlternatingSum, 1903, 3872, 329}}) {
    auto cfg = SearchConfig::modular_defaults();
    cfg.want_nullspace = false;
    const auto res = fill_and_reduce(constants(c.n, 0), c.n, 10, cfg);
    const auto& rows = *res.modular_rows;
    const auto mod = consequence_module_dimension(degree10_consequences(c.kind), cfg.p, cfg.seed,
                                                  [&](const std::vector<std::uint32_t>& v) { return annihilated_by(rows, v); });
    const std::string label = "V(" + std::to_string(c.n) + ") " + std::to_string(res.rank) + "/" +
                              std::to_string(res.nullity()) + " module " + std::to_string(mod.dimension);
    o.require(res.rank == c.rank && res.nullity() == c.nullity && mod.dimension == c.module_dim && mod.all_annihilated,
              label);
    detail += (detail.empty() ? "" : "; ") + label;
  }
  if (o.pass) o.detail = detail;
  return o;
}

Outcome property_suite() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    RatMatrix m(6, 8);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 8; ++j) m(i, j) = trial % 3 == 0 && j % 3 == 0 ? 0 : d(rng);
    const auto e = rcf(m);
    o.require(rcf(e.form).form == e.form, "rcf not idempotent");
    for (const auto& v : nullspace_cib(e)) {
      std::vector<Rational> q(v.begin(), v.end());
      const auto image = m * q;
      o.require(std::all_of(image.begin(), image.end(), [](const Rational& x) { return x == 0; }),
                "CIB vector not in the nullspace");
    }
    o.require(nullspace_cib(e).size() == 8 - e.rank, "CIB size");
  }
  for (int n : {4, 6, 8}) {
    const auto c = weight_vector_matrix(n, weight_vector_basis(n));
    o.require(c * invert(c) == RatMatrix::identity(c.rows()), "C C^-1 != I for n = " + std::to_string(n));
    for (const auto& t : quadruple_basis(n)) {
      const QuadCombination v{{t, 1}};
      auto apply = [&](Generator g, const QuadCombination& x) { return act_on_combination(g, n, x); };
      QuadCombination ef = apply(Generator::E, apply(Generator::F, v));
      for (const auto& [q, x] : apply(Generator::F, apply(Generator::E, v))) ef[q] -= x;
      std::erase_if(ef, [](const auto& kv) { return kv.second == 0; });
      o.require(ef == apply(Generator::H, v), "[E,F] != H on " + t.to_string());
    }
    for (const auto& st : tables(n)) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_vector(rng, n), b = random_vector(rng, n), x = random_vector(rng, n),
                   y = random_vector(rng, n);
        auto neg = bracket(st, b, a, x, y);
        for (auto& z : neg) z = -z;
        o.require(bracket(st, a, b, x, y) == neg, "bracket not alternating");
        const auto zero = bracket(st, a, b, a, y);
        o.require(std::all_of(zero.begin(), zero.end(), [](const Rational& z) { return z == 0; }),
                  "bracket nonzero on repeated argument");
      }
    }
  }
  std::size_t checked = 0;
  for (const auto& c : degree7_cases()) {
    for (const auto& iv : c.result.nullspace) {
      o.require(vanishes_on_held_out(iv, c.constants, c.n, 50, 0), c.label + " identity fails on held-out tuples");
      ++checked;
    }
  }
  const auto again = fill_and_reduce(constants(6, 0), 6, 7, SearchConfig::rational_defaults());
  o.require(again.rank == degree7_cases()[1].result.rank && again.iterations == degree7_cases()[1].result.iterations &&
                again.nullspace == degree7_cases()[1].result.nullspace,
            "search not deterministic");
  if (o.pass) o.detail = std::to_string(checked) + " reported identities held out";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "multiplicity tables", 10, multiplicity_tables},
      {2, "generating polynomials", 1, generating_polynomials},
      {3, "decompositions", 5, decompositions},
      {4, "highest weight vectors", 5, highest_weight_examples},
      {5, "weight vector bases", 30, weight_vector_bases},
      {6, "structure constants", 60, structure_constants},
      {7, "derivation invariance", 30, derivation_invariance},
      {8, "degree-7 identity searches", 5 * 60, degree7_searches},
      {9, "parametric Smith scans", 2 * 300, parametric_scans},
      {10, "D/S relations", 60, identity_relations},
      {11, "degree-10 modular searches", 3 * 3600, degree10_modular},
      {12, "property suite", 120, property_suite},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) o.require(false, "over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget");
    std::printf("criterion %2d %s  %s (%.2f s): %s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
