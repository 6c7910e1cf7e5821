#include "qalg/identity/evaluate.hpp"

#include "qalg/identity/straighten.hpp"

#include <map>

namespace qalg {

RationalConstants indexed_constants(const StructureTable& st, TableForm form) {
  RationalConstants out;
  for (const auto& e : st.entries) {
    Rational v = form == TableForm::Integral ? Rational(e.integral) : e.rational;
    if (v == 0) continue;
    IndexedConstant<Rational> c{{}, st.output_index(e.quad), v};
    for (int k = 0; k < 4; ++k) c.idx[k] = (st.n - e.quad.w[k]) / 2;
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::map<std::array<int, 5>, std::pair<Rational, Rational>> pair_up(const RationalConstants& f,
                                                                    const RationalConstants& g) {
  std::map<std::array<int, 5>, std::pair<Rational, Rational>> m;
  for (const auto& c : f) m[{c.idx[0], c.idx[1], c.idx[2], c.idx[3], c.out}].first = c.value;
  for (const auto& c : g) m[{c.idx[0], c.idx[1], c.idx[2], c.idx[3], c.out}].second = c.value;
  return m;
}

}  // namespace

RationalConstants combine(const RationalConstants& f, const RationalConstants& g, const Rational& x) {
  RationalConstants out;
  for (const auto& [key, fg] : pair_up(f, g)) {
    Rational v = fg.first + x * fg.second;
    if (v != 0) out.push_back({{key[0], key[1], key[2], key[3]}, key[4], v});
  }
  return out;
}

std::vector<IndexedConstant<UniPoly>> parametric_constants(const RationalConstants& f, const RationalConstants& g) {
  std::vector<IndexedConstant<UniPoly>> out;
  for (const auto& [key, fg] : pair_up(f, g)) {
    UniPoly v{fg.first, fg.second};
    if (!v.is_zero()) out.push_back({{key[0], key[1], key[2], key[3]}, key[4], v});
  }
  return out;
}

namespace {

EvaluationPlan build_plan(int degree) {
  EvaluationPlan plan;
  plan.degree = degree;
  std::map<std::array<int, 4>, int> interned;
  auto intern = [&](auto&& self, const Term& t) -> int {
    if (t.is_variable()) return t.var;
    std::array<int, 4> key{};
    for (int k = 0; k < 4; ++k) key[k] = self(self, t.args[k]);
    auto it = interned.find(key);
    if (it != interned.end()) return -it->second - 1;
    const int id = static_cast<int>(plan.nodes.size());
    plan.nodes.push_back(key);
    interned.emplace(key, id);
    return -id - 1;
  };
  for (const auto& m : monomial_basis(degree)) plan.roots.push_back(-intern(intern, to_term(m)) - 1);
  return plan;
}

}  // namespace

const EvaluationPlan& evaluation_plan(int degree) {
  static const EvaluationPlan p4 = build_plan(4);
  static const EvaluationPlan p7 = build_plan(7);
  static const EvaluationPlan p10 = build_plan(10);
  switch (degree) {
    case 4: return p4;
    case 7: return p7;
    case 10: return p10;
    default: throw std::invalid_argument("unsupported degree");
  }
}

}  // namespace qalg
