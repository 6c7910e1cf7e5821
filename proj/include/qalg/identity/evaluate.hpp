#pragma once

#include "qalg/exactla/mod_matrix.hpp"
#include "qalg/exactla/unipoly.hpp"
#include "qalg/identity/monomial.hpp"
#include "qalg/sl2rep/structure.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace qalg {

// Scalar policies used by the templated evaluator.

struct RationalField {
  using value_type = Rational;
  value_type zero() const { return 0; }
  value_type from_rational(const Rational& q) const { return q; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a == 0; }
};

struct ModField {
  using value_type = std::uint32_t;
  std::uint32_t p;

  value_type zero() const { return 0; }
  value_type from_rational(const Rational& q) const {
    const Integer pz = p;
    Integer num = q.get_num() % pz;
    if (num < 0) num += pz;
    const Integer den = q.get_den() % pz;
    if (den == 0) throw std::domain_error("denominator divisible by the modulus");
    const std::uint64_t n = num.get_ui();
    return static_cast<value_type>(n * mod_inverse(static_cast<std::uint32_t>(den.get_ui()), p) % p);
  }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
  }
  bool is_zero(value_type a) const { return a == 0; }
};

struct PolyField {
  using value_type = UniPoly;
  value_type zero() const { return {}; }
  value_type from_rational(const Rational& q) const { return UniPoly(q); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
};

/// One nonzero structure constant in basis-index form: the wedge of
/// v_{n-2i}, i in idx (ascending), maps to value * v_{n-2*out}.
template <class V>
struct IndexedConstant {
  std::array<int, 4> idx;
  int out;
  V value;
};

using RationalConstants = std::vector<IndexedConstant<Rational>>;

RationalConstants indexed_constants(const StructureTable& st, TableForm form = TableForm::Integral);
/// f + x*g entrywise; f and g must come from the same n.
RationalConstants combine(const RationalConstants& f, const RationalConstants& g, const Rational& x);
/// f + x*g with x kept formal.
std::vector<IndexedConstant<UniPoly>> parametric_constants(const RationalConstants& f, const RationalConstants& g);

template <class Field>
class Evaluator {
 public:
  using V = typename Field::value_type;
  using Vec = std::vector<V>;

  Evaluator(Field field, int n, const std::vector<IndexedConstant<Rational>>& constants)
      : field_(field), dim_(n + 1) {
    for (const auto& c : constants) {
      V v = field_.from_rational(c.value);
      if (!field_.is_zero(v)) entries_.push_back({c.idx, c.out, std::move(v)});
    }
  }

  Evaluator(Field field, int n, std::vector<IndexedConstant<V>> constants)
    requires(!std::is_same_v<V, Rational>)
      : field_(field), dim_(n + 1) {
    for (auto& c : constants) {
      if (!field_.is_zero(c.value)) entries_.push_back(std::move(c));
    }
  }

  const Field& field() const { return field_; }
  int dim() const { return dim_; }

  Vec bracket(const Vec& a, const Vec& b, const Vec& c, const Vec& d) const {
    const int n = dim_;
    std::vector<V> ab(static_cast<std::size_t>(n * n), field_.zero());
    std::vector<V> cd(static_cast<std::size_t>(n * n), field_.zero());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        ab[i * n + j] = field_.sub(field_.mul(a[i], b[j]), field_.mul(a[j], b[i]));
        cd[i * n + j] = field_.sub(field_.mul(c[i], d[j]), field_.mul(c[j], d[i]));
      }
    }
    Vec out(static_cast<std::size_t>(n), field_.zero());
    for (const auto& e : entries_) {
      const int i = e.idx[0], j = e.idx[1], k = e.idx[2], l = e.idx[3];
      V pos = field_.add(field_.add(field_.mul(ab[i * n + j], cd[k * n + l]), field_.mul(ab[i * n + l], cd[j * n + k])),
                         field_.add(field_.mul(ab[j * n + k], cd[i * n + l]), field_.mul(ab[k * n + l], cd[i * n + j])));
      V neg = field_.add(field_.mul(ab[i * n + k], cd[j * n + l]), field_.mul(ab[j * n + l], cd[i * n + k]));
      V det = field_.sub(pos, neg);
      if (field_.is_zero(det)) continue;
      out[e.out] = field_.add(out[e.out], field_.mul(e.value, det));
    }
    return out;
  }

 private:
  Field field_;
  int dim_;
  std::vector<IndexedConstant<V>> entries_;
};

/// Shared subterms of all basis monomials of one degree, so each distinct
/// bracket is computed once per argument tuple.
struct EvaluationPlan {
  int degree = 0;
  // Child references: r >= 0 is variable r; r < 0 is node -r-1.
  std::vector<std::array<int, 4>> nodes;
  std::vector<int> roots;  // node index per basis monomial
};

const EvaluationPlan& evaluation_plan(int degree);

/// Values of all basis monomials of plan.degree at the given arguments.
template <class Field>
std::vector<typename Evaluator<Field>::Vec> evaluate_basis(const Evaluator<Field>& ev, const EvaluationPlan& plan,
                                                           const std::vector<typename Evaluator<Field>::Vec>& args) {
  using Vec = typename Evaluator<Field>::Vec;
  if (static_cast<int>(args.size()) != plan.degree) throw std::invalid_argument("wrong number of arguments");
  for (const auto& a : args) {
    if (static_cast<int>(a.size()) != ev.dim()) throw std::invalid_argument("argument has wrong dimension");
  }
  std::vector<Vec> values(plan.nodes.size());
  auto get = [&](int r) -> const Vec& { return r >= 0 ? args[r] : values[-r - 1]; };
  for (std::size_t k = 0; k < plan.nodes.size(); ++k) {
    const auto& c = plan.nodes[k];
    values[k] = ev.bracket(get(c[0]), get(c[1]), get(c[2]), get(c[3]));
  }
  std::vector<Vec> out;
  out.reserve(plan.roots.size());
  for (int r : plan.roots) out.push_back(values[r]);
  return out;
}

}  // namespace qalg
