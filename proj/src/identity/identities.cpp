#include "qalg/identity/identities.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qalg {

IdentityVector IdentityVector::zero(int degree) {
  return {degree, std::vector<Rational>(monomial_basis(degree).size())};
}

std::size_t IdentityVector::support_size() const {
  return static_cast<std::size_t>(std::count_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c != 0; }));
}

std::string IdentityVector::to_string() const {
  const auto& basis = monomial_basis(degree);
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const Rational& c = coeffs[j];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (mag != 1) out += qalg::to_string(mag) + "*";
    out += basis[j].to_string();
  }
  return out.empty() ? "0" : out;
}

IdentityVector SparseIdentity::dense() const {
  IdentityVector v = IdentityVector::zero(degree);
  for (const auto& [j, c] : terms) v.coeffs[static_cast<std::size_t>(j)] = Rational(static_cast<long>(c));
  return v;
}

SparseIdentity SparseIdentity::from_dense(const IdentityVector& v) {
  SparseIdentity s{v.degree, {}};
  for (std::size_t j = 0; j < v.coeffs.size(); ++j) {
    const Rational& c = v.coeffs[j];
    if (c == 0) continue;
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) throw std::invalid_argument("coefficient not a small integer");
    s.terms.emplace_back(static_cast<int>(j), c.get_num().get_si());
  }
  return s;
}

IdentityVector identity_from_terms(int degree, const std::vector<std::pair<Term, Rational>>& terms) {
  IdentityVector v = IdentityVector::zero(degree);
  for (const auto& [t, c] : terms) {
    if (t.degree() != degree) throw std::invalid_argument("term degree mismatch");
    auto s = straighten_to_monomial(t);
    if (s.sign == 0) continue;
    const int idx = monomial_index(s.monomial);
    if (idx < 0) throw std::invalid_argument("term is not multilinear: " + t.to_string());
    v.coeffs[static_cast<std::size_t>(idx)] += s.sign * c;
  }
  return v;
}

IdentityVector apply_permutation(const IdentityVector& iv, const std::vector<int>& perm) {
  const auto& basis = monomial_basis(iv.degree);
  IdentityVector out = IdentityVector::zero(iv.degree);
  for (std::size_t j = 0; j < iv.coeffs.size(); ++j) {
    if (iv.coeffs[j] == 0) continue;
    Monomial m = basis[j];
    const int sign = permute_variables(m, perm);
    if (sign == 0) continue;
    out.coeffs[static_cast<std::size_t>(monomial_index(m))] += sign * iv.coeffs[j];
  }
  return out;
}

SparseIdentity apply_permutation(const SparseIdentity& iv, const std::vector<int>& perm) {
  const auto& basis = monomial_basis(iv.degree);
  std::map<int, std::int64_t> acc;
  for (const auto& [j, c] : iv.terms) {
    Monomial m = basis[static_cast<std::size_t>(j)];
    const int sign = permute_variables(m, perm);
    if (sign == 0) continue;
    acc[monomial_index(m)] += sign * c;
  }
  SparseIdentity out{iv.degree, {}};
  for (const auto& [j, c] : acc) {
    if (c != 0) out.terms.emplace_back(j, c);
  }
  return out;
}

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

namespace {

IdentityVector make_primitive(IdentityVector v) {
  const auto ints = primitive_integer_vector(v.coeffs);
  for (std::size_t j = 0; j < ints.size(); ++j) v.coeffs[j] = Rational(ints[j]);
  return v;
}

Term var(int v) { return Term::variable(v); }

Term bracket_of(const std::vector<int>& xs) { return Term::bracket(var(xs[0]), var(xs[1]), var(xs[2]), var(xs[3])); }

}  // namespace

IdentityVector canonical_identity(IdentityKind kind) {
  if (kind == IdentityKind::Derivation) {
    // The operator [a,b,c,-] acts as a derivation of the product [d,e,f,g].
    const Term abc_d = bracket_of({0, 1, 2, 3}), abc_e = bracket_of({0, 1, 2, 4});
    const Term abc_f = bracket_of({0, 1, 2, 5}), abc_g = bracket_of({0, 1, 2, 6});
    std::vector<std::pair<Term, Rational>> terms{
        {Term::bracket(abc_d, var(4), var(5), var(6)), 1},
        {Term::bracket(var(3), abc_e, var(5), var(6)), 1},
        {Term::bracket(var(3), var(4), abc_f, var(6)), 1},
        {Term::bracket(var(3), var(4), var(5), abc_g), 1},
        {Term::bracket(var(0), var(1), var(2), bracket_of({3, 4, 5, 6})), -1},
    };
    return identity_from_terms(7, terms);
  }
  std::vector<std::pair<Term, Rational>> terms;
  for (const auto& p : all_permutations(7)) {
    terms.emplace_back(Term::bracket(bracket_of({p[0], p[1], p[2], p[3]}), var(p[4]), var(p[5]), var(p[6])),
                       Rational(permutation_sign(p)));
  }
  return make_primitive(identity_from_terms(7, terms));
}

namespace {

Term replace_vars(const Term& t, const std::vector<Term>& replacement) {
  if (t.is_variable()) return replacement.at(static_cast<std::size_t>(t.var));
  Term out;
  for (const auto& a : t.args) out.args.push_back(replace_vars(a, replacement));
  return out;
}

}  // namespace

IdentityVector substitute(const IdentityVector& iv, const std::vector<Term>& replacement, const std::vector<int>& wrap) {
  if (!wrap.empty() && wrap.size() != 3) throw std::invalid_argument("wrap needs three variables");
  const auto& basis = monomial_basis(iv.degree);
  std::vector<std::pair<Term, Rational>> terms;
  int degree = 0;
  for (std::size_t j = 0; j < iv.coeffs.size(); ++j) {
    if (iv.coeffs[j] == 0) continue;
    Term t = replace_vars(to_term(basis[j]), replacement);
    if (!wrap.empty()) t = Term::bracket(std::move(t), var(wrap[0]), var(wrap[1]), var(wrap[2]));
    degree = t.degree();
    terms.emplace_back(std::move(t), iv.coeffs[j]);
  }
  if (terms.empty()) throw std::invalid_argument("cannot substitute into the zero identity");
  return identity_from_terms(degree, terms);
}

std::vector<Consequence> degree10_consequences(IdentityKind kind) {
  const IdentityVector base = canonical_identity(kind);
  auto identity_vars = [] {
    std::vector<Term> r;
    for (int v = 0; v < 7; ++v) r.push_back(var(v));
    return r;
  };
  const std::vector<int> hij{7, 8, 9};
  std::vector<Consequence> out;
  const std::string name = kind == IdentityKind::Derivation ? "D" : "S";

  // x_k replaced by [x_k,h,i,j]
  auto nest_at = [&](int k, std::vector<std::vector<int>> blocks) {
    auto r = identity_vars();
    r[static_cast<std::size_t>(k)] = bracket_of({k, 7, 8, 9});
    std::string args;
    for (int v = 0; v < 7; ++v) {
      args += v ? "," : "";
      args += v == k ? "[" + std::string(1, char('a' + v)) + ",h,i,j]" : std::string(1, char('a' + v));
    }
    out.push_back({name + "(" + args + ")", SparseIdentity::from_dense(substitute(base, r)), std::move(blocks)});
  };
  auto wrapped = [&](std::vector<std::vector<int>> blocks) {
    out.push_back({"[" + name + "(a,b,c,d,e,f,g),h,i,j]", SparseIdentity::from_dense(substitute(base, identity_vars(), hij)),
                   std::move(blocks)});
  };

  if (kind == IdentityKind::Derivation) {
    nest_at(0, {{0, 7, 8, 9}, {1, 2}, {3, 4, 5, 6}});
    for (int k = 3; k <= 6; ++k) {
      std::vector<int> rest;
      for (int v = 3; v <= 6; ++v)
        if (v != k) rest.push_back(v);
      nest_at(k, {{0, 1, 2}, {k, 7, 8, 9}, rest});
    }
    wrapped({{0, 1, 2}, {3, 4, 5, 6}, {7, 8, 9}});
  } else {
    nest_at(0, {{0, 7, 8, 9}, {1, 2, 3, 4, 5, 6}});
    wrapped({{0, 1, 2, 3, 4, 5, 6}, {7, 8, 9}});
  }
  return out;
}

std::vector<std::vector<int>> block_coset_permutations(const std::vector<std::vector<int>>& blocks) {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(total), -1);
  std::vector<bool> used(static_cast<std::size_t>(total), false);

  // Chooses an increasing target subset for block b, position k, values >= start.
  auto rec = [&](auto&& self, std::size_t b, std::size_t k, int start) -> void {
    if (b == blocks.size()) {
      out.push_back(perm);
      return;
    }
    if (k == blocks[b].size()) {
      self(self, b + 1, 0, 0);
      return;
    }
    for (int v = start; v < total; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      perm[static_cast<std::size_t>(blocks[b][k])] = v;
      self(self, b, k + 1, v + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

}  // namespace qalg
