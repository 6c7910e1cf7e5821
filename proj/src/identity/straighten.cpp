#include "qalg/identity/straighten.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qalg {

Term Term::bracket(Term a, Term b, Term c, Term d) {
  Term t;
  t.args = {std::move(a), std::move(b), std::move(c), std::move(d)};
  return t;
}

int Term::degree() const {
  if (is_variable()) return 1;
  int d = 0;
  for (const auto& a : args) d += a.degree();
  return d;
}

int Term::min_variable() const {
  if (is_variable()) return var;
  int m = args.front().min_variable();
  for (const auto& a : args) m = std::min(m, a.min_variable());
  return m;
}

std::string Term::to_string() const {
  if (is_variable()) return std::string(1, static_cast<char>('a' + var));
  std::string s = "[";
  for (std::size_t k = 0; k < args.size(); ++k) s += (k ? "," : "") + args[k].to_string();
  return s + "]";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed bracketing at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Term term() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      return Term::variable(c - 'a');
    }
    if (c != '[') fail("expected variable or '['");
    ++pos_;
    Term t;
    for (int k = 0; k < 4; ++k) {
      if (k > 0) expect(',');
      t.args.push_back(term());
    }
    expect(']');
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool canonical_less(const Term& a, const Term& b) {
  if (a.is_variable() != b.is_variable()) return !a.is_variable();
  return a.min_variable() < b.min_variable();
}

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse(); }

Straightened straighten(const Term& t) {
  if (t.is_variable()) return {t, 1};
  if (t.args.size() != 4) throw std::invalid_argument("bracket must have four arguments");
  Straightened out{Term{}, 1};
  for (const auto& a : t.args) {
    auto s = straighten(a);
    out.sign *= s.sign;
    out.term.args.push_back(std::move(s.term));
  }
  auto& v = out.term.args;
  for (std::size_t a = 1; a < v.size(); ++a) {
    for (std::size_t b = a; b > 0; --b) {
      if (v[b - 1] == v[b]) {
        out.sign = 0;
        return out;
      }
      if (!canonical_less(v[b], v[b - 1])) break;
      std::swap(v[b - 1], v[b]);
      out.sign = -out.sign;
    }
  }
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[a] == v[b]) out.sign = 0;
  return out;
}

Monomial to_monomial(const Term& s) {
  auto vars_of = [](const Term& bracket, std::size_t from) {
    std::vector<int> out;
    for (std::size_t k = from; k < bracket.args.size(); ++k) {
      if (!bracket.args[k].is_variable()) throw std::invalid_argument("unsupported association type");
      out.push_back(bracket.args[k].var);
    }
    return out;
  };
  if (s.is_variable()) throw std::invalid_argument("a variable is not a monomial");
  Monomial m;
  const Term& a0 = s.args[0];
  const Term& a1 = s.args[1];
  if (a0.is_variable()) {
    m.type = AssocType::Single;
    m.slots = vars_of(s, 0);
  } else if (!a1.is_variable()) {
    if (!a0.args[0].is_variable() || !a1.args[0].is_variable()) throw std::invalid_argument("unsupported association type");
    m.type = AssocType::TypeB;
    m.slots = vars_of(a0, 0);
    for (int v : vars_of(a1, 0)) m.slots.push_back(v);
    for (int v : vars_of(s, 2)) m.slots.push_back(v);
  } else if (a0.args[0].is_variable()) {
    m.type = AssocType::Nested7;
    m.slots = vars_of(a0, 0);
    for (int v : vars_of(s, 1)) m.slots.push_back(v);
  } else {
    const Term& inner = a0.args[0];
    if (!inner.args[0].is_variable()) throw std::invalid_argument("unsupported association type");
    m.type = AssocType::TypeA;
    m.slots = vars_of(inner, 0);
    for (int v : vars_of(a0, 1)) m.slots.push_back(v);
    for (int v : vars_of(s, 1)) m.slots.push_back(v);
  }
  return m;
}

Term to_term(const Monomial& m) {
  const auto& x = m.slots;
  auto var = [&](int k) { return Term::variable(x[static_cast<std::size_t>(k)]); };
  auto group4 = [&](int k) { return Term::bracket(var(k), var(k + 1), var(k + 2), var(k + 3)); };
  switch (m.type) {
    case AssocType::Single: return group4(0);
    case AssocType::Nested7: return Term::bracket(group4(0), var(4), var(5), var(6));
    case AssocType::TypeA: return Term::bracket(Term::bracket(group4(0), var(4), var(5), var(6)), var(7), var(8), var(9));
    case AssocType::TypeB: return Term::bracket(group4(0), group4(4), var(8), var(9));
  }
  return {};
}

MonomialTerm straighten_to_monomial(const Term& t) {
  auto s = straighten(t);
  if (s.sign == 0) return {Monomial{}, 0};
  return {to_monomial(s.term), s.sign};
}

}  // namespace qalg
