#pragma once

#include "qalg/identity/monomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qalg {

/// A raw bracketing: either a variable or a quaternary bracket of four terms.
struct Term {
  int var = -1;             // >= 0 for a variable
  std::vector<Term> args;   // four entries for a bracket

  static Term variable(int v) { return Term{v, {}}; }
  static Term bracket(Term a, Term b, Term c, Term d);

  bool is_variable() const { return var >= 0; }
  int degree() const;
  int min_variable() const;
  std::string to_string() const;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Parses text like "[[d,e,f,g],a,b,c]"; letters a..z are variables 0..25.
/// Throws std::invalid_argument on malformed input.
Term parse_term(std::string_view text);

struct Straightened {
  Term term;
  int sign;  // +1, -1, or 0 when a bracket repeats an argument
};

/// Sorts the arguments of every bracket (brackets before variables, brackets
/// by smallest contained variable, variables ascending), tracking the sign.
Straightened straighten(const Term& t);

/// Converts a straightened multilinear term into a basis monomial. Throws
/// std::invalid_argument when the shape is not a supported association type.
Monomial to_monomial(const Term& straightened);
Term to_term(const Monomial& m);

struct MonomialTerm {
  Monomial monomial;
  int sign;
};

/// straighten + to_monomial. A zero sign leaves the monomial unspecified.
MonomialTerm straighten_to_monomial(const Term& t);

}  // namespace qalg
