#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace qalg {

/// Association types of alternating quaternary monomials.
///   Single  : [x1,x2,x3,x4]                        (degree 4)
///   Nested7 : [[i1,i2,i3,i4],o1,o2,o3]             (degree 7)
///   TypeA   : [[[i1,i2,i3,i4],m1,m2,m3],o1,o2,o3]  (degree 10)
///   TypeB   : [[i1,i2,i3,i4],[j1,j2,j3,j4],o1,o2]  (degree 10)
enum class AssocType : std::uint8_t { Single, Nested7, TypeA, TypeB };

/// Multilinear monomial; `slots` lists variables group by group in the
/// order shown above. Variables are 0-based (x1 is 0).
struct Monomial {
  AssocType type = AssocType::Single;
  std::vector<int> slots;

  int degree() const { return static_cast<int>(slots.size()); }
  std::string to_string() const;  // letters a, b, c, ...
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

int degree_of(AssocType t);
AssocType default_type(int degree);

/// Sizes of the alternating groups of `slots` for a type.
const std::vector<int>& group_sizes(AssocType t);

/// Puts a monomial into canonical form in place: every group increasing and,
/// for TypeB, the inner bracket holding the smaller variable first. Returns
/// the sign of the rewrite, or 0 if some group repeats a variable.
int canonicalize(Monomial& m);

/// Relabels variables (v -> perm[v]) and canonicalizes; returns the sign.
int permute_variables(Monomial& m, const std::vector<int>& perm);

/// Ordered basis of canonical monomials for degree 4, 7 or 10. Degree 7 is
/// ordered by the inner 4-tuple; degree 10 lists type A then type B, each in
/// lexicographic order of the group tuples. Throws std::invalid_argument for
/// other degrees.
const std::vector<Monomial>& monomial_basis(int degree);

/// Position of a canonical monomial in monomial_basis(m.degree()), or -1.
int monomial_index(const Monomial& m);

/// Tag recorded in output headers; bump when the basis order changes.
inline constexpr const char* kMonomialOrderVersion = "lex-v1";

}  // namespace qalg
