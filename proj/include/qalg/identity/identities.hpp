#pragma once

#include "qalg/identity/straighten.hpp"
#include "qalg/exactla/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qalg {

/// Coefficients over monomial_basis(degree).
struct IdentityVector {
  int degree = 0;
  std::vector<Rational> coeffs;

  static IdentityVector zero(int degree);
  std::size_t support_size() const;
  /// Human-readable signed sum of basis monomials.
  std::string to_string() const;
  friend bool operator==(const IdentityVector&, const IdentityVector&) = default;
};

/// Sparse integer form used for the large degree-10 computations.
struct SparseIdentity {
  int degree = 0;
  std::vector<std::pair<int, std::int64_t>> terms;  // (basis index, coefficient), sorted, nonzero

  IdentityVector dense() const;
  static SparseIdentity from_dense(const IdentityVector& v);  // requires integral coefficients
};

/// Straightens and sums signed raw bracketings into basis coordinates.
IdentityVector identity_from_terms(int degree, const std::vector<std::pair<Term, Rational>>& terms);

/// Applies v -> perm[v] to every variable and re-straightens.
IdentityVector apply_permutation(const IdentityVector& iv, const std::vector<int>& perm);
SparseIdentity apply_permutation(const SparseIdentity& iv, const std::vector<int>& perm);

enum class IdentityKind { Derivation, AlternatingSum };

/// The degree-7 derivation identity (five basis terms) or the alternating
/// sum over all permutations of seven variables, scaled to coprime integers.
IdentityVector canonical_identity(IdentityKind kind);

/// Rewrites each basis monomial of a degree-7 identity by replacing variable
/// k with replacement[k], optionally wrapping as [ . , wrap[0], wrap[1], wrap[2] ],
/// and straightens into the basis of the resulting degree.
IdentityVector substitute(const IdentityVector& iv, const std::vector<Term>& replacement,
                          const std::vector<int>& wrap = {});

/// A degree-10 consequence together with groups of variables in which it is
/// alternating. The groups partition the ten variables.
struct Consequence {
  std::string label;
  SparseIdentity identity;
  std::vector<std::vector<int>> blocks;
};

/// Derivation: six consequences; alternating sum: two.
std::vector<Consequence> degree10_consequences(IdentityKind kind);

/// One permutation per way of distributing the variables over the blocks
/// (each block's variables mapped in increasing order onto a subset).
std::vector<std::vector<int>> block_coset_permutations(const std::vector<std::vector<int>>& blocks);

/// All permutations of {0..k-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int k);
int permutation_sign(const std::vector<int>& perm);

}  // namespace qalg
