#pragma once

#include "qalg/exactla/unipoly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace qalg {

enum class PermGroup { S4, A4 };

/// Cycle-type exponents (b1, b2, b3, b4) -> coefficient.
using CycleIndex = std::map<std::array<int, 4>, Rational>;

CycleIndex cycle_index(PermGroup g);

/// Substitutes polynomials for x1..x4 in a cycle index.
UniPoly substitute(const CycleIndex& z, const std::array<UniPoly, 4>& xs);

/// Generating polynomial whose x^W coefficient counts sets of four distinct
/// integers in [0, n] summing to W.
UniPoly pn_polynomial(int n);

std::int64_t count_partitions_4distinct(int total, int n);
/// Direct enumeration of n >= P > Q > R > S >= 0 with P+Q+R+S = total.
std::int64_t count_partitions_4distinct_brute(int total, int n);

/// Number of strictly decreasing k-tuples of weights of V(n) summing to w.
std::int64_t weight_space_dim(int n, int w, int k);

/// Coefficients of (1 + x + ... + x^n)^t by the alternating binomial formula.
std::vector<Integer> power_sum_expansion(int n, int t);

struct HelperValues {
  long alpha, beta, gamma, delta, epsilon, zeta, eta, theta;
};
HelperValues helper_values(long n);
/// 1 if n is divisible by m, else 0.
long indicator(long n, long m);
/// 1 if n is congruent to s mod m, else 0.
long indicator(long n, long s, long m);

/// Dimension of the weight-n space of the fourth exterior power of V(n);
/// 0 for odd or negative n.
Integer dim_weight_n(long n);
/// Dimension of the weight-(n+2) space; 0 for odd or negative n.
Integer dim_weight_n_plus_2(long n);

/// Residue-class polynomials times 1152, coefficients from the constant term
/// up. Index r/2 for r = 0, 2, ..., 22.
std::array<Integer, 4> scaled_dim_weight_n_poly(int r);
std::array<Integer, 4> scaled_dim_weight_n_plus_2_poly(int r);
std::array<Integer, 3> scaled_multiplicity_poly(int r);

/// Multiplicity of V(n) in the fourth exterior power of V(n); 0 for odd n.
Integer multiplicity(long n);
/// Same count by direct enumeration of quadruples.
Integer multiplicity_brute(long n);

}  // namespace qalg
