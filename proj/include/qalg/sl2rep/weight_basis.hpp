#pragma once

#include "qalg/sl2rep/quadruple.hpp"

#include <functional>
#include <map>
#include <vector>

namespace qalg {

struct WeightVector {
  int highest_weight = 0;  // w of the summand V(w) it belongs to
  int copy = 0;            // which copy of V(w), in nullspace-basis order
  int f_power = 0;         // k in (1/k!) F^k X
  QuadCombination coeffs;

  int weight() const { return highest_weight - 2 * f_power; }
  /// Coefficients listed over quadruples_of_weight(n, weight()).
  std::vector<Rational> dense(int n) const;
};

/// Highest weight vectors of weight w (w >= 0), one per nullspace basis
/// vector of the E-action matrix.
std::vector<WeightVector> highest_weight_vectors(int n, int w);

/// Highest weight -> multiplicity in the fourth exterior power of V(n),
/// from differences of weight-space dimensions.
std::map<int, int, std::greater<>> decompose(int n);

/// Full weight-vector basis: summands by decreasing highest weight, copies in
/// nullspace order, then increasing F-power.
std::vector<WeightVector> weight_vector_basis(int n);

/// Change-of-basis matrix whose j-th column expresses the j-th weight vector
/// over quadruple_basis(n).
RatMatrix weight_vector_matrix(int n, const std::vector<WeightVector>& basis);

}  // namespace qalg
