#pragma once

#include "qalg/exactla/rat_matrix.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qalg {

enum class Generator { H, E, F };

/// One term of a sparse vector over the basis v_n, v_{n-2}, ..., v_{-n} of
/// V(n); `index` i stands for v_{n-2i}.
struct BasisTerm {
  int index;
  Rational coeff;
};

/// Image of v_{n-2i} under a generator. Empty when the image is zero.
/// Throws std::out_of_range unless 0 <= i <= n.
std::vector<BasisTerm> act(Generator g, int n, int i);

/// Applies a generator to a dense vector of length n+1.
std::vector<Rational> act(Generator g, int n, const std::vector<Rational>& x);

/// Basis element v_p ^ v_q ^ v_r ^ v_s of the fourth exterior power, p > q > r > s.
struct Quadruple {
  std::array<int, 4> w;

  int weight() const { return w[0] + w[1] + w[2] + w[3]; }
  std::string to_string() const;

  // Plain lexicographic order, used for associative containers only.
  friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

/// Standard basis order: weight descending, then the larger entry at the
/// leftmost differing position first.
bool standard_before(const Quadruple& a, const Quadruple& b);

bool is_valid_quadruple(int n, const Quadruple& t);

/// All C(n+1, 4) quadruples in standard order.
std::vector<Quadruple> quadruple_basis(int n);
/// The weight-w slice of quadruple_basis(n), in standard order.
std::vector<Quadruple> quadruples_of_weight(int n, int w);

using QuadCombination = std::map<Quadruple, Rational>;

/// Leibniz action of a generator on one basis quadruple.
QuadCombination act_on_quadruple(Generator g, int n, const Quadruple& t);
QuadCombination act_on_combination(Generator g, int n, const QuadCombination& v);

/// Matrix of E from the weight-w slice to the weight-(w+2) slice.
RatMatrix e_action_matrix(int n, int w);

}  // namespace qalg
