#include "qalg/sl2rep/weight_basis.hpp"

#include <algorithm>

namespace qalg {

std::vector<Rational> WeightVector::dense(int n) const {
  const auto slice = quadruples_of_weight(n, weight());
  std::vector<Rational> out(slice.size());
  for (std::size_t j = 0; j < slice.size(); ++j) {
    auto it = coeffs.find(slice[j]);
    if (it != coeffs.end()) out[j] = it->second;
  }
  return out;
}

std::vector<WeightVector> highest_weight_vectors(int n, int w) {
  const auto slice = quadruples_of_weight(n, w);
  if (slice.empty()) return {};
  std::vector<std::vector<Integer>> cib;
  if (quadruples_of_weight(n, w + 2).empty()) {
    for (std::size_t j = 0; j < slice.size(); ++j) {
      std::vector<Integer> unit(slice.size(), 0);
      unit[j] = 1;
      cib.push_back(unit);
    }
  } else {
    cib = nullspace_cib(e_action_matrix(n, w));
  }
  std::vector<WeightVector> out;
  for (std::size_t c = 0; c < cib.size(); ++c) {
    WeightVector v{w, static_cast<int>(c), 0, {}};
    for (std::size_t j = 0; j < slice.size(); ++j) {
      if (cib[c][j] != 0) v.coeffs[slice[j]] = Rational(cib[c][j]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::map<int, int, std::greater<>> decompose(int n) {
  std::map<int, int> dims;
  for (const auto& t : quadruple_basis(n)) ++dims[t.weight()];
  std::map<int, int, std::greater<>> out;
  for (const auto& [w, d] : dims) {
    if (w < 0) continue;
    auto above = dims.find(w + 2);
    const int mult = d - (above == dims.end() ? 0 : above->second);
    if (mult > 0) out[w] = mult;
  }
  return out;
}

std::vector<WeightVector> weight_vector_basis(int n) {
  std::vector<WeightVector> out;
  for (const auto& [w, mult] : decompose(n)) {
    for (auto& top : highest_weight_vectors(n, w)) {
      WeightVector cur = top;
      out.push_back(cur);
      for (int k = 1; k <= w; ++k) {
        WeightVector next{w, top.copy, k, act_on_combination(Generator::F, n, cur.coeffs)};
        const Rational inv_k(1, k);
        for (auto& [t, c] : next.coeffs) c *= inv_k;
        out.push_back(next);
        cur = std::move(next);
      }
    }
  }
  return out;
}

RatMatrix weight_vector_matrix(int n, const std::vector<WeightVector>& basis) {
  const auto quads = quadruple_basis(n);
  std::map<Quadruple, std::size_t> row_of;
  for (std::size_t i = 0; i < quads.size(); ++i) row_of[quads[i]] = i;
  RatMatrix c(quads.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [t, v] : basis[j].coeffs) c(row_of.at(t), j) = v;
  }
  return c;
}

}  // namespace qalg
