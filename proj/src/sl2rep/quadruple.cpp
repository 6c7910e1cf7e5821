#include "qalg/sl2rep/quadruple.hpp"

#include <algorithm>
#include <stdexcept>

namespace qalg {

std::vector<BasisTerm> act(Generator g, int n, int i) {
  if (i < 0 || i > n) throw std::out_of_range("basis index out of range");
  switch (g) {
    case Generator::H:
      if (n - 2 * i == 0) return {};
      return {{i, Rational(n - 2 * i)}};
    case Generator::E:
      if (i == 0) return {};
      return {{i - 1, Rational(n - i + 1)}};
    case Generator::F:
      if (i == n) return {};
      return {{i + 1, Rational(i + 1)}};
  }
  return {};
}

std::vector<Rational> act(Generator g, int n, const std::vector<Rational>& x) {
  if (x.size() != static_cast<std::size_t>(n + 1)) throw std::invalid_argument("vector length must be n+1");
  std::vector<Rational> out(x.size());
  for (int i = 0; i <= n; ++i) {
    if (x[i] == 0) continue;
    for (const auto& t : act(g, n, i)) out[t.index] += t.coeff * x[i];
  }
  return out;
}

std::string Quadruple::to_string() const {
  return "[" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
         std::to_string(w[3]) + "]";
}

bool standard_before(const Quadruple& a, const Quadruple& b) {
  if (a.weight() != b.weight()) return a.weight() > b.weight();
  return a.w > b.w;
}

bool is_valid_quadruple(int n, const Quadruple& t) {
  for (int k = 0; k < 4; ++k) {
    if (t.w[k] > n || t.w[k] < -n || (t.w[k] - n) % 2 != 0) return false;
    if (k > 0 && t.w[k - 1] <= t.w[k]) return false;
  }
  return true;
}

std::vector<Quadruple> quadruple_basis(int n) {
  std::vector<Quadruple> out;
  for (int a = n; a >= -n; a -= 2)
    for (int b = a - 2; b >= -n; b -= 2)
      for (int c = b - 2; c >= -n; c -= 2)
        for (int d = c - 2; d >= -n; d -= 2) out.push_back({{a, b, c, d}});
  std::sort(out.begin(), out.end(), standard_before);
  return out;
}

std::vector<Quadruple> quadruples_of_weight(int n, int w) {
  std::vector<Quadruple> out;
  for (const auto& t : quadruple_basis(n)) {
    if (t.weight() == w) out.push_back(t);
  }
  return out;
}

QuadCombination act_on_quadruple(Generator g, int n, const Quadruple& t) {
  QuadCombination out;
  for (int slot = 0; slot < 4; ++slot) {
    const int i = (n - t.w[slot]) / 2;
    for (const auto& term : act(g, n, i)) {
      std::array<int, 4> u = t.w;
      u[slot] = n - 2 * term.index;
      // Insertion sort into decreasing order, tracking the permutation sign.
      int sign = 1;
      bool repeated = false;
      for (int a = 1; a < 4; ++a) {
        for (int b = a; b > 0 && u[b - 1] <= u[b]; --b) {
          if (u[b - 1] == u[b]) {
            repeated = true;
            break;
          }
          std::swap(u[b - 1], u[b]);
          sign = -sign;
        }
      }
      if (repeated) continue;
      Rational& c = out[Quadruple{u}];
      c += sign * term.coeff;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

QuadCombination act_on_combination(Generator g, int n, const QuadCombination& v) {
  QuadCombination out;
  for (const auto& [t, c] : v) {
    for (const auto& [u, d] : act_on_quadruple(g, n, t)) out[u] += c * d;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

RatMatrix e_action_matrix(int n, int w) {
  const auto src = quadruples_of_weight(n, w);
  const auto dst = quadruples_of_weight(n, w + 2);
  RatMatrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    for (const auto& [u, c] : act_on_quadruple(Generator::E, n, src[j])) {
      auto it = std::find(dst.begin(), dst.end(), u);
      m(static_cast<std::size_t>(it - dst.begin()), j) = c;
    }
  }
  return m;
}

}  // namespace qalg
