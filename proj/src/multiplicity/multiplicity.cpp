#include "qalg/multiplicity/multiplicity.hpp"

#include <stdexcept>

namespace qalg {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

Integer binomial(long top, long bottom) {
  if (bottom < 0 || top < bottom || top < 0) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

// (sum_{i=0}^{n} x^{step*i}) as a dense coefficient vector of length len.
std::vector<std::int64_t> spaced_ones(int n, int step, std::size_t len) {
  std::vector<std::int64_t> v(len, 0);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(step * i)] = 1;
  return v;
}

std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                   std::size_t len) {
  std::vector<std::int64_t> out(len, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 24 * P_n(x), coefficients as machine integers.
std::vector<std::int64_t> scaled_pn(int n) {
  const std::size_t len = static_cast<std::size_t>(4 * n + 1);
  const auto s1 = spaced_ones(n, 1, len);
  const auto s2 = spaced_ones(n, 2, len);
  const auto s3 = spaced_ones(n, 3, len);
  const auto s4 = spaced_ones(n, 4, len);
  const auto sq = convolve(s1, s1, len);
  const auto quart = convolve(sq, sq, len);
  const auto sq_s2 = convolve(sq, s2, len);
  const auto s1_s3 = convolve(s1, s3, len);
  const auto s2_sq = convolve(s2, s2, len);
  std::vector<std::int64_t> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    out[k] = quart[k] - 6 * sq_s2[k] + 8 * s1_s3[k] + 3 * s2_sq[k] - 6 * s4[k];
  }
  return out;
}

using Cubic = std::array<Integer, 4>;

// Integer cubic through (x_j, y_j), j = 0..3, by Lagrange interpolation.
Cubic interpolate(const std::array<long, 4>& xs, const std::array<Integer, 4>& ys) {
  std::array<Rational, 4> coeffs{0, 0, 0, 0};
  for (int j = 0; j < 4; ++j) {
    std::array<Rational, 4> basis{1, 0, 0, 0};
    Rational denom = 1;
    for (int m = 0; m < 4; ++m) {
      if (m == j) continue;
      std::array<Rational, 4> next{0, 0, 0, 0};
      for (int d = 0; d < 3; ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[m];
      }
      basis = next;
      denom *= xs[j] - xs[m];
    }
    for (int d = 0; d < 4; ++d) coeffs[d] += basis[d] * Rational(ys[j]) / denom;
  }
  Cubic out;
  for (int d = 0; d < 4; ++d) {
    if (coeffs[d].get_den() != 1) throw std::logic_error("residue-class polynomial is not integral");
    out[d] = coeffs[d].get_num();
  }
  return out;
}

Integer scaled_dim_weight_n(long n) {
  const auto h = helper_values(n);
  const long d4 = indicator(n, 4), d8 = indicator(n, 8);
  Integer N = n;
  Integer v = 23 * N * N * N - 348 * N * N + 4 * Integer(-36 * h.alpha + 180 * h.beta + 36 * h.gamma + 27 * d4 - 167) * N;
  Integer a = h.alpha, b = h.beta, g = h.gamma;
  v += 48 * (6 * a * a - 6 * b * b - 6 * g * g + 12 * b - 12 * g + 8 * Integer(h.delta) + 3 * d4 - 6 * d8 - 3);
  return v;
}

Integer scaled_dim_weight_n_plus_2(long n) {
  const auto h = helper_values(n);
  const long d42 = indicator(n, 2, 4), d86 = indicator(n, 6, 8);
  Integer N = n;
  Integer v = 23 * N * N * N - 378 * N * N +
              4 * Integer(36 * h.epsilon - 36 * h.zeta + 180 * h.eta + 27 * d42 - 254) * N;
  Integer e = h.epsilon, z = h.zeta, t = h.eta;
  v += 24 * (-12 * e * e + 12 * z * z - 12 * t * t - 12 * e - 12 * z + 36 * t + 16 * Integer(h.theta) + 3 * d42 -
             12 * d86 - 24);
  return v;
}

Integer exact_div_1152(const Integer& v) {
  if (v % 1152 != 0) throw std::logic_error("closed form is not divisible by 1152");
  return v / 1152;
}


void require_residue(int r) {
  if (r < 0 || r > 22 || r % 2 != 0) throw std::invalid_argument("residue must be even and in [0, 22]");
}

}  // namespace

CycleIndex cycle_index(PermGroup g) {
  CycleIndex s4{{{4, 0, 0, 0}, Rational(1, 24)},
                {{2, 1, 0, 0}, Rational(6, 24)},
                {{1, 0, 1, 0}, Rational(8, 24)},
                {{0, 2, 0, 0}, Rational(3, 24)},
                {{0, 0, 0, 1}, Rational(6, 24)}};
  for (auto& [k, c] : s4) c.canonicalize();
  if (g == PermGroup::S4) return s4;
  // Z_S4(x) + Z_S4(x1, -x2, x3, -x4): odd permutations cancel, even ones double.
  CycleIndex a4;
  for (const auto& [k, c] : s4) {
    const int sign = ((k[1] + k[3]) % 2 == 0) ? 1 : -1;
    const Rational sum = c + sign * c;
    if (sum != 0) a4[k] = sum;
  }
  return a4;
}

UniPoly substitute(const CycleIndex& z, const std::array<UniPoly, 4>& xs) {
  UniPoly out;
  for (const auto& [k, c] : z) {
    UniPoly term(c);
    for (int i = 0; i < 4; ++i)
      for (int e = 0; e < k[i]; ++e) term *= xs[i];
    out += term;
  }
  return out;
}

UniPoly pn_polynomial(int n) {
  if (n < 0) return UniPoly();
  const auto scaled = scaled_pn(n);
  std::vector<Rational> c(scaled.size());
  for (std::size_t k = 0; k < scaled.size(); ++k) c[k] = Rational(static_cast<long>(scaled[k]), 24);
  return UniPoly(std::move(c));
}

std::int64_t count_partitions_4distinct(int total, int n) {
  if (n < 0 || total < 0 || total > 4 * n) return 0;
  const auto scaled = scaled_pn(n);
  const std::int64_t v = scaled[static_cast<std::size_t>(total)];
  if (v % 24 != 0) throw std::logic_error("P_n coefficient not integral");
  return v / 24;
}

std::int64_t count_partitions_4distinct_brute(int total, int n) {
  std::int64_t count = 0;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q < p; ++q)
      for (int r = 0; r < q; ++r) {
        const int s = total - p - q - r;
        if (s >= 0 && s < r) ++count;
      }
  return count;
}

namespace {

std::int64_t count_decreasing(int n, int remaining_slots, int max_index, int target_sum) {
  // Indices j in [0, max_index], strictly decreasing, summing to target_sum.
  if (remaining_slots == 0) return target_sum == 0 ? 1 : 0;
  std::int64_t c = 0;
  for (int j = max_index; j >= remaining_slots - 1; --j) {
    if (j > target_sum) continue;
    c += count_decreasing(n, remaining_slots - 1, j - 1, target_sum - j);
  }
  return c;
}

}  // namespace

std::int64_t weight_space_dim(int n, int w, int k) {
  if (k < 1 || n < 0) return 0;
  const long shifted = static_cast<long>(w) + static_cast<long>(k) * n;
  if (shifted % 2 != 0 || shifted < 0) return 0;
  const int target = static_cast<int>(shifted / 2);  // sum of indices j with weight 2j - n
  if (k == 4 && n % 2 == 0) return count_partitions_4distinct(target, n);
  return count_decreasing(n, k, n, target);
}

std::vector<Integer> power_sum_expansion(int n, int t) {
  if (t < 1 || n < 0) throw std::invalid_argument("power_sum_expansion needs t >= 1, n >= 0");
  const long top = static_cast<long>(n) * t;
  std::vector<Integer> out(static_cast<std::size_t>(top + 1));
  for (long l = 0; l <= top; ++l) {
    Integer c = 0;
    for (long k = 0; k <= t && (n + 1) * k <= l; ++k) {
      Integer term = binomial(t, k) * binomial(l - (n + 1) * k + t - 1, t - 1);
      if (k % 2 == 0)
        c += term;
      else
        c -= term;
    }
    out[static_cast<std::size_t>(l)] = c;
  }
  return out;
}

HelperValues helper_values(long n) {
  return {ceil_div(n, 4),          ceil_div(3 * n, 4),     floor_div(3 * n - 2, 4),
          floor_div(5 * n, 6),     floor_div(3 * n, 4),    ceil_div(n + 2, 4),
          ceil_div(3 * n + 2, 4),  floor_div(5 * n + 2, 6)};
}

long indicator(long n, long m) { return ((n % m) + m) % m == 0 ? 1 : 0; }
long indicator(long n, long s, long m) { return ((n % m) + m) % m == ((s % m) + m) % m ? 1 : 0; }

Integer dim_weight_n(long n) {
  // all weights of the fourth exterior power are even
  if (n < 0 || n % 2 != 0) return 0;
  return exact_div_1152(scaled_dim_weight_n(n));
}

Integer dim_weight_n_plus_2(long n) {
  if (n < 0 || n % 2 != 0) return 0;
  return exact_div_1152(scaled_dim_weight_n_plus_2(n));
}

std::array<Integer, 4> scaled_dim_weight_n_poly(int r) {
  require_residue(r);
  std::array<long, 4> xs;
  std::array<Integer, 4> ys;
  for (int j = 0; j < 4; ++j) {
    xs[j] = r + 24L * j;
    ys[j] = scaled_dim_weight_n(xs[j]);
  }
  return interpolate(xs, ys);
}

std::array<Integer, 4> scaled_dim_weight_n_plus_2_poly(int r) {
  require_residue(r);
  std::array<long, 4> xs;
  std::array<Integer, 4> ys;
  for (int j = 0; j < 4; ++j) {
    xs[j] = r + 24L * j;
    ys[j] = scaled_dim_weight_n_plus_2(xs[j]);
  }
  return interpolate(xs, ys);
}

std::array<Integer, 3> scaled_multiplicity_poly(int r) {
  const auto a = scaled_dim_weight_n_poly(r);
  const auto b = scaled_dim_weight_n_plus_2_poly(r);
  if (a[3] != b[3]) throw std::logic_error("multiplicity polynomial is not quadratic");
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Integer multiplicity(long n) {
  if (n < 0 || n % 2 != 0) return 0;
  static const auto polys = [] {
    std::array<std::array<Integer, 3>, 12> p;
    for (int r = 0; r < 24; r += 2) p[r / 2] = scaled_multiplicity_poly(r);
    return p;
  }();
  const auto& q = polys[static_cast<std::size_t>((n % 24) / 2)];
  const Integer N = n;
  return exact_div_1152(q[0] + q[1] * N + q[2] * N * N);
}

Integer multiplicity_brute(long n) {
  if (n < 0 || n % 2 != 0) return 0;
  const int m = static_cast<int>(n);
  return Integer(static_cast<long>(count_partitions_4distinct_brute(5 * m / 2, m) -
                                  count_partitions_4distinct_brute((5 * m + 2) / 2, m)));
}

}  // namespace qalg
