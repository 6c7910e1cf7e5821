#include "qalg/exactla/rational.hpp"

#include <stdexcept>

namespace qalg {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  std::size_t start = s.find_first_not_of(" \t");
  if (start == std::string::npos) throw std::invalid_argument("empty rational literal");
  s = s.substr(start);
  if (s[0] == '+') s = s.substr(1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer lcm_of_denominators(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) {
    if (v == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& values) {
  Integer l = lcm_of_denominators(values);
  std::vector<Integer> out;
  out.reserve(values.size());
  Integer g = 0;
  for (const auto& v : values) {
    Integer z = v.get_num() * (l / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    out.push_back(std::move(z));
  }
  if (g > 1) {
    for (auto& z : out) z /= g;
  }
  return out;
}

}  // namespace qalg
