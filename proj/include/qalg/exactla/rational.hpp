#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qalg {

using Integer = mpz_class;

/// Exact fraction backed by GMP. Results of arithmetic are always canonical
/// (lowest terms, positive denominator, zero stored as 0/1).
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a", "-a", "a/b".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer lcm_of_denominators(const std::vector<Rational>& values);

/// Scales a rational vector to a primitive integer vector (gcd 1) with the
/// same direction. The zero vector maps to zeros.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& values);

}  // namespace qalg
