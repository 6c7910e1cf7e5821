#include "qalg/exactla/unipoly.hpp"

#include <climits>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qalg {

UniPoly::UniPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

UniPoly UniPoly::x() { return monomial(1, 1); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  UniPoly p;
  if (c != 0) {
    p.c_.assign(degree + 1, Rational(0));
    p.c_[degree] = c;
  }
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly p = *this;
  p *= Rational(1) / leading();
  return p;
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * at + c_[k];
  return acc;
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) {
      out += qalg::to_string(Rational(mag));
      if (k > 0) out += "*";
    }
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv_lead = Rational(1) / b.leading();
  for (long k = a.degree(); k >= db; --k) {
    const Rational c = rem[k] * inv_lead;
    if (c == 0) continue;
    quo[k - db] = c;
    for (long j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs()[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

namespace {

using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  while (e) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

void trim_mod(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Monic gcd over Z/p.
ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t p) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    const std::uint64_t inv = inv_mod(b.back(), p);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
      const std::uint64_t c = mul_mod(a.back(), inv, p);
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - mul_mod(c, b[j], p)) % p;
      trim_mod(a);
    }
    std::swap(a, b);
  }
  const std::uint64_t inv = inv_mod(a.back(), p);
  for (auto& c : a) c = mul_mod(c, inv, p);
  return a;
}

std::vector<Integer> primitive_integer_coeffs(const UniPoly& f) {
  Integer den = 1, content = 0;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& c : f.coeffs()) {
    Rational scaled = c * den;
    out.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return out;
}

ModPoly reduce_mod(const std::vector<Integer>& f, std::uint64_t p) {
  ModPoly out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = mpz_fdiv_ui(f[k].get_mpz_t(), p);
  return out;
}


// Rational number congruent to u modulo m with numerator and denominator
// below sqrt(m / 2), if one exists.
std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& m) {
  Integer bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = u, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

}  // namespace

// Modular gcd: monic images modulo 62-bit primes are combined by CRT and
// lifted by rational reconstruction until the candidate divides both inputs.
// A common divisor whose degree equals a modular gcd degree (taken at a prime
// not dividing the leading coefficients) is the gcd, so the result is exact.
UniPoly gcd(UniPoly a, UniPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return UniPoly(1);
  const auto ai = primitive_integer_coeffs(a);
  const auto bi = primitive_integer_coeffs(b);

  Integer prime = Integer(1) << 62;
  std::vector<Integer> acc;
  Integer modulus = 1;
  std::size_t degree = SIZE_MAX;
  std::optional<UniPoly> previous;
  for (;;) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const std::uint64_t p = prime.get_ui();
    if (mpz_fdiv_ui(ai.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(bi.back().get_mpz_t(), p) == 0) continue;
    ModPoly g = gcd_mod(reduce_mod(ai, p), reduce_mod(bi, p), p);
    if (g.size() == 1) return UniPoly(1);
    if (g.size() - 1 > degree) continue;  // unlucky prime
    if (g.size() - 1 < degree) {
      degree = g.size() - 1;
      acc.clear();
      for (auto c : g) acc.emplace_back(static_cast<unsigned long>(c));
      modulus = prime;
      previous.reset();
    } else {
      const std::uint64_t inv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
      for (std::size_t k = 0; k < g.size(); ++k) {
        const std::uint64_t have = mpz_fdiv_ui(acc[k].get_mpz_t(), p);
        const std::uint64_t t = mul_mod((g[k] + p - have) % p, inv, p);
        acc[k] += modulus * Integer(static_cast<unsigned long>(t));
      }
      modulus *= prime;
    }

    std::vector<Rational> cs;
    for (const auto& c : acc) {
      auto r = rational_reconstruction(c, modulus);
      if (!r) break;
      cs.push_back(*r);
    }
    if (cs.size() != acc.size()) continue;
    UniPoly candidate(std::move(cs));
    if (previous && *previous == candidate && divmod(a, candidate).second.is_zero() &&
        divmod(b, candidate).second.is_zero()) {
      return candidate;
    }
    previous = std::move(candidate);
  }
}

}  // namespace qalg
