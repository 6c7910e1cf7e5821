#include "qalg/identity/search.hpp"

#include "qalg/exactla/rat_matrix.hpp"

#include <limits>
#include <stdexcept>

namespace qalg {

std::uint64_t Prng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;  // largest multiple of bound, minus one
  for (;;) {
    const std::uint64_t x = engine_();
    if (x <= limit) return x % bound;
  }
}

std::vector<std::vector<std::int64_t>> random_arguments(Prng& rng, int degree, int n, std::uint64_t bound) {
  std::vector<std::vector<std::int64_t>> args(static_cast<std::size_t>(degree),
                                              std::vector<std::int64_t>(static_cast<std::size_t>(n + 1)));
  for (auto& a : args)
    for (auto& x : a) x = static_cast<std::int64_t>(rng.below(bound));
  return args;
}

namespace {

constexpr std::uint64_t kHeldOutStream = 0x9e3779b97f4a7c15ULL;

void check_config(const SearchConfig& cfg, int degree) {
  if (cfg.s < 1) throw std::invalid_argument("s must be at least 1");
  if (cfg.p < 2) throw std::invalid_argument("p must be at least 2");
  if (cfg.mode == Arithmetic::Modular && (!is_prime(cfg.p) || cfg.p <= static_cast<std::uint32_t>(degree))) {
    throw std::invalid_argument("modular search needs a prime p larger than the degree");
  }
}

template <class Field>
std::vector<typename Field::value_type> lift(const Field& field, const std::vector<std::int64_t>& a) {
  std::vector<typename Field::value_type> out;
  out.reserve(a.size());
  for (auto x : a) out.push_back(field.from_rational(Rational(static_cast<long>(x))));
  return out;
}

template <class Field>
std::vector<std::vector<typename Field::value_type>> lift_all(const Field& field,
                                                              const std::vector<std::vector<std::int64_t>>& args) {
  std::vector<std::vector<typename Field::value_type>> out;
  for (const auto& a : args) out.push_back(lift(field, a));
  return out;
}

SearchResult search_rational(const RationalConstants& constants, int n, int degree, const SearchConfig& cfg) {
  const Evaluator<RationalField> ev(RationalField{}, n, constants);
  const auto& plan = evaluation_plan(degree);
  const std::size_t m = plan.roots.size();
  RatRowReducer work(m);
  Prng rng(cfg.seed);
  SearchResult res;
  res.columns = m;
  int stable = 0;
  while (stable < cfg.s && work.rank() < m) {
    const auto values = evaluate_basis(ev, plan, lift_all(RationalField{}, random_arguments(rng, degree, n, cfg.p)));
    bool grew = false;
    for (int k = 0; k <= n; ++k) {
      std::vector<Rational> row(m);
      for (std::size_t j = 0; j < m; ++j) row[j] = values[j][static_cast<std::size_t>(k)];
      grew = work.add_row(std::move(row)) || grew;
    }
    ++res.iterations;
    stable = grew ? 0 : stable + 1;
    if (cfg.progress) cfg.progress(res.iterations, work.rank());
  }
  res.rank = work.rank();
  if (cfg.want_nullspace) {
    for (const auto& v : work.nullspace_cib()) {
      IdentityVector iv{degree, {}};
      for (const auto& x : v) iv.coeffs.emplace_back(x);
      res.nullspace.push_back(std::move(iv));
    }
  }
  return res;
}

SearchResult search_modular(const RationalConstants& constants, int n, int degree, const SearchConfig& cfg) {
  const ModField field{cfg.p};
  const Evaluator<ModField> ev(field, n, constants);
  const auto& plan = evaluation_plan(degree);
  const std::size_t m = plan.roots.size();
  ModRowReducer work(cfg.p, m);
  Prng rng(cfg.seed);
  SearchResult res;
  res.columns = m;
  int stable = 0;
  std::vector<std::uint32_t> row(m);
  while (stable < cfg.s && work.rank() < m) {
    const auto values = evaluate_basis(ev, plan, lift_all(field, random_arguments(rng, degree, n, cfg.p)));
    bool grew = false;
    for (int k = 0; k <= n; ++k) {
      for (std::size_t j = 0; j < m; ++j) row[j] = values[j][static_cast<std::size_t>(k)];
      grew = work.add_row(row) || grew;
    }
    ++res.iterations;
    stable = grew ? 0 : stable + 1;
    if (cfg.progress) cfg.progress(res.iterations, work.rank());
  }
  res.rank = work.rank();
  if (cfg.want_nullspace) res.mod_nullspace = work.nullspace();
  res.modular_rows = std::move(work);
  return res;
}

}  // namespace

SearchResult fill_and_reduce(const RationalConstants& constants, int n, int degree, const SearchConfig& cfg) {
  check_config(cfg, degree);
  return cfg.mode == Arithmetic::Rational ? search_rational(constants, n, degree, cfg)
                                          : search_modular(constants, n, degree, cfg);
}

std::vector<Rational> evaluate_identity(const IdentityVector& iv, const RationalConstants& constants, int n,
                                        const std::vector<std::vector<std::int64_t>>& args) {
  const Evaluator<RationalField> ev(RationalField{}, n, constants);
  const auto values = evaluate_basis(ev, evaluation_plan(iv.degree), lift_all(RationalField{}, args));
  std::vector<Rational> out(static_cast<std::size_t>(n + 1));
  for (std::size_t j = 0; j < iv.coeffs.size(); ++j) {
    if (iv.coeffs[j] == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += iv.coeffs[j] * values[j][k];
  }
  return out;
}

bool vanishes_on_held_out(const IdentityVector& iv, const RationalConstants& constants, int n, int tuples,
                          std::uint64_t seed, std::uint32_t bound) {
  Prng rng(seed ^ kHeldOutStream);
  for (int t = 0; t < tuples; ++t) {
    for (const auto& x : evaluate_identity(iv, constants, n, random_arguments(rng, iv.degree, n, bound))) {
      if (x != 0) return false;
    }
  }
  return true;
}

bool annihilated_by(const ModRowReducer& rows, const std::vector<std::uint32_t>& v) {
  const std::uint32_t p = rows.modulus();
  for (std::size_t r = 0; r < rows.rank(); ++r) {
    const auto& row = rows.row(r);
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      acc += static_cast<std::uint64_t>(row[j]) * v[j];
      if ((j & 0xffff) == 0xffff) acc %= p;
    }
    if (acc % p != 0) return false;
  }
  return true;
}

ParametricScan parametric_scan(const RationalConstants& f, const RationalConstants& g, int n, int degree, int t,
                               const SearchConfig& cfg) {
  check_config(cfg, degree);
  const PolyField field;
  const Evaluator<PolyField> ev(field, n, parametric_constants(f, g));
  const auto& plan = evaluation_plan(degree);
  const std::size_t m = plan.roots.size();
  const std::size_t rows = static_cast<std::size_t>(t) * static_cast<std::size_t>(n + 1);
  if (rows <= m) throw std::invalid_argument("t*(n+1) must exceed the number of monomials");
  ParametricScan scan{PolyMatrix(rows, m), {}};
  Prng rng(cfg.seed);
  for (int block = 0; block < t; ++block) {
    const auto values = evaluate_basis(ev, plan, lift_all(field, random_arguments(rng, degree, n, cfg.p)));
    for (int k = 0; k <= n; ++k) {
      for (std::size_t j = 0; j < m; ++j) {
        scan.matrix(static_cast<std::size_t>(block * (n + 1) + k), j) = values[j][static_cast<std::size_t>(k)];
      }
    }
    if (cfg.progress) cfg.progress(static_cast<std::size_t>(block + 1), 0);
  }
  scan.diagonal = smith_diagonal(scan.matrix);
  return scan;
}

bool in_span(const IdentityVector& v, const std::vector<IdentityVector>& basis) {
  RatRowReducer red(v.coeffs.size());
  for (const auto& b : basis) red.add_row(b.coeffs);
  return !red.add_row(v.coeffs);
}

}  // namespace qalg
