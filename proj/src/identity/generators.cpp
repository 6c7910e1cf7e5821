#include "qalg/identity/generators.hpp"

#include "qalg/exactla/rat_matrix.hpp"
#include "qalg/identity/search.hpp"

#include <algorithm>
#include <numeric>

namespace qalg {

GeneratorReport module_generators(const std::vector<IdentityVector>& identities, std::size_t batch) {
  GeneratorReport report;
  if (identities.empty()) return report;
  if (batch == 0) batch = 1;
  const int degree = identities.front().degree;
  const std::size_t m = identities.front().coeffs.size();

  std::vector<Rational> norms;
  for (const auto& iv : identities) {
    Rational sq = 0;
    for (const auto& c : iv.coeffs) sq += c * c;
    norms.push_back(sq);
  }
  std::vector<std::size_t> order(identities.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return norms[a] < norms[b]; });

  const auto perms = all_permutations(degree);
  RatRowReducer work(m);
  for (std::size_t id : order) {
    const std::size_t before = work.rank();
    for (std::size_t start = 0; start < perms.size(); start += batch) {
      const std::size_t stop = std::min(perms.size(), start + batch);
      for (std::size_t k = start; k < stop; ++k) work.add_row(apply_permutation(identities[id], perms[k]).coeffs);
      if (work.rank() == m) break;
    }
    if (work.rank() > before) report.generators.push_back(id);
  }
  report.dimension = work.rank();
  return report;
}

ConsequenceModule consequence_module_dimension(const std::vector<Consequence>& consequences, std::uint32_t p,
                                               std::uint64_t seed,
                                               std::function<bool(const std::vector<std::uint32_t>&)> check,
                                               std::size_t direct_limit, std::size_t batch,
                                               std::function<void(std::size_t)> progress) {
  ConsequenceModule out;
  if (consequences.empty()) return out;
  const int degree = consequences.front().identity.degree;
  const std::size_t m = monomial_basis(degree).size();

  std::vector<SparseIdentity> images;
  for (const auto& c : consequences) {
    for (const auto& perm : block_coset_permutations(c.blocks)) images.push_back(apply_permutation(c.identity, perm));
  }
  out.images = images.size();

  auto reduce_mod = [p](std::int64_t c) {
    std::int64_t r = c % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  };

  ModRowReducer work(p, m);
  std::vector<std::uint32_t> row(m);
  auto feed = [&]() {
    ++out.rows_reduced;
    if (check && !check(row)) out.all_annihilated = false;
    const bool grew = work.add_row(row);
    if (progress && out.rows_reduced % 256 == 0) progress(work.rank());
    return grew;
  };

  if (images.size() <= direct_limit) {
    for (const auto& img : images) {
      std::fill(row.begin(), row.end(), 0);
      for (const auto& [j, c] : img.terms) row[static_cast<std::size_t>(j)] = reduce_mod(c);
      feed();
    }
  } else {
    Prng rng(seed);
    std::vector<std::uint64_t> acc(m);
    for (;;) {
      std::size_t gained = 0;
      for (std::size_t b = 0; b < batch; ++b) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& img : images) {
          const std::uint64_t r = rng.below(p);
          if (r == 0) continue;
          for (const auto& [j, c] : img.terms) acc[static_cast<std::size_t>(j)] += r * reduce_mod(c);
        }
        for (std::size_t j = 0; j < m; ++j) row[j] = static_cast<std::uint32_t>(acc[j] % p);
        gained += feed();
      }
      if (gained == 0 || work.rank() == m) break;
    }
  }
  out.dimension = work.rank();
  return out;
}

}  // namespace qalg
