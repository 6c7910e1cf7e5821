#pragma once

#include "qalg/exactla/mod_matrix.hpp"
#include "qalg/identity/identities.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace qalg {

struct GeneratorReport {
  std::vector<std::size_t> generators;  // positions in the input list
  std::size_t dimension = 0;            // dimension of the module they span
};

/// Greedy module generators: identities are taken in order of increasing
/// Euclidean norm; each one's images under every permutation of the
/// variables are reduced in batches, and it is kept if the rank grew.
GeneratorReport module_generators(const std::vector<IdentityVector>& identities, std::size_t batch = 24);

struct ConsequenceModule {
  std::size_t dimension = 0;
  std::size_t images = 0;          // symmetry-class images generated
  std::size_t rows_reduced = 0;    // rows handed to the reducer
  bool all_annihilated = true;     // every reduced row passed the optional check
};

/// Dimension mod p of the module spanned by the images of the consequences
/// under relabelings of the variables. One image is taken per distribution
/// of variables over each consequence's alternating blocks. When there are
/// more images than `direct_limit`, rows are replaced by random linear
/// combinations of all images, fed in batches until a batch adds no rank.
/// `check`, if set, is applied to every reduced row.
ConsequenceModule consequence_module_dimension(
    const std::vector<Consequence>& consequences, std::uint32_t p, std::uint64_t seed,
    std::function<bool(const std::vector<std::uint32_t>&)> check = {}, std::size_t direct_limit = 2000,
    std::size_t batch = 32, std::function<void(std::size_t)> progress = {});

}  // namespace qalg
