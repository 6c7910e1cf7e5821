#pragma once

#include "qalg/exactla/mod_matrix.hpp"
#include "qalg/exactla/unipoly.hpp"
#include "qalg/identity/evaluate.hpp"
#include "qalg/identity/identities.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace qalg {

/// Seeded 64-bit Mersenne Twister with unbiased bounded draws by rejection,
/// so the stream of values is identical on every platform.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

enum class Arithmetic { Rational, Modular };

struct SearchConfig {
  std::uint32_t p = 10;   // components drawn from [0, p); also the modulus in modular mode
  int s = 100;            // stop after this many consecutive iterations without rank gain
  std::uint64_t seed = 0;
  Arithmetic mode = Arithmetic::Rational;
  bool want_nullspace = true;
  /// Called after every iteration with (iteration, rank).
  std::function<void(std::size_t, std::size_t)> progress;

  static SearchConfig rational_defaults() { return {}; }
  static SearchConfig modular_defaults() {
    SearchConfig c;
    c.p = 101;
    c.mode = Arithmetic::Modular;
    return c;
  }
};

struct SearchResult {
  std::size_t rank = 0;
  std::size_t columns = 0;
  std::size_t iterations = 0;
  std::size_t nullity() const { return columns - rank; }
  std::vector<IdentityVector> nullspace;                 // rational mode (canonical integral basis)
  std::optional<ModRowReducer> modular_rows;             // modular mode: reduced evaluation rows
  std::vector<std::vector<std::uint32_t>> mod_nullspace; // modular mode, if requested
};

/// Draws `degree` argument vectors of length n+1 with components in [0, bound).
std::vector<std::vector<std::int64_t>> random_arguments(Prng& rng, int degree, int n, std::uint64_t bound);

/// Randomized evaluation search for the identities of a given degree
/// satisfied by the product with the given constants.
SearchResult fill_and_reduce(const RationalConstants& constants, int n, int degree, const SearchConfig& cfg);

/// Evaluates an identity at one argument tuple (exact rational arithmetic).
std::vector<Rational> evaluate_identity(const IdentityVector& iv, const RationalConstants& constants, int n,
                                        const std::vector<std::vector<std::int64_t>>& args);

/// True when the identity vanishes on `tuples` fresh random argument tuples
/// drawn from a stream independent of the search stream for `seed`.
bool vanishes_on_held_out(const IdentityVector& iv, const RationalConstants& constants, int n, int tuples,
                          std::uint64_t seed, std::uint32_t bound = 10);

/// Identity vector (integer entries mod p) lies in the nullspace of the rows.
bool annihilated_by(const ModRowReducer& rows, const std::vector<std::uint32_t>& v);

struct ParametricScan {
  PolyMatrix matrix;
  std::vector<UniPoly> diagonal;
};

/// Fills t blocks of n+1 rows with evaluations under f + x*g on fresh random
/// arguments and returns the Smith diagonal of the resulting matrix.
ParametricScan parametric_scan(const RationalConstants& f, const RationalConstants& g, int n, int degree, int t,
                               const SearchConfig& cfg);

/// Rank-based membership test: v lies in the span of the basis vectors.
bool in_span(const IdentityVector& v, const std::vector<IdentityVector>& basis);

}  // namespace qalg
