#pragma once

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qalg::cli {

using Json = nlohmann::ordered_json;

/// Error carrying the process exit code: 1 for usage errors, 2 when a
/// mathematical precondition fails (for example multiplicity 0).
class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

/// Output of a command. `data` is the structured form; `text` is rendered from
/// the same values. `parameters` feeds the run manifest. A failed `--verify`
/// check still produces a report, with exit code 2.
struct Report {
  Json data;
  std::string text;
  Json parameters = Json::object();
  int exit_code = 0;
};

/// Progress sink for long computations; receives complete lines.
using ProgressSink = std::function<void(const std::string&)>;

struct MultiplicityOptions {
  std::vector<long> ns;  // empty: the 10 x 12 grid n = 24q + r
  bool scaled = false;   // include the 1152-scaled polynomials per residue
  bool verify = false;   // cross-check against brute-force counting
};
Report run_multiplicity(const MultiplicityOptions& opt);

struct DecomposeOptions {
  int n = 0;
  bool hwv = false;
};
Report run_decompose(const DecomposeOptions& opt);

struct StructureOptions {
  int n = 0;
  int copy = 0;
  bool rational = false;
};
Report run_structure(const StructureOptions& opt);

struct IdentitiesOptions {
  std::optional<int> n;
  int degree = 7;
  std::string structure;  // f, g, f+x*g, f+<rational>*g, file:PATH; empty uses copy
  int copy = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint32_t> p;  // default 10, or 101 with modular
  int s = 100;
  int t = 4;
  bool modular = false;
  bool force = false;           // allow degree 10 in rational mode
  bool generators = false;      // run the module generators search (rational mode)
  std::string consequences;     // "", "D" or "S": degree-10 consequence module (modular mode)
  std::string identities_out;   // write the nullspace basis in the identity file format
  bool verify = false;          // re-check every reported identity on held-out tuples
  ProgressSink progress;
};
Report run_identities(const IdentitiesOptions& opt);

/// Manifest recording everything needed to repeat a run.
Json run_manifest(const std::string& command, const Json& parameters, double seconds);

std::string library_version();

}  // namespace qalg::cli
