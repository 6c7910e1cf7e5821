#pragma once

#include "qalg/identity/identities.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qalg {

/// Provenance recorded with a list of identities. `structure` is a label
/// without spaces, e.g. "n=4,copy=0" or "n=10,f+5/4*g".
struct IdentityFileHeader {
  int degree = 7;
  std::string structure;
  std::uint64_t seed = 0;
  std::uint32_t p = 10;
  int s = 100;
  std::string order;  // monomial order tag; filled in on write if empty
};

struct IdentityFile {
  IdentityFileHeader header;
  std::vector<IdentityVector> identities;
};

/// Header line "# degree=.. structure=.. seed=.. p=.. s=.. order=..", then one
/// identity per line as space-separated "index:coefficient" pairs (nonzero only).
void write_identities(std::ostream& os, const IdentityFileHeader& header, const std::vector<IdentityVector>& ids);

/// Inverse of write_identities; rejects files written with another monomial order.
IdentityFile read_identities(std::istream& is);

}  // namespace qalg
