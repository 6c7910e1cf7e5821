#include "qalg/identity/serialize.hpp"

#include "qalg/identity/monomial.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qalg {

void write_identities(std::ostream& os, const IdentityFileHeader& header, const std::vector<IdentityVector>& ids) {
  os << "# degree=" << header.degree << " structure=" << header.structure << " seed=" << header.seed
     << " p=" << header.p << " s=" << header.s << " order=" << (header.order.empty() ? kMonomialOrderVersion : header.order)
     << "\n";
  for (const auto& iv : ids) {
    bool first = true;
    for (std::size_t k = 0; k < iv.coeffs.size(); ++k) {
      if (iv.coeffs[k] == 0) continue;
      os << (first ? "" : " ") << k << ':' << to_string(iv.coeffs[k]);
      first = false;
    }
    os << "\n";
  }
}

IdentityFile read_identities(std::istream& is) {
  IdentityFile file;
  std::string line;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0) throw std::runtime_error("identity file: missing header");
  std::map<std::string, std::string> fields;
  std::istringstream hs(line.substr(2));
  std::string field;
  while (hs >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw std::runtime_error("identity file: bad header field " + field);
    fields[field.substr(0, eq)] = field.substr(eq + 1);
  }
  for (const char* key : {"degree", "structure", "seed", "p", "s", "order"}) {
    if (!fields.count(key)) throw std::runtime_error(std::string("identity file: header lacks ") + key);
  }
  auto& h = file.header;
  h.degree = std::stoi(fields["degree"]);
  h.structure = fields["structure"];
  h.seed = std::stoull(fields["seed"]);
  h.p = static_cast<std::uint32_t>(std::stoul(fields["p"]));
  h.s = std::stoi(fields["s"]);
  h.order = fields["order"];
  if (h.order != kMonomialOrderVersion) {
    throw std::runtime_error("identity file: monomial order " + h.order + " differs from " + kMonomialOrderVersion);
  }
  const std::size_t columns = monomial_basis(h.degree).size();
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    IdentityVector iv = IdentityVector::zero(h.degree);
    std::istringstream ls(line);
    std::string pair;
    while (ls >> pair) {
      const auto colon = pair.find(':');
      if (colon == std::string::npos) throw std::runtime_error("identity file: bad term " + pair);
      const std::size_t index = std::stoul(pair.substr(0, colon));
      if (index >= columns) throw std::runtime_error("identity file: index out of range " + pair);
      iv.coeffs[index] = parse_rational(pair.substr(colon + 1));
    }
    file.identities.push_back(std::move(iv));
  }
  return file;
}

}  // namespace qalg
