#include "qalg/sl2rep/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <regex>
#include <stdexcept>

namespace qalg {

std::size_t summand_block_start(const std::vector<WeightVector>& basis, int highest_weight, int copy) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& b = basis[i];
    if (b.highest_weight == highest_weight && b.copy == copy && b.f_power == 0) return i;
  }
  throw std::out_of_range("V(" + std::to_string(highest_weight) + ") copy " + std::to_string(copy) +
                          " does not occur");
}

std::vector<StructureTable> structure_tables(int n) {
  const auto dec = decompose(n);
  auto it = dec.find(n);
  if (n < 0 || it == dec.end()) return {};
  const int mult = it->second;

  const auto basis = weight_vector_basis(n);
  const auto quads = quadruple_basis(n);
  const RatMatrix inv = invert(weight_vector_matrix(n, basis));

  std::vector<StructureTable> out;
  for (int copy = 0; copy < mult; ++copy) {
    StructureTable st;
    st.n = n;
    st.copy = copy;
    const std::size_t start = summand_block_start(basis, n, copy);
    std::vector<Rational> values;
    for (std::size_t col = 0; col < quads.size(); ++col) {
      const Quadruple& t = quads[col];
      if (std::abs(t.weight()) > n) continue;
      const std::size_t row = start + static_cast<std::size_t>((n - t.weight()) / 2);
      st.entries.push_back({t, inv(row, col), 0});
      values.push_back(inv(row, col));
    }
    st.scale = lcm_of_denominators(values);
    for (auto& e : st.entries) {
      Rational scaled = e.rational * st.scale;
      e.integral = scaled.get_num();
    }
    out.push_back(std::move(st));
  }
  return out;
}

StructureTable structure_table(int n, int copy) {
  auto all = structure_tables(n);
  if (copy < 0 || static_cast<std::size_t>(copy) >= all.size()) {
    throw std::out_of_range("V(" + std::to_string(n) + ") has multiplicity " + std::to_string(all.size()) +
                            " in its fourth exterior power; copy " + std::to_string(copy) + " unavailable");
  }
  return std::move(all[copy]);
}

std::vector<Rational> bracket(const StructureTable& st, const std::vector<Rational>& x1,
                              const std::vector<Rational>& x2, const std::vector<Rational>& x3,
                              const std::vector<Rational>& x4, TableForm form) {
  const std::size_t dim = static_cast<std::size_t>(st.n + 1);
  const std::vector<Rational>* xs[4] = {&x1, &x2, &x3, &x4};
  for (auto* x : xs) {
    if (x->size() != dim) throw std::invalid_argument("bracket argument has wrong length");
  }
  std::vector<Rational> out(dim);
  static constexpr int kPerms[24][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
      {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
      {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
      {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSigns[24] = {1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1,
                                     1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1};
  for (const auto& e : st.entries) {
    const Rational c = form == TableForm::Integral ? Rational(e.integral) : e.rational;
    if (c == 0) continue;
    int idx[4];
    for (int k = 0; k < 4; ++k) idx[k] = (st.n - e.quad.w[k]) / 2;
    // det of the 4x4 minor of the argument matrix at these basis indices
    Rational det = 0;
    for (int p = 0; p < 24; ++p) {
      Rational term = kSigns[p];
      for (int k = 0; k < 4 && term != 0; ++k) term *= (*xs[k])[idx[kPerms[p][k]]];
      det += term;
    }
    if (det != 0) out[st.output_index(e.quad)] += c * det;
  }
  return out;
}

void write_structure(std::ostream& os, const StructureTable& st, TableForm form) {
  const bool rational = form == TableForm::Rational;
  os << "# n=" << st.n << " copy=" << st.copy << " scale=" << st.scale.get_str() << (rational ? " form=rational" : "")
     << "\n";
  for (const auto& e : st.entries) {
    os << e.quad.to_string() << " = " << (rational ? to_string(e.rational) : e.integral.get_str()) << "\n";
  }
}

StructureTable read_structure(std::istream& is) {
  static const std::regex header(R"(#\s*n=(-?\d+)\s+copy=(\d+)\s+scale=(\d+)(\s+form=(rational|integral))?\s*)");
  static const std::regex entry(
      R"(\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*=\s*(-?\d+(/\d+)?)\s*)");
  StructureTable st;
  bool have_header = false;
  bool rational = false;
  std::string line;
  std::smatch m;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (std::regex_match(line, m, header)) {
      st.n = std::stoi(m[1]);
      st.copy = std::stoi(m[2]);
      st.scale = Integer(m[3].str());
      rational = m[5] == "rational";
      have_header = true;
    } else if (std::regex_match(line, m, entry)) {
      if (!have_header) throw std::runtime_error("structure file: entry before header");
      StructureEntry e;
      e.quad = Quadruple{{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])}};
      if (!is_valid_quadruple(st.n, e.quad)) throw std::runtime_error("structure file: bad quadruple " + line);
      if (rational) {
        e.rational = parse_rational(m[5].str());
        const Rational scaled = e.rational * st.scale;
        if (scaled.get_den() != 1) throw std::runtime_error("structure file: scale does not clear " + line);
        e.integral = scaled.get_num();
      } else {
        if (m[6].matched) throw std::runtime_error("structure file: fraction in integral form: " + line);
        e.integral = Integer(m[5].str());
        e.rational = Rational(e.integral, st.scale);
        e.rational.canonicalize();
      }
      st.entries.push_back(std::move(e));
    } else if (line[0] != '#') {
      throw std::runtime_error("structure file: cannot parse line: " + line);
    }
  }
  if (!have_header) throw std::runtime_error("structure file: missing header");
  if (st.scale == 0) throw std::runtime_error("structure file: zero scale");
  std::sort(st.entries.begin(), st.entries.end(),
            [](const auto& a, const auto& b) { return standard_before(a.quad, b.quad); });
  return st;
}

}  // namespace qalg
