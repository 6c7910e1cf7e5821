#pragma once

#include "qalg/sl2rep/weight_basis.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qalg {

/// Constants of an alternating quaternary product [v_p,v_q,v_r,v_s] = c * v_{p+q+r+s}
/// on V(n). Only quadruples with |p+q+r+s| <= n appear; zero constants are kept.
struct StructureEntry {
  Quadruple quad;
  Rational rational;
  Integer integral;  // rational * scale
};

struct StructureTable {
  int n = 0;
  int copy = 0;
  Integer scale = 1;  // LCM of the denominators of the rational constants
  std::vector<StructureEntry> entries;  // standard quadruple order

  /// Basis index i of the output v_{n-2i} for a quadruple.
  int output_index(const Quadruple& t) const { return (n - t.weight()) / 2; }
};

/// Which constants to use when evaluating brackets.
enum class TableForm { Rational, Integral };

/// Projection onto the copy-th summand isomorphic to V(n), read from the
/// inverse of the weight-vector matrix. Throws std::out_of_range when V(n)
/// occurs at most `copy` times.
StructureTable structure_table(int n, int copy);
/// All copies at once (shares the matrix inversion).
std::vector<StructureTable> structure_tables(int n);

/// Row index in the inverse weight-vector matrix where the block of the
/// copy-th V(n) summand begins.
std::size_t summand_block_start(const std::vector<WeightVector>& basis, int highest_weight, int copy);

/// Quadrilinear alternating evaluation on dense vectors of length n+1.
std::vector<Rational> bracket(const StructureTable& st, const std::vector<Rational>& x1,
                              const std::vector<Rational>& x2, const std::vector<Rational>& x3,
                              const std::vector<Rational>& x4, TableForm form = TableForm::Integral);

/// Line format: a header "# n=<n> copy=<c> scale=<lcm>" then "[p,q,r,s] = c" per entry
/// using integral constants. The rational form appends " form=rational" to the
/// header and writes the unscaled constants.
void write_structure(std::ostream& os, const StructureTable& st, TableForm form = TableForm::Integral);
/// Inverse of write_structure (either form).
StructureTable read_structure(std::istream& is);

}  // namespace qalg
