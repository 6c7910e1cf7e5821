#include "commands.hpp"

#include "qalg/identity/generators.hpp"
#include "qalg/identity/identities.hpp"
#include "qalg/identity/monomial.hpp"
#include "qalg/identity/search.hpp"
#include "qalg/identity/serialize.hpp"
#include "qalg/multiplicity/multiplicity.hpp"
#include "qalg/sl2rep/structure.hpp"
#include "qalg/sl2rep/weight_basis.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qalg::cli {

namespace {

constexpr int kHeldOutTuples = 50;

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// "index:coefficient" pairs for the nonzero entries, space separated.
std::string sparse_line(const IdentityVector& iv) {
  std::string out;
  for (std::size_t k = 0; k < iv.coeffs.size(); ++k) {
    if (iv.coeffs[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(k) + ":" + to_string(iv.coeffs[k]);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string library_version() { return QALG_VERSION; }

Json run_manifest(const std::string& command, const Json& parameters, double seconds) {
  Json m;
  m["command"] = command;
  m["parameters"] = parameters;
  m["monomial_order"] = kMonomialOrderVersion;
  m["library_version"] = library_version();
  m["duration_seconds"] = seconds;
  return m;
}

// ---------------------------------------------------------------- multiplicity

Report run_multiplicity(const MultiplicityOptions& opt) {
  Report rep;
  const bool grid = opt.ns.empty();
  std::vector<long> ns = opt.ns;
  if (grid) {
    for (long q = 0; q < 10; ++q)
      for (long r = 0; r < 24; r += 2) ns.push_back(24 * q + r);
  }
  for (long n : ns) {
    if (n < 0) throw CommandError(1, "n must be nonnegative");
  }

  Json entries = Json::array();
  bool all_match = true;
  for (long n : ns) {
    Json e;
    e["n"] = n;
    e["multiplicity"] = multiplicity(n).get_si();
    if (opt.verify) {
      const long brute = multiplicity_brute(n).get_si();
      e["brute_force"] = brute;
      all_match = all_match && brute == e["multiplicity"].get<long>();
    }
    entries.push_back(std::move(e));
  }
  rep.data["command"] = "multiplicity";
  rep.data["layout"] = grid ? "grid" : "list";
  rep.data["entries"] = entries;
  if (opt.verify) rep.data["verified"] = all_match;

  std::ostringstream os;
  if (grid) {
    os << pad("q\\r", 4);
    for (int r = 0; r < 24; r += 2) os << pad(std::to_string(r), 6);
    os << "\n";
    for (std::size_t q = 0; q < 10; ++q) {
      os << pad(std::to_string(q), 4);
      for (std::size_t k = 0; k < 12; ++k) os << pad(std::to_string(entries[q * 12 + k]["multiplicity"].get<long>()), 6);
      os << "\n";
    }
    os << "(n = 24q + r)\n";
  } else {
    os << pad("n", 6) << pad("mult", 8) << (opt.verify ? pad("brute", 8) : "") << "\n";
    for (const auto& e : entries) {
      os << pad(std::to_string(e["n"].get<long>()), 6) << pad(std::to_string(e["multiplicity"].get<long>()), 8);
      if (opt.verify) os << pad(std::to_string(e["brute_force"].get<long>()), 8);
      os << "\n";
    }
  }

  if (opt.scaled) {
    Json scaled = Json::array();
    os << "\n1152-scaled polynomials in n, constant term first\n";
    os << pad("r", 3) << "  weight n | weight n+2 | multiplicity\n";
    for (int r = 0; r < 24; r += 2) {
      Json row;
      row["r"] = r;
      std::vector<std::string> wn, wn2, mult;
      for (const auto& c : scaled_dim_weight_n_poly(r)) wn.push_back(c.get_str());
      for (const auto& c : scaled_dim_weight_n_plus_2_poly(r)) wn2.push_back(c.get_str());
      for (const auto& c : scaled_multiplicity_poly(r)) mult.push_back(c.get_str());
      row["weight_n"] = wn;
      row["weight_n_plus_2"] = wn2;
      row["multiplicity"] = mult;
      scaled.push_back(row);
      auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
        return s;
      };
      os << pad(std::to_string(r), 3) << "  " << join(wn) << " | " << join(wn2) << " | " << join(mult) << "\n";
    }
    rep.data["scaled"] = scaled;
  }
  if (opt.verify) os << "brute-force check: " << (all_match ? "all match" : "MISMATCH") << "\n";
  rep.text = os.str();
  rep.parameters["n"] = grid ? Json("grid") : Json(opt.ns);
  if (opt.verify && !all_match) rep.exit_code = 2;
  return rep;
}

// ------------------------------------------------------------------ decompose

Report run_decompose(const DecomposeOptions& opt) {
  if (opt.n < 0) throw CommandError(1, "n must be nonnegative");
  Report rep;
  const auto parts = decompose(opt.n);
  rep.data["command"] = "decompose";
  rep.data["n"] = opt.n;
  Json summands = Json::array();
  std::ostringstream os;
  os << "exterior fourth power of V(" << opt.n << ")\n";
  os << pad("highest weight", 14) << pad("multiplicity", 14) << "\n";
  for (const auto& [w, mult] : parts) {
    summands.push_back({{"highest_weight", w}, {"multiplicity", mult}});
    os << pad(std::to_string(w), 14) << pad(std::to_string(mult), 14) << "\n";
  }
  if (parts.empty()) os << "(zero space)\n";
  rep.data["summands"] = summands;

  if (opt.hwv) {
    Json hw = Json::array();
    for (const auto& [w, mult] : parts) {
      const auto quads = quadruples_of_weight(opt.n, w);
      Json block;
      block["weight"] = w;
      std::vector<std::string> qnames;
      for (const auto& q : quads) qnames.push_back(q.to_string());
      block["quadruples"] = qnames;
      os << "\nweight " << w << " over";
      for (const auto& q : qnames) os << ' ' << q;
      os << "\n";
      Json vectors = Json::array();
      for (const auto& v : highest_weight_vectors(opt.n, w)) {
        std::vector<std::string> coords;
        for (const auto& q : quads) {
          auto it = v.coeffs.find(q);
          coords.push_back(it == v.coeffs.end() ? "0" : to_string(it->second));
        }
        os << "  (";
        for (std::size_t k = 0; k < coords.size(); ++k) os << (k ? "," : "") << coords[k];
        os << ")\n";
        vectors.push_back(coords);
      }
      block["vectors"] = vectors;
      hw.push_back(block);
    }
    rep.data["highest_weight_vectors"] = hw;
  }
  rep.text = os.str();
  rep.parameters["n"] = opt.n;
  return rep;
}

// ------------------------------------------------------------------ structure

namespace {

StructureTable table_or_throw(int n, int copy) {
  if (n < 0) throw CommandError(1, "n must be nonnegative");
  if (copy < 0) throw CommandError(1, "copy must be nonnegative");
  try {
    return structure_table(n, copy);
  } catch (const std::out_of_range& e) {
    throw CommandError(2, e.what());
  }
}

}  // namespace

Report run_structure(const StructureOptions& opt) {
  const StructureTable st = table_or_throw(opt.n, opt.copy);
  const TableForm form = opt.rational ? TableForm::Rational : TableForm::Integral;
  Report rep;
  rep.data["command"] = "structure";
  rep.data["n"] = st.n;
  rep.data["copy"] = st.copy;
  rep.data["scale"] = st.scale.get_str();
  rep.data["form"] = opt.rational ? "rational" : "integral";
  Json entries = Json::array();
  for (const auto& e : st.entries) {
    entries.push_back({{"quadruple", e.quad.w}, {"value", opt.rational ? to_string(e.rational) : e.integral.get_str()}});
  }
  rep.data["entries"] = entries;
  std::ostringstream os;
  write_structure(os, st, form);
  rep.text = os.str();
  rep.parameters = {{"n", opt.n}, {"copy", opt.copy}, {"form", rep.data["form"]}};
  return rep;
}

// ----------------------------------------------------------------- identities

namespace {

struct ResolvedStructure {
  int n = 0;
  std::string label;  // no spaces
  RationalConstants constants;
  bool parametric = false;
  RationalConstants f, g;
  Json manifest;  // copy / x / file entries for the manifest
};

ResolvedStructure resolve_structure(const IdentitiesOptions& opt) {
  ResolvedStructure rs;
  const std::string spec = opt.structure;
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw CommandError(1, "cannot open structure file " + path);
    StructureTable st;
    try {
      st = read_structure(in);
    } catch (const std::exception& e) {
      throw CommandError(1, e.what());
    }
    if (opt.n && *opt.n != st.n) throw CommandError(1, "--n disagrees with the structure file");
    rs.n = st.n;
    rs.label = "n=" + std::to_string(st.n) + ",file=" + path;
    rs.constants = indexed_constants(st);
    rs.manifest = {{"structure", spec}};
    return rs;
  }
  if (!opt.n) throw CommandError(1, "--n is required unless --structure file:PATH is given");
  rs.n = *opt.n;
  const std::string base = "n=" + std::to_string(rs.n) + ",";
  if (spec.empty() || spec == "f" || spec == "g") {
    const int copy = spec.empty() ? opt.copy : (spec == "f" ? 0 : 1);
    rs.constants = indexed_constants(table_or_throw(rs.n, copy));
    rs.label = base + "copy=" + std::to_string(copy);
    rs.manifest = {{"copy", copy}};
    return rs;
  }
  const std::string prefix = "f+", suffix = "*g";
  if (spec.size() > prefix.size() + suffix.size() && spec.rfind(prefix, 0) == 0 &&
      spec.compare(spec.size() - suffix.size(), suffix.size(), suffix) == 0) {
    const std::string coef = spec.substr(prefix.size(), spec.size() - prefix.size() - suffix.size());
    const auto f = indexed_constants(table_or_throw(rs.n, 0));
    const auto g = indexed_constants(table_or_throw(rs.n, 1));
    if (coef == "x") {
      rs.parametric = true;
      rs.f = f;
      rs.g = g;
      rs.label = base + "f+x*g";
      rs.manifest = {{"structure", spec}};
      return rs;
    }
    Rational x;
    try {
      x = parse_rational(coef);
    } catch (const std::exception&) {
      throw CommandError(1, "cannot parse the coefficient in --structure " + spec);
    }
    rs.constants = combine(f, g, x);
    rs.label = base + "f+" + to_string(x) + "*g";
    rs.manifest = {{"structure", spec}, {"x", to_string(x)}};
    return rs;
  }
  throw CommandError(1, "--structure must be f, g, f+x*g, f+<rational>*g or file:PATH");
}

// Dimension of the module spanned by one identity under all relabelings.
std::size_t module_dimension(const IdentityVector& iv) { return module_generators({iv}).dimension; }

std::string group_diagonal(const std::vector<UniPoly>& diag, Json& out) {
  out = Json::array();
  std::string text;
  for (std::size_t i = 0; i < diag.size();) {
    std::size_t j = i;
    while (j < diag.size() && diag[j] == diag[i]) ++j;
    const std::string factor = diag[i].is_zero() ? "0" : diag[i].to_string();
    out.push_back({{"factor", factor}, {"count", j - i}});
    text += "  (" + factor + ") x " + std::to_string(j - i) + "\n";
    i = j;
  }
  return text;
}

}  // namespace

Report run_identities(const IdentitiesOptions& opt) {
  if (opt.degree != 7 && opt.degree != 10) throw CommandError(1, "--degree must be 7 or 10");
  if (opt.s <= 0) throw CommandError(1, "--s must be positive");
  if (opt.t <= 0) throw CommandError(1, "--t must be positive");
  const ResolvedStructure rs = resolve_structure(opt);
  if (opt.degree == 10 && !opt.modular && !opt.force && !rs.parametric) {
    throw CommandError(1, "degree 10 in rational mode needs several GB; use --mod, or --force to run anyway");
  }
  if (!opt.consequences.empty() && (opt.consequences != "D" && opt.consequences != "S")) {
    throw CommandError(1, "--consequences must be D or S");
  }
  if (!opt.consequences.empty() && (!opt.modular || opt.degree != 10)) {
    throw CommandError(1, "--consequences needs --mod and --degree 10");
  }
  if (opt.generators && (opt.modular || rs.parametric)) {
    throw CommandError(1, "--generators runs on the rational nullspace");
  }

  SearchConfig cfg = opt.modular ? SearchConfig::modular_defaults() : SearchConfig::rational_defaults();
  if (opt.p) cfg.p = *opt.p;
  cfg.s = opt.s;
  cfg.seed = opt.seed;
  if (opt.modular && !is_prime(cfg.p)) throw CommandError(1, "--p must be a prime below 65536 in modular mode");
  if (cfg.p < 2) throw CommandError(1, "--p must be at least 2");
  if (opt.progress) {
    cfg.progress = [sink = opt.progress](std::size_t it, std::size_t rank) {
      if (it % 25 == 0) sink("iteration " + std::to_string(it) + " rank " + std::to_string(rank));
    };
  }

  Report rep;
  Json& d = rep.data;
  d["command"] = "identities";
  d["structure"] = rs.label;
  d["n"] = rs.n;
  d["degree"] = opt.degree;
  d["mode"] = opt.modular ? "modular" : "rational";
  d["seed"] = cfg.seed;
  d["p"] = cfg.p;
  d["s"] = cfg.s;
  d["monomial_order"] = kMonomialOrderVersion;
  d["columns"] = monomial_basis(opt.degree).size();
  rep.parameters = {{"n", rs.n}, {"degree", opt.degree}, {"seed", cfg.seed}, {"p", cfg.p}, {"s", cfg.s},
                    {"mode", d["mode"]}};
  for (const auto& [k, v] : rs.manifest.items()) rep.parameters[k] = v;

  std::ostringstream os;
  os << "structure: " << rs.label << "\n"
     << "degree: " << opt.degree << "  (" << d["columns"].get<std::size_t>() << " monomials, order "
     << kMonomialOrderVersion << ")\n"
     << "mode: " << d["mode"].get<std::string>() << "  seed " << cfg.seed << "  p " << cfg.p << "  s " << cfg.s
     << "\n";

  if (rs.parametric) {
    d["t"] = opt.t;
    rep.parameters["t"] = opt.t;
    if (opt.progress) {
      cfg.progress = [sink = opt.progress](std::size_t block, std::size_t) {
        sink("evaluated block " + std::to_string(block));
      };
    }
    const auto scan = parametric_scan(rs.f, rs.g, rs.n, opt.degree, opt.t, cfg);
    Json groups;
    const std::string text = group_diagonal(scan.diagonal, groups);
    d["matrix_rows"] = scan.matrix.rows();
    d["smith_diagonal"] = groups;
    os << "parametric scan: " << scan.matrix.rows() << " x " << scan.matrix.cols() << " matrix over Q[x], t " << opt.t
       << "\nSmith diagonal:\n"
       << text;
    rep.text = os.str();
    return rep;
  }

  const SearchResult res = fill_and_reduce(rs.constants, rs.n, opt.degree, cfg);
  d["iterations"] = res.iterations;
  d["rank"] = res.rank;
  d["nullity"] = res.nullity();
  os << "iterations: " << res.iterations << "\nrank: " << res.rank << "\nnullity: " << res.nullity() << "\n";

  if (opt.modular) {
    if (!opt.consequences.empty()) {
      const auto kind = opt.consequences == "D" ? IdentityKind::Derivation : IdentityKind::AlternatingSum;
      const auto& rows = *res.modular_rows;
      std::function<void(std::size_t)> progress;
      if (opt.progress) {
        progress = [sink = opt.progress](std::size_t rank) { sink("consequence module rank " + std::to_string(rank)); };
      }
      const auto mod = consequence_module_dimension(
          degree10_consequences(kind), cfg.p, cfg.seed,
          [&](const std::vector<std::uint32_t>& v) { return annihilated_by(rows, v); }, 2000, 32, progress);
      d["consequences"] = {{"identity", opt.consequences},
                           {"module_dimension", mod.dimension},
                           {"images", mod.images},
                           {"rows_reduced", mod.rows_reduced},
                           {"all_in_nullspace", mod.all_annihilated}};
      os << "consequences of " << opt.consequences << ": module dimension " << mod.dimension << " (" << mod.images
         << " images, " << mod.rows_reduced << " rows reduced), all in nullspace: " << yes_no(mod.all_annihilated)
         << "\n";
    }
    rep.text = os.str();
    return rep;
  }

  Json nullspace = Json::array();
  for (const auto& iv : res.nullspace) nullspace.push_back(sparse_line(iv));
  d["nullspace"] = nullspace;

  if (opt.degree == 7) {
    Json recog = Json::object();
    for (const auto& [name, kind] : {std::pair{"D", IdentityKind::Derivation}, std::pair{"S", IdentityKind::AlternatingSum}}) {
      const IdentityVector iv = canonical_identity(kind);
      const bool satisfied = !res.nullspace.empty() && in_span(iv, res.nullspace);
      const bool generates = satisfied && module_dimension(iv) == res.nullity();
      recog[name] = {{"satisfied", satisfied}, {"generates_nullspace", generates}};
      os << name << " satisfied: " << yes_no(satisfied) << ", generates the nullspace: " << yes_no(generates) << "\n";
    }
    d["recognition"] = recog;
  }

  if (opt.generators) {
    const auto gen = module_generators(res.nullspace);
    Json gens = Json::array();
    os << "module generators: " << gen.generators.size() << " spanning dimension " << gen.dimension << "\n";
    for (std::size_t k : gen.generators) {
      const auto& iv = res.nullspace[k];
      Json g = {{"nullspace_index", k}, {"identity", sparse_line(iv)}};
      os << "  generator " << k << ": " << sparse_line(iv) << "\n";
      if (opt.degree == 7) {
        for (const auto& [name, kind] :
             {std::pair{"D", IdentityKind::Derivation}, std::pair{"S", IdentityKind::AlternatingSum}}) {
          const IdentityVector ref = canonical_identity(kind);
          const bool inside = module_generators({ref, iv}).dimension == module_dimension(ref);
          g[std::string("in_module_of_") + name] = inside;
          os << "    in module of " << name << ": " << yes_no(inside) << "\n";
        }
      }
      gens.push_back(g);
    }
    d["generators"] = {{"dimension", gen.dimension}, {"identities", gens}};
  }

  if (opt.verify) {
    bool ok = true;
    for (const auto& iv : res.nullspace) {
      ok = ok && vanishes_on_held_out(iv, rs.constants, rs.n, kHeldOutTuples, cfg.seed, cfg.p);
    }
    d["held_out_check"] = ok;
    os << "held-out check (" << kHeldOutTuples << " tuples per identity): " << (ok ? "passed" : "FAILED") << "\n";
  }

  os << "nullspace basis (index:coefficient):\n";
  for (const auto& line : nullspace) os << "  " << line.get<std::string>() << "\n";

  if (!opt.identities_out.empty()) {
    std::ofstream out(opt.identities_out);
    if (!out) throw CommandError(1, "cannot write " + opt.identities_out);
    write_identities(out, {opt.degree, rs.label, cfg.seed, cfg.p, cfg.s, kMonomialOrderVersion}, res.nullspace);
  }
  rep.text = os.str();
  if (opt.verify && !d["held_out_check"].get<bool>()) rep.exit_code = 2;
  return rep;
}

}  // namespace qalg::cli
