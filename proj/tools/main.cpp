#include "commands.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using qalg::cli::CommandError;
using qalg::cli::Report;

struct Output {
  std::string format = "text";
  std::string out;
  std::string manifest;
};

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out, "Write the output here instead of stdout (manifest goes to PATH.manifest.json)");
  cmd->add_option("--manifest", o.manifest, "Write the run manifest here");
}

int emit(const std::string& command, const Output& o, Report rep, double seconds) {
  const std::string body = o.format == "json" ? rep.data.dump(2) + "\n" : rep.text;
  if (o.out.empty()) {
    std::cout << body << std::flush;
  } else {
    std::ofstream f(o.out);
    if (!f) throw CommandError(1, "cannot write " + o.out);
    f << body;
  }
  const std::string manifest_path = !o.manifest.empty() ? o.manifest : (o.out.empty() ? "" : o.out + ".manifest.json");
  if (!manifest_path.empty()) {
    std::ofstream m(manifest_path);
    if (!m) throw CommandError(1, "cannot write " + manifest_path);
    rep.parameters["format"] = o.format;
    m << qalg::cli::run_manifest(command, rep.parameters, seconds).dump(2) << "\n";
  }
  std::cerr << command << ": done in " << seconds << " s\n";
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating quaternary algebras on sl(2) representations: tables, structures and identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qalg::cli::library_version());

  Output out_mult, out_dec, out_struct, out_id;

  qalg::cli::MultiplicityOptions mult;
  std::string range;
  auto* c_mult = app.add_subcommand("multiplicity", "Multiplicity of V(n) in its exterior fourth power");
  c_mult->add_option("--n", mult.ns, "Values of n (repeatable); default is the grid n = 24q + r, q < 10");
  c_mult->add_option("--range", range, "Inclusive range LO:HI of n");
  c_mult->add_flag("--scaled", mult.scaled, "Also print the 1152-scaled polynomials for each residue mod 24");
  c_mult->add_flag("--verify", mult.verify, "Cross-check the closed form against brute-force counting");
  add_output_flags(c_mult, out_mult);

  qalg::cli::DecomposeOptions dec;
  auto* c_dec = app.add_subcommand("decompose", "Irreducible decomposition of the exterior fourth power of V(n)");
  c_dec->add_option("--n", dec.n, "Highest weight n")->required();
  c_dec->add_flag("--hwv", dec.hwv, "Print highest weight vectors (canonical integral bases) per weight");
  add_output_flags(c_dec, out_dec);

  qalg::cli::StructureOptions st;
  std::string form = "integral";
  auto* c_struct = app.add_subcommand("structure", "Structure constants of an invariant quaternary product on V(n)");
  c_struct->add_option("--n", st.n, "Highest weight n")->required();
  c_struct->add_option("--copy", st.copy, "Which copy of V(n) (0-based)");
  c_struct->add_option("--form", form, "Constants as computed or scaled to integers")
      ->check(CLI::IsMember({"rational", "integral"}));
  add_output_flags(c_struct, out_struct);

  qalg::cli::IdentitiesOptions id;
  int n_id = -1;
  std::uint32_t p_id = 0;
  auto* c_id = app.add_subcommand("identities", "Search for polynomial identities of degree 7 or 10");
  c_id->add_option("--n", n_id, "Highest weight n");
  c_id->add_option("--degree", id.degree, "Identity degree (7 or 10)");
  c_id->add_option("--structure", id.structure, "f, g, f+x*g (parametric), f+<rational>*g, or file:PATH");
  c_id->add_option("--copy", id.copy, "Copy of V(n) when --structure is not given");
  c_id->add_option("--seed", id.seed, "Random seed");
  c_id->add_option("--p", p_id, "Argument bound (rational mode, default 10) or prime modulus (default 101)");
  c_id->add_option("--s", id.s, "Stop after this many iterations without rank gain");
  c_id->add_option("--t", id.t, "Blocks of n+1 rows in the parametric scan");
  c_id->add_flag("--mod", id.modular, "Modular arithmetic");
  c_id->add_flag("--force", id.force, "Allow degree 10 in rational mode");
  c_id->add_flag("--generators", id.generators, "Find module generators of the nullspace");
  c_id->add_option("--consequences", id.consequences, "Dimension of the module of degree-10 consequences of D or S");
  c_id->add_option("--identities-out", id.identities_out, "Write the nullspace basis in the identity file format");
  c_id->add_flag("--verify", id.verify, "Re-check every identity on held-out random tuples");
  bool quiet = false;
  c_id->add_flag("--quiet", quiet, "No progress lines on stderr");
  add_output_flags(c_id, out_id);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  try {
    if (*c_mult) {
      if (!range.empty()) {
        const auto colon = range.find(':');
        if (colon == std::string::npos) throw CommandError(1, "--range expects LO:HI");
        const long lo = std::stol(range.substr(0, colon)), hi = std::stol(range.substr(colon + 1));
        if (lo > hi) throw CommandError(1, "--range is empty");
        for (long n = lo; n <= hi; ++n) mult.ns.push_back(n);
      }
      auto rep = qalg::cli::run_multiplicity(mult);
      return emit("multiplicity", out_mult, std::move(rep), elapsed());
    }
    if (*c_dec) {
      auto rep = qalg::cli::run_decompose(dec);
      return emit("decompose", out_dec, std::move(rep), elapsed());
    }
    if (*c_struct) {
      st.rational = form == "rational";
      auto rep = qalg::cli::run_structure(st);
      return emit("structure", out_struct, std::move(rep), elapsed());
    }
    if (*c_id) {
      if (n_id >= 0) id.n = n_id;
      if (c_id->count("--p")) id.p = p_id;
      if (!quiet) id.progress = [](const std::string& line) { std::cerr << line << "\n"; };
      auto rep = qalg::cli::run_identities(id);
      return emit("identities", out_id, std::move(rep), elapsed());
    }
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
