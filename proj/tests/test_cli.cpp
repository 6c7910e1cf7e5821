#include "commands.hpp"

#include "qalg/sl2rep/structure.hpp"

#include <doctest.h>

#include <sstream>

using namespace qalg;
using namespace qalg::cli;

namespace {

int exit_code_of(auto&& run) {
  try {
    return run().exit_code;
  } catch (const CommandError& e) {
    return e.code();
  }
}

}  // namespace

TEST_CASE("multiplicity text and JSON carry the same numbers") {
  const Report rep = run_multiplicity({});
  const auto& entries = rep.data["entries"];
  REQUIRE(entries.size() == 120);
  std::istringstream in(rep.text);
  std::string line;
  std::getline(in, line);  // column header
  std::size_t k = 0;
  for (int q = 0; q < 10; ++q) {
    REQUIRE(std::getline(in, line));
    std::istringstream row(line);
    int label = -1;
    row >> label;
    CHECK(label == q);
    long value = 0;
    while (row >> value) {
      REQUIRE(k < entries.size());
      CHECK(entries[k]["n"].get<long>() == 24 * q + 2 * static_cast<long>(k % 12));
      CHECK(entries[k]["multiplicity"].get<long>() == value);
      ++k;
    }
  }
  CHECK(k == 120);
}

TEST_CASE("multiplicity verify reports agreement") {
  MultiplicityOptions opt;
  opt.ns = {0, 24, 100, 202};
  opt.verify = true;
  const Report rep = run_multiplicity(opt);
  CHECK(rep.exit_code == 0);
  CHECK(rep.data["verified"].get<bool>());
  CHECK(exit_code_of([] { return run_multiplicity({{-2}, false, false}); }) == 1);
}

TEST_CASE("structure text output parses back to the JSON entries") {
  for (bool rational : {false, true}) {
    const Report rep = run_structure({6, 0, rational});
    std::istringstream in(rep.text);
    const StructureTable st = read_structure(in);
    const auto& entries = rep.data["entries"];
    REQUIRE(entries.size() == st.entries.size());
    for (std::size_t i = 0; i < st.entries.size(); ++i) {
      CHECK(entries[i]["quadruple"].get<std::array<int, 4>>() == st.entries[i].quad.w);
      const auto& e = st.entries[i];
      CHECK(entries[i]["value"].get<std::string>() == (rational ? to_string(e.rational) : to_string(e.integral)));
    }
    CHECK(rep.data["scale"].get<std::string>() == to_string(st.scale));
  }
}

TEST_CASE("exit codes") {
  CHECK(exit_code_of([] { return run_structure({5, 0, false}); }) == 2);
  CHECK(exit_code_of([] { return run_structure({4, 1, false}); }) == 2);
  CHECK(exit_code_of([] { return run_structure({-4, 0, false}); }) == 1);
  CHECK(exit_code_of([] { return run_decompose({-1, false}); }) == 1);

  IdentitiesOptions deg10;
  deg10.n = 4;
  deg10.degree = 10;
  CHECK(exit_code_of([&] { return run_identities(deg10); }) == 1);

  IdentitiesOptions cons;
  cons.n = 4;
  cons.consequences = "D";
  CHECK(exit_code_of([&] { return run_identities(cons); }) == 1);

  IdentitiesOptions bad_structure;
  bad_structure.n = 6;
  bad_structure.structure = "h";
  CHECK(exit_code_of([&] { return run_identities(bad_structure); }) == 1);
}

TEST_CASE("identities command is deterministic and verifies its output") {
  IdentitiesOptions opt;
  opt.n = 4;
  opt.verify = true;
  opt.generators = true;
  const Report a = run_identities(opt);
  const Report b = run_identities(opt);
  CHECK(a.exit_code == 0);
  CHECK(a.data == b.data);
  CHECK(a.text == b.text);
  CHECK(a.data["rank"].get<int>() == 14);
  CHECK(a.data["nullity"].get<int>() == 21);
  CHECK(a.data["held_out_check"].get<bool>());
  CHECK(a.data["recognition"]["D"]["generates_nullspace"].get<bool>());
}

TEST_CASE("decompose lists summands by decreasing highest weight") {
  const Report rep = run_decompose({8, true});
  const auto& s = rep.data["summands"];
  REQUIRE(s.size() == 9);
  CHECK(s[0]["highest_weight"].get<int>() == 20);
  CHECK(s[3]["multiplicity"].get<int>() == 2);
  CHECK(rep.data["highest_weight_vectors"].size() == 9);
}

TEST_CASE("manifest records the command and parameters") {
  const Report rep = run_decompose({6, false});
  const Json m = run_manifest("decompose", rep.parameters, 0.5);
  CHECK(m["command"].get<std::string>() == "decompose");
  CHECK(m["parameters"]["n"].get<int>() == 6);
  CHECK(m["library_version"].get<std::string>() == library_version());
}
