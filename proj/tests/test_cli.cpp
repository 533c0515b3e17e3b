// Command-line surface: exit codes, text and JSON reports, the JSON
// round-trip guarantee, prime-field runs, and the bundled self-check suites.

#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "glzero/cli_core.hpp"

using namespace glzero;
using cli::PoincarePolynomial;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gl0 command prints the expected text report") {
  auto r = run_cli({"gl0", "--braid", "1 1 1", "--strands", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("t^0 q^2 + t^1 q^0 + t^2 q^-2") != std::string::npos);
  CHECK(r.out.find("total dimension: 3") != std::string::npos);

  auto unknot = run_cli({"gl0", "--braid", "", "--strands", "1"});
  CHECK(unknot.code == 0);
  CHECK(unknot.out.find("t^0 q^0") != std::string::npos);
}

TEST_CASE("gl0 JSON round-trips through the schema") {
  auto r = run_cli({"gl0", "--braid", "1 -2 1 -2", "--strands", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("knot").at("braid") == "1 -2 1 -2");
  CHECK(doc.at("knot").at("strands") == 3);
  PoincarePolynomial parsed = cli::poincare_from_json(doc.at("poincare"));
  auto direct = homology::gl0_poincare<Rat>(webs::parse_braid("1 -2 1 -2", 3));
  CHECK(parsed == direct);
  CHECK(homology::total_dim(parsed) == 5);
  // print -> parse -> print is stable
  CHECK(cli::poincare_json(parsed) == doc.at("poincare"));
}

TEST_CASE("exit codes distinguish parse errors from non-knot closures") {
  CHECK(run_cli({"gl0", "--braid", "1 x", "--strands", "2"}).code == 1);
  CHECK(run_cli({"gl0", "--braid", "3", "--strands", "2"}).code == 1);
  CHECK(run_cli({"gl0", "--braid", "1 1", "--strands", "2"}).code == 2);
  CHECK(run_cli({"bockstein", "--braid", "1 1", "--strands", "2"}).code == 2);
  CHECK(run_cli({"nosuchcommand"}).code == 1);
  CHECK(run_cli({"verify", "nosuchsuite"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
  auto link = run_cli({"gl0", "--braid", "1 1", "--strands", "2"});
  CHECK(link.err.find("more than one component") != std::string::npos);
}

TEST_CASE("bockstein command reports pages and the last page") {
  auto r = run_cli({"bockstein", "--braid", "1 1 1", "--strands", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("page 1 (dim 3)") != std::string::npos);
  CHECK(r.out.find("stabilizes at r = 1") != std::string::npos);
  CHECK(r.out.find("E_inf (dim 3)") != std::string::npos);

  auto j = run_cli({"bockstein", "--braid", "1 1 1 1 1", "--strands", "2", "--format",
                    "json"});
  REQUIRE(j.code == 0);
  json doc = json::parse(j.out);
  CHECK(doc.at("r_star") == 1);
  REQUIRE(doc.at("pages").size() == 1);
  CHECK(doc.at("pages")[0].at("r") == 1);
  PoincarePolynomial einf = cli::poincare_from_json(doc.at("einf"));
  CHECK(einf == homology::hfk_ranks<Rat>(webs::parse_braid("1 1 1 1 1", 2)));
  CHECK(homology::total_dim(einf) == 5);
}

TEST_CASE("prime-field runs reproduce the rational answer on the trefoil") {
  auto r = run_cli({"gl0", "--braid", "1 1 1", "--strands", "2", "--char", "5",
                    "--format", "json"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  auto parsed = cli::poincare_from_json(doc.at("poincare"));
  CHECK(homology::total_dim(parsed) == 3);
  CHECK(run_cli({"gl0", "--braid", "1 1 1", "--strands", "2", "--char", "4"}).code == 1);
}

TEST_CASE("degree bound and jobs flags are accepted") {
  auto r = run_cli({"gl0", "--braid", "1 1 1", "--strands", "2", "--degree-bound", "0",
                    "--jobs", "2"});
  CHECK(r.code == 0);
}

TEST_CASE("reference table entries are well-formed") {
  for (const auto& e : cli::reference_table()) {
    CAPTURE(e.name);
    webs::BraidWord b = webs::parse_braid(e.braid, e.strands);
    CHECK(b.closure_is_knot());
    if (!e.hfk.empty()) CHECK(homology::total_dim(e.hfk) == e.hfk_total);
  }
}

TEST_CASE("bundled self-check suites pass") {
  std::ostringstream out;
  CHECK(cli::suite_appendix_c(out) == 0);
  CHECK(cli::suite_oracle(out, 3, 3) == 0);
  CHECK(cli::suite_identities(out) == 0);
  CHECK(out.str().find("FAIL") == std::string::npos);
}

TEST_CASE("verify subcommand aggregates suites") {
  auto r = run_cli({"verify", "appendixC"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS 3_1") != std::string::npos);
  CHECK(r.out.find("PASS 5_1") != std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(run_cli({"verify", "identities"}).code == 0);
}
