/* End-to-end tests of the nlie executable: every subcommand, the report
 * forms, the argument grammars and the exit-code contract.  The binary path
 * comes from the NLIE_CLI environment variable, which the build sets on
 * this test.  Outputs that are algebra documents are parsed back and
 * compared against the library, not against strings.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlie/algebra.hpp"
#include "nlie/catalog.hpp"
#include "nlie/cohomology.hpp"
#include "nlie/extension.hpp"
#include "nlie/induce.hpp"
#include "nlie/io.hpp"
#include "support/fixtures.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace nlie;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  ///< stdout and stderr interleaved
};

std::string cli_path() {
  const char* p = std::getenv("NLIE_CLI");
  REQUIRE_MESSAGE(p != nullptr,
                  "NLIE_CLI must point at the nlie executable");
  return p;
}

std::string quoted(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  return out + "'";
}

/// Runs the executable with the given arguments, capturing stdout+stderr.
RunResult run(const std::vector<std::string>& args) {
  std::string cmd = quoted(cli_path());
  for (const std::string& a : args) cmd += " " + quoted(a);
  cmd += " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
    r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

/// Scratch directory for documents written by the tests.
std::filesystem::path scratch() {
  const std::filesystem::path dir =
      std::filesystem::current_path() / "cli_scratch";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_doc(const std::string& stem, const AlgebraFile& file) {
  const std::string path = (scratch() / (stem + ".alg")).string();
  save_algebra_file(path, file);
  return path;
}

std::string write_text(const std::string& stem, const std::string& text) {
  const std::string path = (scratch() / (stem + ".alg")).string();
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

std::string gl2_path() {
  return write_doc("gl2", {testsupport::gl2(), default_basis_names(4)});
}

std::string m4_path() {
  return write_doc("m4", {testsupport::m4(), default_basis_names(4)});
}

TraceMap x4_trace() {
  Vec coeffs(4);
  coeffs[3] = Rational(1);
  return TraceMap{std::move(coeffs)};
}

}  // namespace

TEST_CASE("check passes a valid document and reports its shape") {
  RunResult r = run({"check", gl2_path()});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "command: check"));
  CHECK(contains(r.output, "arity: 2"));
  CHECK(contains(r.output, "brackets: 3"));
  CHECK(contains(r.output, "check fundamental identity: pass"));
  CHECK(contains(r.output, "status: pass"));
}

TEST_CASE("check fails with exit 1 when the identity does not hold") {
  // three brackets that cannot satisfy Jacobi: [[e1,e2],e3] alone is nonzero
  NLieAlgebra bad(2, 3);
  bad.set_bracket({0, 1}, {Rational(0), Rational(0), Rational(1)});
  bad.set_bracket({0, 2}, {Rational(1), Rational(0), Rational(0)});
  REQUIRE(!check_fundamental_identity(bad).empty());

  RunResult r = run({"check", write_doc("bad_jacobi", {bad, {}})});
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "check fundamental identity: FAIL"));
  CHECK(contains(r.output, "first violating tuple"));
  CHECK(contains(r.output, "status: FAIL"));
}

TEST_CASE("malformed documents exit 2 with a position or the bad bracket") {
  RunResult syntax = run({"check", write_text("syntax", "not a document")});
  CHECK(syntax.exit_code == 2);
  CHECK(contains(syntax.output, ":1:"));

  RunResult repeated = run(
      {"check",
       write_text("repeated",
                  "{ \"arity\": 2, \"dim\": 2, \"brackets\": [ { \"args\": "
                  "[1, 1], \"value\": { \"1\": \"1\" } } ] }")});
  CHECK(repeated.exit_code == 2);
  CHECK(contains(repeated.output, "brackets[0]"));

  RunResult missing = run({"check", (scratch() / "absent.alg").string()});
  CHECK(missing.exit_code == 2);
  CHECK(contains(missing.output, "cannot open"));
}

TEST_CASE("usage errors exit 2 and help exits 0") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"no-such-command"}).exit_code == 2);
  CHECK(run({"cohomology", gl2_path(), "--degree", "3"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("traces prints a basis of the functionals killing all brackets") {
  RunResult r = run({"traces", gl2_path()});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "trace space dim: 1"));
  CHECK(contains(r.output, "b1: 0,0,0,1"));
}

TEST_CASE("induce writes a document identical to the library's table") {
  const std::string out = (scratch() / "gl2_induced.alg").string();
  RunResult r = run({"induce", gl2_path(), "--trace", "gl2:x4", "--output",
                     out});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "trace: 0,0,0,1"));
  CHECK(contains(r.output, "result arity: 3"));

  AlgebraFile produced = load_algebra_file(out);
  CHECK(produced.algebra == induce(testsupport::gl2(), x4_trace()));
  CHECK(produced.algebra == testsupport::gl2_induced_x4());

  // the written document itself passes check
  CHECK(run({"check", out}).exit_code == 0);
}

TEST_CASE("induce without --output prints the document itself") {
  RunResult r = run({"induce", gl2_path(), "-t", "0,0,0,1"});
  CHECK(r.exit_code == 0);
  AlgebraFile produced = parse_algebra_text(r.output);
  CHECK(produced.algebra == testsupport::gl2_induced_x4());
}

TEST_CASE("induce rejects functionals that do not vanish on brackets") {
  RunResult r = run({"induce", gl2_path(), "-t", "x1"});
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output,
                 "check functional vanishes on every bracket value: FAIL"));
  CHECK(contains(r.output, "violating tuple"));

  CHECK(run({"induce", gl2_path(), "-t", "x9"}).exit_code == 2);
  CHECK(run({"induce", gl2_path(), "-t", "1,2"}).exit_code == 2);
}

TEST_CASE("structure reports series, classes and derivation dimensions") {
  RunResult r = run({"structure", m4_path()});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "derived series: 4 > 1 > 0"));
  CHECK(contains(r.output, "solvability class: 2"));
  CHECK(contains(r.output, "nilpotency class: none"));
  const Subspace der = derivation_space(testsupport::m4());
  CHECK(contains(r.output, "derivation space dim: " +
                               std::to_string(der.dim())));
}

TEST_CASE("cohomology dimensions agree with the library") {
  RunResult adj = run({"cohomology", gl2_path(), "-d", "1", "-c", "adjoint"});
  CHECK(adj.exit_code == 0);
  CHECK(contains(adj.output, "dim Z: 4"));
  CHECK(contains(adj.output, "dim B: 3"));
  CHECK(contains(adj.output, "dim H: 1"));

  const NLieAlgebra m4 = testsupport::m4();
  const int z2 = cocycle_space(m4, 2, Coefficients::scalar).dim();
  const int b2 = coboundary_space(m4, 2, Coefficients::scalar).dim();
  RunResult sc = run({"cohomology", m4_path(), "-d", "2", "-c", "scalar"});
  CHECK(sc.exit_code == 0);
  CHECK(contains(sc.output, "dim Z: " + std::to_string(z2)));
  CHECK(contains(sc.output, "dim B: " + std::to_string(b2)));
}

TEST_CASE("extend builds the central extension the library builds") {
  const std::string out = (scratch() / "m4_extended.alg").string();
  RunResult r = run({"extend", m4_path(), "--cocycle", "2,4=1;3,4=-1",
                     "--output", out});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "result dim: 5"));
  CHECK(contains(r.output, "central index: 5"));
  CHECK(contains(r.output, "extension trivial: no"));

  ScalCochain2 mu;
  mu.emplace(MultiIndex({1, 3}), Rational(1));
  mu.emplace(MultiIndex({2, 3}), Rational(-1));
  AlgebraFile produced = load_algebra_file(out);
  CHECK(produced.algebra == central_extend(testsupport::m4(), mu).total);
  CHECK(produced.basis_names.size() == 5);
  CHECK(produced.basis_names.back() == "c");
}

TEST_CASE("extend refuses forms that violate the cocycle law") {
  RunResult r = run({"extend", m4_path(), "-w", "1,3=1"});
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "check cocycle law (d2 vanishes): FAIL"));
  CHECK(contains(r.output, "violating grid point"));

  CHECK(run({"extend", m4_path(), "-w", "4,2=1"}).exit_code == 2);
  CHECK(run({"extend", m4_path(), "-w", "2,9=1"}).exit_code == 2);
  CHECK(run({"extend", m4_path(), "-w", "2,4"}).exit_code == 2);
}

TEST_CASE("recognize exhibits induced tables and verifies the round trip") {
  const std::string path = write_doc(
      "gl2_induced_src", {testsupport::gl2_induced_x4(),
                          default_basis_names(4)});
  RunResult r = run({"recognize", path});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "recognized: yes"));
  CHECK(contains(r.output, "pivot: e4"));
  CHECK(contains(r.output, "trace: 0,0,0,1"));
  CHECK(contains(r.output, "check round-trip reproduces the input: pass"));
}

TEST_CASE("recognize reports the non-abelian obstruction") {
  const std::string path =
      write_doc("simple4", {testsupport::simple_3lie_dim4(), {}});
  RunResult r = run({"recognize", path});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "recognized: no"));
  CHECK(contains(r.output,
                 "provably not induced: yes (derived subalgebra is not "
                 "abelian)"));

  // the criterion needs room to drop the arity
  CHECK(run({"recognize", gl2_path()}).exit_code == 2);
}

TEST_CASE("catalog lists groups, narrows by arity and exports entries") {
  RunResult overview = run({"catalog"});
  CHECK(overview.exit_code == 0);
  CHECK(contains(overview.output, "filippov"));
  CHECK(contains(overview.output, "bai"));
  CHECK(contains(overview.output, "lie4_solvable"));

  RunResult listing = run({"catalog", "filippov/n=3"});
  CHECK(listing.exit_code == 0);
  CHECK(contains(listing.output, "filippov/n=3/3b"));
  CHECK(!contains(listing.output, "filippov/n=2/"));

  // "lie4" is accepted as shorthand for the solvable dim-4 group
  RunResult r = run({"catalog", "lie4/M8"});
  CHECK(r.exit_code == 0);
  const auto entry = find_entry("lie4_solvable", "M8");
  REQUIRE(entry.has_value());
  CHECK(parse_algebra_text(r.output).algebra ==
        entry->instantiate(entry->samples.front()));
}

TEST_CASE("catalog selector parameters pass the query grammar") {
  RunResult r = run({"catalog", "bai/n=3/4e?beta=2/1"});
  CHECK(r.exit_code == 0);
  const auto entry = find_entry("bai", "4e", 3);
  REQUIRE(entry.has_value());
  CHECK(parse_algebra_text(r.output).algebra ==
        entry->instantiate({Rational(2)}));

  CHECK(run({"catalog", "bai/n=3/4e?beta=1"}).exit_code == 2);
  CHECK(run({"catalog", "bai/n=3/4e?gamma=1"}).exit_code == 2);
  CHECK(run({"catalog", "no_such_group/xyz"}).exit_code == 2);
}

TEST_CASE("json reports parse and carry the same fields") {
  RunResult r = run({"--json", "check", gl2_path()});
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc["command"] == "check");
  CHECK(doc["status"] == "pass");
  CHECK(doc["payload"]["arity"] == "2");
  CHECK(doc["checks"].size() == 2);

  // the flag is accepted after the subcommand as well
  RunResult trailing = run({"check", gl2_path(), "--json"});
  CHECK(trailing.exit_code == 0);
  CHECK(nlohmann::json::parse(trailing.output)["status"] == "pass");
}

TEST_CASE("reproduce reruns the verification suite") {
  RunResult r = run({"--json", "reproduce"});
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc["command"] == "reproduce");
  CHECK(doc["status"] == "pass");
  REQUIRE(doc["claims"].size() == 11);
  for (const auto& claim : doc["claims"]) {
    CHECK(claim["pass"] == true);
    CHECK(!claim["label"].get<std::string>().empty());
  }
}
