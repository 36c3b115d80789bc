#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fuzzalg/dsl.hpp"
#include "fuzzalg/errors.hpp"
#include "fuzzalg/registry.hpp"
#include "fuzzalg/suite.hpp"

using namespace fuzzalg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(static_cast<bool>(out));
  out << content;
}

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_BINARY) + " " + args + " >cli_stdout.txt 2>cli_stderr.txt";
  int raw = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp("cli_stdout.txt");
  r.err = slurp("cli_stderr.txt");
  return r;
}

constexpr const char* kMinCsv3 =
    "x,y,value\n"
    "0,0,0\n"
    "0,0.5,0\n"
    "0,1,0\n"
    "0.5,0,0\n"
    "0.5,0.5,0.5\n"
    "0.5,1,0.5\n"
    "1,0,0\n"
    "1,0.5,0.5\n"
    "1,1,1\n";

}  // namespace

TEST_CASE("registry resolves qualified, bare, and plain names") {
  CHECK(surface_registry().size() == 10);
  CHECK(lookup_surface("tnorm:min")(0.3, 0.7) == 0.3);
  CHECK(lookup_surface("tconorm:max")(0.3, 0.7) == 0.7);
  CHECK(lookup_surface("product")(0.3, 0.7) == 0.3 * 0.7);
  CHECK(lookup_surface("probsum")(0.3, 0.7) == 0.3 + 0.7 - 0.3 * 0.7);
  CHECK(lookup_surface("min")(0.2, 0.9) == 0.2);
  CHECK(lookup_surface("rep_log")(0.25, 0.25) == doctest::Approx(0.125).epsilon(1e-9));
  CHECK(lookup_surface("rep_rat")(0.5, 0.75) == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("registry rejects ambiguous and unknown names") {
  CHECK_THROWS_WITH_AS(
      lookup_surface("lukasiewicz"),
      "ambiguous operator 'lukasiewicz': candidates tnorm:lukasiewicz tconorm:lukasiewicz",
      ConstraintViolation);
  CHECK_THROWS_WITH_AS(
      lookup_surface("drastic"),
      "ambiguous operator 'drastic': candidates tnorm:drastic tconorm:drastic",
      ConstraintViolation);
  const char* known =
      "tnorm:min, tnorm:product, tnorm:lukasiewicz, tnorm:drastic, tconorm:max, "
      "tconorm:probsum, tconorm:lukasiewicz, tconorm:drastic, rep_log, rep_rat";
  CHECK(surface_list() == known);
  CHECK_THROWS_WITH_AS(lookup_surface("frob"),
                       ("unknown operator 'frob' (known: " + std::string(known) + ")").c_str(),
                       ConstraintViolation);
  CHECK_THROWS_WITH_AS(
      lookup_surface("tnorm:frob"),
      ("unknown operator 'tnorm:frob' (known: " + std::string(known) + ")").c_str(),
      ConstraintViolation);
}

TEST_CASE("csv export is byte-stable with x varying slowest") {
  BinaryOp op = lookup_surface("tnorm:min");
  std::ostringstream first;
  export_grid_csv(op, 3, first);
  CHECK(first.str() == kMinCsv3);
  std::ostringstream second;
  export_grid_csv(op, 3, second);
  CHECK(first.str() == second.str());
  std::ostringstream sink;
  CHECK_THROWS_AS(export_grid_csv(op, 1, sink), InvalidGrid);
}

TEST_CASE("fixture files carry the embedded scripts byte for byte") {
  CHECK(slurp(std::string(FIXTURE_DIR) + "/example_usubnorm.fz") == fixture_example_script());
  CHECK(slurp(std::string(FIXTURE_DIR) + "/bad_lex.fz") == fixture_bad_lex());
  CHECK(slurp(std::string(FIXTURE_DIR) + "/bad_parse.fz") == fixture_bad_parse());
  CHECK(slurp(std::string(FIXTURE_DIR) + "/bad_domain.fz") == fixture_bad_domain());
}

TEST_CASE("script surfaces expose operator bindings in order") {
  dsl::Program p = dsl::parse_program(
      "let a = tnorm product;\n"
      "let s = fuzzyset fn(x) x;\n"
      "let u = uninorm umin(min, max, 0.5);\n"
      "let f = nullnorm(lukasiewicz, 0.25, min);\n");
  std::vector<BinaryOp> surfaces = dsl::script_surfaces(p);
  REQUIRE(surfaces.size() == 3);
  CHECK(surfaces[0].name == "a");
  CHECK(surfaces[1].name == "u");
  CHECK(surfaces[2].name == "f");
  CHECK(surfaces[0](0.5, 0.5) == 0.25);
  CHECK(surfaces[1](0.0, 1.0) == 0.0);
  CHECK(surfaces[2](1.0, 0.0) == 0.25);
}

TEST_CASE("cli run reports both example verdicts and honors strictness") {
  std::string fixture = std::string(FIXTURE_DIR) + "/example_usubnorm.fz";
  CliResult lax = run_cli("run " + fixture);
  CHECK(lax.code == 0);
  CHECK(lax.out == "PASS usubnorm-inequality\nFAIL identity-condition @ sigma(1)=0.5\n");
  CliResult strict = run_cli("run " + fixture + " --strict-identity");
  CHECK(strict.code == 1);
  CHECK(strict.out == lax.out);
}

TEST_CASE("cli run exits 2 on malformed input with a positioned message") {
  CliResult parse = run_cli("run " + std::string(FIXTURE_DIR) + "/bad_parse.fz");
  CHECK(parse.code == 2);
  CHECK(parse.out.empty());
  CHECK(parse.err.find("1:21:") != std::string::npos);
  CliResult lex = run_cli("run " + std::string(FIXTURE_DIR) + "/bad_lex.fz");
  CHECK(lex.code == 2);
  CHECK(lex.err.find("1:1: unexpected character '@'") != std::string::npos);
  CliResult missing = run_cli("run no_such_script.fz");
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot read") != std::string::npos);
}

TEST_CASE("cli run accepts an empty script") {
  spit("empty.fz", "");
  CliResult r = run_cli("run empty.fz");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("cli grid exports registry and script operators") {
  CliResult reg = run_cli("grid tnorm:min --n 3 --out grid_min.csv");
  CHECK(reg.code == 0);
  CHECK(slurp("grid_min.csv") == kMinCsv3);

  spit("ops.fz", "let um = uninorm umin(min, max, 0.5);\n");
  CliResult scripted = run_cli("grid um --script ops.fz --n 3 --out grid_um.csv");
  CHECK(scripted.code == 0);
  CHECK(slurp("grid_um.csv") ==
        "x,y,value\n"
        "0,0,0\n"
        "0,0.5,0\n"
        "0,1,0\n"
        "0.5,0,0\n"
        "0.5,0.5,0.5\n"
        "0.5,1,1\n"
        "1,0,0\n"
        "1,0.5,1\n"
        "1,1,1\n");

  CliResult ambiguous = run_cli("grid lukasiewicz --n 3 --out grid_bad.csv");
  CHECK(ambiguous.code == 2);
  CHECK(ambiguous.err.find("ambiguous operator 'lukasiewicz'") != std::string::npos);

  CliResult unknown = run_cli("grid nope --script ops.fz --n 3 --out grid_bad.csv");
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown operator 'nope'") != std::string::npos);

  CliResult tiny = run_cli("grid tnorm:min --n 1 --out grid_bad.csv");
  CHECK(tiny.code == 2);
}

TEST_CASE("cli paper-suite passes at an offset seed") {
  CliResult r = run_cli("paper-suite --seed 7");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.substr(0, 5) == "PASS ");
    ++count;
  }
  CHECK(count == 12);
}
