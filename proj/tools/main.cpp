#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fuzzalg/binary_op.hpp"
#include "fuzzalg/dsl.hpp"
#include "fuzzalg/registry.hpp"
#include "fuzzalg/suite.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_check_line(const std::string& name, bool pass, const std::string& witness) {
  if (pass) {
    std::cout << "PASS " << name << "\n";
  } else if (witness.empty()) {
    std::cout << "FAIL " << name << "\n";
  } else {
    std::cout << "FAIL " << name << " @ " << witness << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fuzzy aggregation operators: script checks, surface exports, and the "
      "built-in verification suite"};
  app.require_subcommand(1);

  std::string run_file;
  double run_eps = 0.0;
  bool strict_identity = false;
  CLI::App* run = app.add_subcommand("run", "Run the checks of a .fz script");
  run->add_option("file", run_file, "script path")->required();
  CLI::Option* run_eps_opt =
      run->add_option("--eps", run_eps, "equality and inequality tolerance");
  run->add_flag("--strict-identity", strict_identity,
                "treat identity-condition failures as fatal");

  std::string grid_op;
  int grid_n = 0;
  std::string grid_out;
  std::string grid_script;
  CLI::App* grid = app.add_subcommand("grid", "Export an operator surface as CSV");
  grid->add_option("op", grid_op, "operator name (script binding or registry entry)")
      ->required();
  grid->add_option("--n", grid_n, "grid points per axis")->required();
  grid->add_option("--out", grid_out, "output CSV path")->required();
  grid->add_option("--script", grid_script, "script whose bindings are searched first");

  std::uint64_t suite_seed = 0;
  double suite_eps = 0.0;
  CLI::App* suite =
      app.add_subcommand("paper-suite", "Run the built-in verification scenarios");
  suite->add_option("--seed", suite_seed, "offset for the randomized trials");
  CLI::Option* suite_eps_opt =
      suite->add_option("--eps", suite_eps, "equality and inequality tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      fuzzalg::dsl::RunOptions options;
      if (run_eps_opt->count() > 0) {
        options.pol.eps_eq = run_eps;
        options.pol.eps_leq = run_eps;
      }
      fuzzalg::dsl::Program program = fuzzalg::dsl::parse_program(read_file(run_file));
      fuzzalg::dsl::ProgramResult result = fuzzalg::dsl::run_program(program, options);
      for (const fuzzalg::dsl::CheckLine& line : result.lines) {
        print_check_line(line.name, line.pass, line.witness);
      }
      return result.run_pass(strict_identity) ? 0 : 1;
    }
    if (grid->parsed()) {
      fuzzalg::BinaryOp op;
      bool found = false;
      if (!grid_script.empty()) {
        fuzzalg::dsl::Program program = fuzzalg::dsl::parse_program(read_file(grid_script));
        for (fuzzalg::BinaryOp& surface : fuzzalg::dsl::script_surfaces(program)) {
          if (surface.name == grid_op) {
            op = std::move(surface);
            found = true;
            break;
          }
        }
      }
      if (!found) op = fuzzalg::lookup_surface(grid_op);
      std::ofstream out(grid_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write '" + grid_out + "'");
      fuzzalg::export_grid_csv(op, grid_n, out);
      return 0;
    }
    fuzzalg::SuiteOptions options;
    options.seed = suite_seed;
    if (suite_eps_opt->count() > 0) {
      options.pol.eps_eq = suite_eps;
      options.pol.eps_leq = suite_eps;
    }
    bool all_pass = true;
    for (const fuzzalg::SuiteLine& line : fuzzalg::paper_suite(options)) {
      print_check_line(line.name, line.pass, line.detail);
      all_pass = all_pass && line.pass;
    }
    return all_pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
