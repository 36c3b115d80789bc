#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzalg/numerics.hpp"

namespace fuzzalg {

// One verdict per curated scenario. detail carries a short human-readable
// note: a witness, a count, or the measured deviation.
struct SuiteLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 0;  // offsets every randomized trial
  TolerancePolicy pol{};   // forwarded to every check invocation
};

// Runs the twelve curated verification scenarios in a fixed order and
// returns one line per scenario. Frozen reference values and round-trip
// bounds inside the scenarios are fixed literals, deliberately independent
// of opts.pol; the randomized scenarios verify seed-independent properties,
// so their verdicts do not change with opts.seed.
std::vector<SuiteLine> paper_suite(const SuiteOptions& opts = {});

// Script texts exercised by the dsl-fixtures scenario. The files shipped
// under tests/fixtures hold byte-identical copies.
std::string_view fixture_example_script();
std::string_view fixture_bad_lex();
std::string_view fixture_bad_parse();
std::string_view fixture_bad_domain();

}  // namespace fuzzalg
