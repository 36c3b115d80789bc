// Runs the curated verification scenarios and prints one verdict line per
// scenario; exits nonzero when any scenario fails.
#include <cstdio>

#include "fuzzalg/suite.hpp"

int main() {
  int failed = 0;
  for (const fuzzalg::SuiteLine& line : fuzzalg::paper_suite({})) {
    std::printf("%s %s: %s\n", line.pass ? "PASS" : "FAIL", line.name.c_str(),
                line.detail.c_str());
    if (!line.pass) ++failed;
  }
  if (failed > 0) std::printf("%d scenario(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
