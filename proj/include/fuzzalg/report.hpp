#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzalg {

// Point in the argument space where a condition failed, with both sides of
// the violated relation. The point uses carrier values, not indices.
struct Witness {
  std::vector<double> point;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string note;

  std::string str() const;
};

struct ConditionResult {
  std::string name;
  bool pass = true;
  std::optional<Witness> witness;
  std::string info;  // free-form detail (counts, derived values, ...)
};

// Result of a structured check: one entry per named condition, in a fixed
// order, each carrying the lexicographically smallest witness on failure.
struct CheckReport {
  std::vector<ConditionResult> conditions;
  std::vector<std::string> notes;

  bool pass() const;
  const ConditionResult* find(std::string_view name) const;
  // Appends a passing condition. The returned reference (and any pointer from
  // find) is invalidated by the next add; finish with it before adding again.
  ConditionResult& add(std::string name);
  std::string summary() const;
};

using AxiomReport = CheckReport;

// Formats v with up to 12 significant digits (shortest form).
std::string fmt(double v);

}  // namespace fuzzalg
