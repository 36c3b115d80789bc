#pragma once

#include <functional>
#include <span>

#include "fuzzalg/numerics.hpp"
#include "fuzzalg/report.hpp"

// Shared exhaustive scanners for binary-operator axioms. Each scans in
// lexicographic order and records the first (hence smallest) witness.

namespace fuzzalg::detail {

using Fn2 = std::function<double(double, double)>;

inline void scan_commutativity(const Fn2& op, std::span<const double> grid,
                               const TolerancePolicy& pol, ConditionResult& out) {
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double a = op(grid[i], grid[j]), b = op(grid[j], grid[i]);
      if (!approx(a, b, pol)) {
        out.pass = false;
        out.witness = Witness{{grid[i], grid[j]}, a, b, "op(x,y) vs op(y,x)"};
        return;
      }
    }
}

inline void scan_associativity(const Fn2& op, std::span<const double> grid,
                               const TolerancePolicy& pol, ConditionResult& out) {
  for (double x : grid)
    for (double y : grid)
      for (double z : grid) {
        const double a = op(op(x, y), z), b = op(x, op(y, z));
        if (!approx(a, b, pol)) {
          out.pass = false;
          out.witness = Witness{{x, y, z}, a, b, "op(op(x,y),z) vs op(x,op(y,z))"};
          return;
        }
      }
}

inline void scan_monotonicity(const Fn2& op, std::span<const double> grid,
                              const TolerancePolicy& pol, ConditionResult& out) {
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j)
      for (double y : grid) {
        const double a1 = op(grid[i], y), b1 = op(grid[j], y);
        if (!leq(a1, b1, pol)) {
          out.pass = false;
          out.witness = Witness{{grid[i], grid[j], y}, a1, b1, "first argument"};
          return;
        }
        const double a2 = op(y, grid[i]), b2 = op(y, grid[j]);
        if (!leq(a2, b2, pol)) {
          out.pass = false;
          out.witness = Witness{{grid[i], grid[j], y}, a2, b2, "second argument"};
          return;
        }
      }
}

}  // namespace fuzzalg::detail
