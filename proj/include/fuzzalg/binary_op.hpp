#pragma once

#include <functional>
#include <string>

namespace fuzzalg {

// Named binary operation on [0,1]^2. Thin adapter used where checks accept
// any operator shape (monoid products, aggregators, grid exports).
struct BinaryOp {
  std::string name;
  std::function<double(double, double)> fn;

  double operator()(double x, double y) const { return fn(x, y); }
};

}  // namespace fuzzalg
