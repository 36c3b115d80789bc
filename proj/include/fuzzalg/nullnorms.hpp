#pragma once

#include "fuzzalg/connectives.hpp"
#include "fuzzalg/report.hpp"

namespace fuzzalg {

// F = <S, k, T>: S rescaled onto [0,k]^2, T onto (k,1]^2, and the absorbing
// value k everywhere in between. k = 0 degenerates to T alone, k = 1 to S
// alone; both are handled structurally, never by rescaling through zero.
class Nullnorm {
 public:
  Nullnorm(TConorm s, double k, TNorm t, const TolerancePolicy& pol = {});

  double operator()(double x, double y) const;

  double k() const { return k_; }
  const TConorm& conorm() const { return s_; }
  const TNorm& norm() const { return t_; }
  const std::string& name() const { return name_; }
  BinaryOp as_binary_op() const;

 private:
  TConorm s_;
  double k_;
  TNorm t_;
  std::string name_;
  TolerancePolicy pol_;
};

// Verifies commutativity, associativity, monotonicity, the absorbing element
// F(k,x)=k, and both boundary identities F(0,x)=x on x<=k and F(1,x)=x on
// x>=k, exhaustively over the grid.
AxiomReport check_nullnorm_axioms(const std::function<double(double, double)>& op, double k,
                                  std::span<const double> grid, const TolerancePolicy& pol = {});
AxiomReport check_nullnorm_axioms(const Nullnorm& f, std::span<const double> grid,
                                  const TolerancePolicy& pol = {});

}  // namespace fuzzalg
