#include "fuzzalg/nullnorms.hpp"

#include <algorithm>
#include <cmath>

#include "check_common.hpp"

namespace fuzzalg {

Nullnorm::Nullnorm(TConorm s, double k, TNorm t, const TolerancePolicy& pol)
    : s_(std::move(s)), k_(k), t_(std::move(t)), pol_(pol) {
  if (!(k >= 0.0 && k <= 1.0))
    throw ConstraintViolation("nullnorm: k must lie in [0,1], got " + fmt(k));
  name_ = "nullnorm(" + s_.name() + "," + fmt(k_) + "," + t_.name() + ")";
  for (double x : uniform_grid(11))
    if (!approx((*this)(k_, x), k_, pol_))
      throw InternalInvariantViolation("nullnorm: F(k,x) = k failed at x = " + fmt(x));
}

double Nullnorm::operator()(double x, double y) const {
  if (k_ == 0.0) return t_(x, y);
  if (k_ == 1.0) return s_(x, y);
  if (x <= k_ && y <= k_) return k_ * s_(x / k_, y / k_);
  if (x > k_ && y > k_)
    return k_ + (1.0 - k_) * t_((x - k_) / (1.0 - k_), (y - k_) / (1.0 - k_));
  return k_;
}

BinaryOp Nullnorm::as_binary_op() const {
  Nullnorm copy = *this;
  return BinaryOp{name_, [copy](double x, double y) { return copy(x, y); }};
}

namespace {

using detail::Fn2;

void check_absorbing(const Fn2& op, double k, std::span<const double> grid,
                     const TolerancePolicy& pol, ConditionResult& out) {
  for (double x : grid) {
    const double l = op(k, x);
    if (!approx(l, k, pol)) {
      out.pass = false;
      out.witness = Witness{{k, x}, l, k, "F(k,x)"};
      return;
    }
    const double r = op(x, k);
    if (!approx(r, k, pol)) {
      out.pass = false;
      out.witness = Witness{{x, k}, r, k, "F(x,k)"};
      return;
    }
  }
}

void check_lower_identity(const Fn2& op, double k, std::span<const double> grid,
                          const TolerancePolicy& pol, ConditionResult& out) {
  for (double x : grid) {
    if (!leq(x, k, pol)) continue;
    const double v = op(0.0, x);
    if (!approx(v, x, pol)) {
      out.pass = false;
      out.witness = Witness{{0.0, x}, v, x, "F(0,x) on x <= k"};
      return;
    }
  }
}

void check_upper_identity(const Fn2& op, double k, std::span<const double> grid,
                          const TolerancePolicy& pol, ConditionResult& out) {
  for (double x : grid) {
    if (!leq(k, x, pol)) continue;
    const double v = op(1.0, x);
    if (!approx(v, x, pol)) {
      out.pass = false;
      out.witness = Witness{{1.0, x}, v, x, "F(1,x) on x >= k"};
      return;
    }
  }
}

}  // namespace

AxiomReport check_nullnorm_axioms(const Fn2& op, double k, std::span<const double> grid,
                                  const TolerancePolicy& pol) {
  AxiomReport rep;
  detail::scan_commutativity(op, grid, pol, rep.add("commutativity"));
  detail::scan_associativity(op, grid, pol, rep.add("associativity"));
  detail::scan_monotonicity(op, grid, pol, rep.add("monotonicity"));
  check_absorbing(op, k, grid, pol, rep.add("absorbing"));
  check_lower_identity(op, k, grid, pol, rep.add("lower-identity"));
  check_upper_identity(op, k, grid, pol, rep.add("upper-identity"));
  return rep;
}

AxiomReport check_nullnorm_axioms(const Nullnorm& f, std::span<const double> grid,
                                  const TolerancePolicy& pol) {
  return check_nullnorm_axioms([&f](double x, double y) { return f(x, y); }, f.k(), grid, pol);
}

}  // namespace fuzzalg
