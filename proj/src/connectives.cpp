#include "fuzzalg/connectives.hpp"

#include <algorithm>

namespace fuzzalg {

TNorm TNorm::minimum() { return TNorm(Kind::minimum, "min"); }
TNorm TNorm::product() { return TNorm(Kind::product, "product"); }
TNorm TNorm::lukasiewicz() { return TNorm(Kind::lukasiewicz, "lukasiewicz"); }
TNorm TNorm::drastic() { return TNorm(Kind::drastic, "drastic"); }

TNorm TNorm::from_generator(MonotoneFunction f, const TolerancePolicy& pol) {
  if (f.direction() != Direction::decreasing)
    throw ConstraintViolation("t-norm generator: f decreasing");
  if (f.lo() != 0.0 || f.hi() != 1.0)
    throw ConstraintViolation("t-norm generator: domain [0,1]");
  if (!(f.at_hi().is_finite() && std::abs(f.at_hi().value()) <= pol.eps_eq))
    throw ConstraintViolation("t-norm generator: f(1) = 0");
  if (f.clamp_rule() != ClampRule::lower_end)
    throw ConstraintViolation("t-norm generator: pseudo-inverse must clamp to 0");
  TNorm t(Kind::generator, "gen(" + (f.name().empty() ? std::string("f") : f.name()) + ")");
  t.gen_ = std::move(f);
  t.pol_ = pol;
  return t;
}

double TNorm::operator()(double x, double y) const {
  switch (kind_) {
    case Kind::minimum:
      return std::min(x, y);
    case Kind::product:
      return x * y;
    case Kind::lukasiewicz:
      return std::max(x + y - 1.0, 0.0);
    case Kind::drastic:
      // Identity behaviour is pinned to the exact endpoint.
      if (x == 1.0) return y;
      if (y == 1.0) return x;
      return 0.0;
    case Kind::generator: {
      const MonotoneFunction& f = *gen_;
      return f.pseudo_inverse(f(x) + f(y), pol_);
    }
  }
  return 0.0;
}

const MonotoneFunction& TNorm::generator() const {
  if (!gen_) throw Error("TNorm: not generator-built");
  return *gen_;
}

BinaryOp TNorm::as_binary_op() const {
  TNorm copy = *this;
  return BinaryOp{name_, [copy](double x, double y) { return copy(x, y); }};
}

TConorm TConorm::maximum() { return TConorm(Kind::maximum, "max"); }
TConorm TConorm::probabilistic_sum() { return TConorm(Kind::probabilistic_sum, "probsum"); }
TConorm TConorm::lukasiewicz() { return TConorm(Kind::lukasiewicz, "lukasiewicz"); }
TConorm TConorm::drastic() { return TConorm(Kind::drastic, "drastic"); }

TConorm TConorm::from_generator(MonotoneFunction g, const TolerancePolicy& pol) {
  if (g.direction() != Direction::increasing)
    throw ConstraintViolation("t-conorm generator: g increasing");
  if (g.lo() != 0.0 || g.hi() != 1.0)
    throw ConstraintViolation("t-conorm generator: domain [0,1]");
  if (!(g.at_lo().is_finite() && std::abs(g.at_lo().value()) <= pol.eps_eq))
    throw ConstraintViolation("t-conorm generator: g(0) = 0");
  if (g.clamp_rule() != ClampRule::upper_end)
    throw ConstraintViolation("t-conorm generator: pseudo-inverse must clamp to 1");
  TConorm s(Kind::generator, "gen(" + (g.name().empty() ? std::string("g") : g.name()) + ")");
  s.gen_ = std::move(g);
  s.pol_ = pol;
  return s;
}

double TConorm::operator()(double x, double y) const {
  switch (kind_) {
    case Kind::maximum:
      return std::max(x, y);
    case Kind::probabilistic_sum:
      return x + y - x * y;
    case Kind::lukasiewicz:
      return std::min(x + y, 1.0);
    case Kind::drastic:
      if (x == 0.0) return y;
      if (y == 0.0) return x;
      return 1.0;
    case Kind::generator: {
      const MonotoneFunction& g = *gen_;
      return g.pseudo_inverse(g(x) + g(y), pol_);
    }
  }
  return 0.0;
}

const MonotoneFunction& TConorm::generator() const {
  if (!gen_) throw Error("TConorm: not generator-built");
  return *gen_;
}

BinaryOp TConorm::as_binary_op() const {
  TConorm copy = *this;
  return BinaryOp{name_, [copy](double x, double y) { return copy(x, y); }};
}

std::vector<double> idempotents(const std::function<double(double, double)>& op,
                                std::span<const double> grid, const TolerancePolicy& pol) {
  std::vector<double> out;
  for (double x : grid)
    if (approx(op(x, x), x, pol)) out.push_back(x);
  return out;
}

std::vector<double> idempotents(const TNorm& t, std::span<const double> grid, const TolerancePolicy& pol) {
  return idempotents([&t](double x, double y) { return t(x, y); }, grid, pol);
}

std::vector<double> idempotents(const TConorm& s, std::span<const double> grid, const TolerancePolicy& pol) {
  return idempotents([&s](double x, double y) { return s(x, y); }, grid, pol);
}

namespace {

bool only_trivial_idempotents(const std::vector<double>& idem, const TolerancePolicy& pol) {
  for (double x : idem)
    if (!approx(x, 0.0, pol) && !approx(x, 1.0, pol)) return false;
  return true;
}

}  // namespace

bool is_archimedean_on_grid(const TNorm& t, std::span<const double> grid, const TolerancePolicy& pol) {
  if (!t.continuous())
    throw NotContinuous("is_archimedean_on_grid: '" + t.name() + "' is not continuous");
  return only_trivial_idempotents(idempotents(t, grid, pol), pol);
}

bool is_archimedean_on_grid(const TConorm& s, std::span<const double> grid, const TolerancePolicy& pol) {
  if (!s.continuous())
    throw NotContinuous("is_archimedean_on_grid: '" + s.name() + "' is not continuous");
  return only_trivial_idempotents(idempotents(s, grid, pol), pol);
}

}  // namespace fuzzalg
