#include "fuzzalg/uninorms.hpp"

#include <algorithm>
#include <cmath>

#include "check_common.hpp"

namespace fuzzalg {

namespace {

void require_interior_e(double e) {
  if (!(e > 0.0 && e < 1.0))
    throw ConstraintViolation(
        "uninorm: e must lie strictly inside (0,1); e=1 gives a t-norm and e=0 a t-conorm - "
        "construct those directly");
}

std::string tie_str(TieRule t) { return t == TieRule::take_min ? "take_min" : "take_max"; }
std::string boundary_str(Boundary b) {
  return b == Boundary::conjunctive ? "conjunctive" : "disjunctive";
}

}  // namespace

Region region_of(double e, double x, double y) {
  if (x <= e && y <= e) return Region::lower_square;
  if (x >= e && y >= e) return Region::upper_square;
  return Region::a_of_e;
}

Uninorm Uninorm::u_min(TNorm t, TConorm s, double e, const TolerancePolicy& pol) {
  require_interior_e(e);
  std::string name = "umin(" + t.name() + "," + s.name() + "," + fmt(e) + ")";
  return Uninorm(Kind::u_min, e, std::move(name), UMinMax{std::move(t), std::move(s), true}, pol);
}

Uninorm Uninorm::u_max(TNorm t, TConorm s, double e, const TolerancePolicy& pol) {
  require_interior_e(e);
  std::string name = "umax(" + t.name() + "," + s.name() + "," + fmt(e) + ")";
  return Uninorm(Kind::u_max, e, std::move(name), UMinMax{std::move(t), std::move(s), false}, pol);
}

Uninorm Uninorm::idempotent(MonotoneFunction g, double e, TieRule tie, const TolerancePolicy& pol) {
  require_interior_e(e);
  if (g.direction() != Direction::decreasing)
    throw ConstraintViolation("idempotent uninorm: g must be non-increasing");
  if (g.lo() != 0.0 || g.hi() != 1.0)
    throw ConstraintViolation("idempotent uninorm: g must be defined on all of [0,1]");
  if (!g.at_lo().is_finite() || !g.at_hi().is_finite() ||
      g.at_lo().value() > 1.0 + pol.eps_eq || g.at_hi().value() < -pol.eps_eq)
    throw ConstraintViolation("idempotent uninorm: g must map [0,1] into [0,1]");
  if (!g(e).is_finite() || std::abs(g(e).value() - e) > pol.eps_eq)
    throw ConstraintViolation("idempotent uninorm: g(e) = e is required");
  std::string name = "idem(" + (g.name().empty() ? std::string("g") : g.name()) + "," + fmt(e) +
                     "," + tie_str(tie) + ")";
  return Uninorm(Kind::idempotent, e, std::move(name), Idem{std::move(g), tie}, pol);
}

Uninorm Uninorm::representable(MonotoneFunction h, double e, Boundary boundary,
                               const TolerancePolicy& pol) {
  require_interior_e(e);
  if (h.direction() != Direction::increasing)
    throw ConstraintViolation("representable uninorm: h must be increasing");
  if (h.lo() != 0.0 || h.hi() != 1.0)
    throw ConstraintViolation("representable uninorm: h must be defined on all of [0,1]");
  if (!h.at_lo().is_neg_inf())
    throw ConstraintViolation("representable uninorm: h(0) = -inf is required");
  if (!h.at_hi().is_pos_inf())
    throw ConstraintViolation("representable uninorm: h(1) = +inf is required");
  if (!h(e).is_finite() || std::abs(h(e).value()) > pol.eps_eq)
    throw ConstraintViolation("representable uninorm: h(e) = 0 is required");
  if (h.clamp_rule() != ClampRule::nearest_end)
    throw ConstraintViolation("representable uninorm: h must clamp to the nearest endpoint");
  std::string name = "rep(" + (h.name().empty() ? std::string("h") : h.name()) + "," + fmt(e) +
                     "," + boundary_str(boundary) + ")";
  return Uninorm(Kind::representable, e, std::move(name), Rep{std::move(h), boundary}, pol);
}

Uninorm Uninorm::cos_min(TNorm t1, double lambda, TNorm t2, double u, Uninorm rep, double e,
                         CosMinCorner corner, const TolerancePolicy& pol) {
  require_interior_e(e);
  if (rep.kind() != Kind::representable)
    throw ConstraintViolation("cos-min uninorm: the inner block must be a representable uninorm");
  if (!(0.0 <= lambda && lambda <= u && u <= e))
    throw ConstraintViolation("cos-min uninorm: need 0 <= lambda <= u <= e");
  const double expected_e = u + (1.0 - u) * rep.e();
  if (std::abs(e - expected_e) > pol.eps_eq)
    throw ConstraintViolation("cos-min uninorm: e must equal u + (1-u)*e_R, got e=" + fmt(e) +
                              " but u + (1-u)*e_R = " + fmt(expected_e));
  std::string name = "cosmin(" + t1.name() + "," + fmt(lambda) + "," + t2.name() + "," + fmt(u) +
                     "," + rep.name() + "," + fmt(e) + ")";
  auto inner = std::make_shared<const Uninorm>(std::move(rep));
  return Uninorm(Kind::cos_min, e, std::move(name),
                 CosMin{std::move(t1), lambda, std::move(t2), u, std::move(inner), corner}, pol);
}

Uninorm Uninorm::cos_max(Uninorm rep, double e, double v, TConorm s1, double omega, TConorm s2,
                         CosMaxCorner corner, const TolerancePolicy& pol) {
  require_interior_e(e);
  if (rep.kind() != Kind::representable)
    throw ConstraintViolation("cos-max uninorm: the inner block must be a representable uninorm");
  if (!(e <= v && v <= omega && omega <= 1.0))
    throw ConstraintViolation("cos-max uninorm: need e <= v <= omega <= 1");
  const double expected_e = v * rep.e();
  if (std::abs(e - expected_e) > pol.eps_eq)
    throw ConstraintViolation("cos-max uninorm: e must equal v*e_R, got e=" + fmt(e) +
                              " but v*e_R = " + fmt(expected_e));
  std::string name = "cosmax(" + rep.name() + "," + fmt(e) + "," + fmt(v) + "," + s1.name() + "," +
                     fmt(omega) + "," + s2.name() + ")";
  auto inner = std::make_shared<const Uninorm>(std::move(rep));
  return Uninorm(Kind::cos_max, e, std::move(name),
                 CosMax{std::move(inner), v, std::move(s1), omega, std::move(s2), corner}, pol);
}

double Uninorm::operator()(double x, double y) const {
  switch (kind_) {
    case Kind::u_min:
    case Kind::u_max: {
      const auto& m = std::get<UMinMax>(impl_);
      if (x <= e_ && y <= e_) return e_ * m.t(x / e_, y / e_);
      if (x >= e_ && y >= e_)
        return e_ + (1.0 - e_) * m.s((x - e_) / (1.0 - e_), (y - e_) / (1.0 - e_));
      return m.is_min ? std::min(x, y) : std::max(x, y);
    }
    case Kind::idempotent: {
      const auto& d = std::get<Idem>(impl_);
      const double gx = std::clamp(d.g(x).value(), 0.0, 1.0);
      if (std::abs(y - gx) <= pol_.eps_eq) {
        const double ggx = std::clamp(d.g(gx).value(), 0.0, 1.0);
        if (x < ggx - pol_.eps_eq) return std::min(x, y);
        if (x > ggx + pol_.eps_eq) return std::max(x, y);
        return d.tie == TieRule::take_min ? std::min(x, y) : std::max(x, y);
      }
      return y < gx ? std::min(x, y) : std::max(x, y);
    }
    case Kind::representable: {
      const auto& r = std::get<Rep>(impl_);
      if ((x == 0.0 && y == 1.0) || (x == 1.0 && y == 0.0))
        return r.boundary == Boundary::conjunctive ? 0.0 : 1.0;
      try {
        return r.h.pseudo_inverse(r.h(x) + r.h(y), pol_);
      } catch (const UndefinedSum&) {
        throw InternalInvariantViolation(
            "representable uninorm: undefined generator sum away from the (0,1)/(1,0) corner "
            "indicates a malformed generator");
      }
    }
    case Kind::cos_min: {
      const auto& c = std::get<CosMin>(impl_);
      const double lam = c.lambda, u = c.u;
      if ((x == lam && y == 1.0) || (x == 1.0 && y == lam))
        return c.corner == CosMinCorner::take_lambda ? lam : 1.0;
      const double mn = std::min(x, y), mx = std::max(x, y);
      if (mn > lam && mx == 1.0) return 1.0;
      if (x <= lam && y <= lam) {
        if (lam == 0.0) return 0.0;  // block degenerates to the origin
        return lam * c.t1(x / lam, y / lam);
      }
      if (lam <= mn && mx <= u) {
        if (u == lam) return lam;
        return lam + (u - lam) * c.t2((x - lam) / (u - lam), (y - lam) / (u - lam));
      }
      if (u <= mn) return u + (1.0 - u) * (*c.rep)((x - u) / (1.0 - u), (y - u) / (1.0 - u));
      return mn;
    }
    case Kind::cos_max: {
      const auto& c = std::get<CosMax>(impl_);
      const double v = c.v, om = c.omega;
      if ((x == 0.0 && y == om) || (x == om && y == 0.0))
        return c.corner == CosMaxCorner::take_omega ? om : 0.0;
      const double mn = std::min(x, y), mx = std::max(x, y);
      if (mx < om && mn == 0.0) return 0.0;
      if (mx <= v) return v * (*c.rep)(x / v, y / v);
      if (v <= mn && mx <= om) {
        if (om == v) return v;
        return v + (om - v) * c.s1((x - v) / (om - v), (y - v) / (om - v));
      }
      if (om <= mn) {
        if (om == 1.0) return 1.0;  // block degenerates to (1,1)
        return om + (1.0 - om) * c.s2((x - om) / (1.0 - om), (y - om) / (1.0 - om));
      }
      return mx;
    }
  }
  throw InternalInvariantViolation("Uninorm: unknown variant");
}

const MonotoneFunction& Uninorm::generator() const {
  if (kind_ != Kind::representable) throw Error("Uninorm: generator() needs the representable variant");
  return std::get<Rep>(impl_).h;
}

Boundary Uninorm::rep_boundary() const {
  if (kind_ != Kind::representable)
    throw Error("Uninorm: rep_boundary() needs the representable variant");
  return std::get<Rep>(impl_).boundary;
}

BinaryOp Uninorm::as_binary_op() const {
  Uninorm copy = *this;
  return BinaryOp{name_, [copy](double x, double y) { return copy(x, y); }};
}

Boundary classify_boundary_value(double u_at_1_0, const TolerancePolicy& pol) {
  if (approx(u_at_1_0, 0.0, pol)) return Boundary::conjunctive;
  if (approx(u_at_1_0, 1.0, pol)) return Boundary::disjunctive;
  throw NotLocallyClassifiable("U(1,0) = " + fmt(u_at_1_0) + " is neither 0 nor 1");
}

Boundary classify_boundary(const Uninorm& u, const TolerancePolicy& pol) {
  return classify_boundary_value(u(1.0, 0.0), pol);
}

namespace {

using detail::Fn2;

void check_identity(const Fn2& op, double e, std::span<const double> grid,
                    const TolerancePolicy& pol, ConditionResult& out) {
  for (double x : grid) {
    const double l = op(x, e);
    if (!approx(l, x, pol)) {
      out.pass = false;
      out.witness = Witness{{x}, l, x, "U(x,e)"};
      return;
    }
    const double r = op(e, x);
    if (!approx(r, x, pol)) {
      out.pass = false;
      out.witness = Witness{{x}, r, x, "U(e,x)"};
      return;
    }
  }
}

void check_bounds_on_a(const Fn2& op, double e, std::span<const double> grid,
                       const TolerancePolicy& pol, ConditionResult& out) {
  for (double x : grid)
    for (double y : grid) {
      if (region_of(e, x, y) != Region::a_of_e) continue;
      const double v = op(x, y);
      const double mn = std::min(x, y), mx = std::max(x, y);
      if (!leq(mn, v, pol)) {
        out.pass = false;
        out.witness = Witness{{x, y}, v, mn, "U below min on A(e)"};
        return;
      }
      if (!leq(v, mx, pol)) {
        out.pass = false;
        out.witness = Witness{{x, y}, v, mx, "U above max on A(e)"};
        return;
      }
    }
}

}  // namespace

AxiomReport check_uninorm_axioms(const Fn2& op, double e, std::span<const double> grid,
                                 const TolerancePolicy& pol) {
  AxiomReport rep;
  detail::scan_commutativity(op, grid, pol, rep.add("commutativity"));
  detail::scan_associativity(op, grid, pol, rep.add("associativity"));
  detail::scan_monotonicity(op, grid, pol, rep.add("monotonicity"));
  check_identity(op, e, grid, pol, rep.add("identity"));
  check_bounds_on_a(op, e, grid, pol, rep.add("bounds-on-A"));
  return rep;
}

AxiomReport check_uninorm_axioms(const Uninorm& u, std::span<const double> grid,
                                 const TolerancePolicy& pol) {
  return check_uninorm_axioms([&u](double x, double y) { return u(x, y); }, u.e(), grid, pol);
}

}  // namespace fuzzalg
