#pragma once

#include <memory>
#include <variant>

#include "fuzzalg/connectives.hpp"
#include "fuzzalg/report.hpp"

namespace fuzzalg {

// U(1,0) = 0 makes a uninorm conjunctive, U(1,0) = 1 disjunctive.
enum class Boundary { conjunctive, disjunctive };

// Value picked on the idempotent variant's tie set {y = g(x), x = g(g(x))}.
enum class TieRule { take_min, take_max };

// Value at the (lambda,1)/(1,lambda) corner of the cos-min structure.
enum class CosMinCorner { take_lambda, take_one };

// Value at the (0,omega)/(omega,0) corner of the cos-max structure.
enum class CosMaxCorner { take_zero, take_omega };

// Position of (x,y) relative to the neutral element: the closed squares
// [0,e]^2 / [e,1]^2 or the mixed region A(e) where min <= U <= max.
enum class Region { lower_square, upper_square, a_of_e };

Region region_of(double e, double x, double y);

// Associative, commutative, non-decreasing binary operator on [0,1] with a
// neutral element e that may sit anywhere in (0,1). Six structural variants.
class Uninorm {
 public:
  enum class Kind { u_min, u_max, idempotent, representable, cos_min, cos_max };

  // T rescaled onto [0,e]^2, S onto [e,1]^2, min (resp. max) on A(e).
  static Uninorm u_min(TNorm t, TConorm s, double e, const TolerancePolicy& pol = {});
  static Uninorm u_max(TNorm t, TConorm s, double e, const TolerancePolicy& pol = {});

  // Symmetric-along-the-diagonal variant driven by a non-increasing
  // g:[0,1]->[0,1] with g(e)=e; min below the graph of g, max above it, the
  // tie rule on {y=g(x), x=g(g(x))}.
  static Uninorm idempotent(MonotoneFunction g, double e, TieRule tie = TieRule::take_min,
                            const TolerancePolicy& pol = {});

  // U(x,y) = h^{-1}(h(x)+h(y)) for an increasing h with h(0)=-inf, h(e)=0,
  // h(1)=+inf; the (0,1)/(1,0) corner is fixed by the boundary flag.
  static Uninorm representable(MonotoneFunction h, double e, Boundary boundary,
                               const TolerancePolicy& pol = {});

  // Continuous-in-(0,1)^2 conjunctive structure: t-norm blocks on [0,lambda]^2
  // and [lambda,u]^2, a representable block on [u,1]^2, the special values 1
  // (min > lambda, max = 1) and the corner rule at (lambda,1)/(1,lambda), min
  // elsewhere. Requires e = u + (1-u)*rep.e().
  static Uninorm cos_min(TNorm t1, double lambda, TNorm t2, double u, Uninorm rep, double e,
                         CosMinCorner corner = CosMinCorner::take_lambda,
                         const TolerancePolicy& pol = {});

  // Dual disjunctive structure: representable block on [0,v]^2, t-conorm
  // blocks on [v,omega]^2 and [omega,1]^2, the special values 0
  // (max < omega, min = 0) and the corner rule at (0,omega)/(omega,0), max
  // elsewhere. Requires e = v*rep.e().
  static Uninorm cos_max(Uninorm rep, double e, double v, TConorm s1, double omega, TConorm s2,
                         CosMaxCorner corner = CosMaxCorner::take_omega,
                         const TolerancePolicy& pol = {});

  double operator()(double x, double y) const;

  Kind kind() const { return kind_; }
  double e() const { return e_; }
  const std::string& name() const { return name_; }
  // Representable variant only; throws Error otherwise.
  const MonotoneFunction& generator() const;
  Boundary rep_boundary() const;
  BinaryOp as_binary_op() const;

 private:
  struct UMinMax {
    TNorm t;
    TConorm s;
    bool is_min;
  };
  struct Idem {
    MonotoneFunction g;
    TieRule tie;
  };
  struct Rep {
    MonotoneFunction h;
    Boundary boundary;
  };
  struct CosMin {
    TNorm t1;
    double lambda;
    TNorm t2;
    double u;
    std::shared_ptr<const Uninorm> rep;
    CosMinCorner corner;
  };
  struct CosMax {
    std::shared_ptr<const Uninorm> rep;
    double v;
    TConorm s1;
    double omega;
    TConorm s2;
    CosMaxCorner corner;
  };
  using Impl = std::variant<UMinMax, Idem, Rep, CosMin, CosMax>;

  Uninorm(Kind k, double e, std::string name, Impl impl, const TolerancePolicy& pol)
      : kind_(k), e_(e), name_(std::move(name)), impl_(std::move(impl)), pol_(pol) {}

  Kind kind_;
  double e_;
  std::string name_;
  Impl impl_;
  TolerancePolicy pol_;
};

// Maps U(1,0) ~ 0 to conjunctive and ~ 1 to disjunctive; anything else
// throws NotLocallyClassifiable.
Boundary classify_boundary_value(double u_at_1_0, const TolerancePolicy& pol = {});
Boundary classify_boundary(const Uninorm& u, const TolerancePolicy& pol = {});

// Verifies commutativity, associativity, monotonicity (both arguments),
// identity at e, and the min/max sandwich on A(e), exhaustively over the
// grid. Witnesses are the lexicographically smallest failing tuples.
AxiomReport check_uninorm_axioms(const std::function<double(double, double)>& op, double e,
                                 std::span<const double> grid, const TolerancePolicy& pol = {});
AxiomReport check_uninorm_axioms(const Uninorm& u, std::span<const double> grid,
                                 const TolerancePolicy& pol = {});

}  // namespace fuzzalg
