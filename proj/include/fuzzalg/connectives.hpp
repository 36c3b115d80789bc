#pragma once

#include <span>
#include <vector>

#include "fuzzalg/binary_op.hpp"
#include "fuzzalg/numerics.hpp"

namespace fuzzalg {

// Triangular norm: commutative, associative, non-decreasing, identity 1.
// The four classical families are closed-form; arbitrary continuous
// Archimedean t-norms come from a decreasing additive generator f with
// f(1)=0 via T(x,y) = f^{[-1]}(f(x)+f(y)).
class TNorm {
 public:
  enum class Kind { minimum, product, lukasiewicz, drastic, generator };

  static TNorm minimum();
  static TNorm product();
  static TNorm lukasiewicz();
  static TNorm drastic();
  // Requires f decreasing on [0,1] with f(1)=0; throws ConstraintViolation.
  static TNorm from_generator(MonotoneFunction f, const TolerancePolicy& pol = {});

  double operator()(double x, double y) const;
  Kind kind() const { return kind_; }
  bool continuous() const { return kind_ != Kind::drastic; }
  const std::string& name() const { return name_; }
  const MonotoneFunction& generator() const;
  BinaryOp as_binary_op() const;

 private:
  TNorm(Kind k, std::string name) : kind_(k), name_(std::move(name)) {}
  Kind kind_;
  std::string name_;
  std::optional<MonotoneFunction> gen_;
  TolerancePolicy pol_;
};

// Triangular conorm: commutative, associative, non-decreasing, identity 0.
// Generator-built variants use an increasing g with g(0)=0 and
// S(x,y) = g^{[-1]}(g(x)+g(y)).
class TConorm {
 public:
  enum class Kind { maximum, probabilistic_sum, lukasiewicz, drastic, generator };

  static TConorm maximum();
  static TConorm probabilistic_sum();
  static TConorm lukasiewicz();
  static TConorm drastic();
  static TConorm from_generator(MonotoneFunction g, const TolerancePolicy& pol = {});

  double operator()(double x, double y) const;
  Kind kind() const { return kind_; }
  bool continuous() const { return kind_ != Kind::drastic; }
  const std::string& name() const { return name_; }
  const MonotoneFunction& generator() const;
  BinaryOp as_binary_op() const;

 private:
  TConorm(Kind k, std::string name) : kind_(k), name_(std::move(name)) {}
  Kind kind_;
  std::string name_;
  std::optional<MonotoneFunction> gen_;
  TolerancePolicy pol_;
};

// Grid points x with |op(x,x) - x| <= eps_eq.
std::vector<double> idempotents(const std::function<double(double, double)>& op,
                                std::span<const double> grid, const TolerancePolicy& pol);
std::vector<double> idempotents(const TNorm& t, std::span<const double> grid, const TolerancePolicy& pol);
std::vector<double> idempotents(const TConorm& s, std::span<const double> grid, const TolerancePolicy& pol);

// True iff the only idempotent grid points are 0 and 1. Only meaningful for
// continuous operators; throws NotContinuous for the drastic family.
bool is_archimedean_on_grid(const TNorm& t, std::span<const double> grid, const TolerancePolicy& pol);
bool is_archimedean_on_grid(const TConorm& s, std::span<const double> grid, const TolerancePolicy& pol);

}  // namespace fuzzalg
