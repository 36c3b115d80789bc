#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fuzzalg/errors.hpp"

namespace fuzzalg {

// Value in [-inf, +inf] with symbolic infinities. NaN is never stored; the
// sum (-inf) + (+inf) throws UndefinedSum instead of producing NaN.
class ExtendedReal {
 public:
  ExtendedReal() = default;
  ExtendedReal(double v);  // implicit on purpose; throws on NaN

  static ExtendedReal pos_inf() { return ExtendedReal(HUGE_VAL); }
  static ExtendedReal neg_inf() { return ExtendedReal(-HUGE_VAL); }

  bool is_finite() const { return std::isfinite(v_); }
  bool is_pos_inf() const { return std::isinf(v_) && v_ > 0; }
  bool is_neg_inf() const { return std::isinf(v_) && v_ < 0; }

  // Finite value; throws Error when infinite.
  double value() const;
  // Raw double including IEEE infinities.
  double as_double() const { return v_; }

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b);
  ExtendedReal operator-() const { return ExtendedReal(-v_); }

  friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }
  friend bool operator!=(ExtendedReal a, ExtendedReal b) { return a.v_ != b.v_; }
  friend bool operator<(ExtendedReal a, ExtendedReal b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtendedReal a, ExtendedReal b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtendedReal a, ExtendedReal b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtendedReal a, ExtendedReal b) { return a.v_ >= b.v_; }

 private:
  double v_ = 0.0;
};

// Shared comparison tolerances. eps_eq is for approximate equality, eps_leq
// for one-sided inequalities; bisection controls the numeric inverse.
struct TolerancePolicy {
  double eps_eq = 1e-9;
  double eps_leq = 1e-9;
  double bisect_tol = 1e-12;
  int bisect_max_iter = 200;

  void validate() const;  // throws ConstraintViolation on non-positive fields
};

// a == b within eps_eq.
bool approx(double a, double b, const TolerancePolicy& pol);
// a <= b + eps_leq.
bool leq(double a, double b, const TolerancePolicy& pol);
// Extended-value versions; infinities compare symbolically.
bool approx(ExtendedReal a, ExtendedReal b, const TolerancePolicy& pol);
bool leq(ExtendedReal a, ExtendedReal b, const TolerancePolicy& pol);

// n equally spaced points on [0,1] with exact 0 and 1 endpoints; n >= 2.
std::vector<double> uniform_grid(int n);

enum class Direction { increasing, decreasing };

// Where the pseudo-inverse lands when the queried value is outside the image
// of the domain. Additive t-norm generators clamp to the lower domain end,
// t-conorm generators to the upper end; uninorm generators use the endpoint
// whose image is nearest.
enum class ClampRule { lower_end, upper_end, nearest_end };

// Monotone map from a closed subinterval of [0,1] into [-inf,+inf] with an
// optional analytic inverse. Construction samples the evaluator on 101 points
// and throws MonotonicityViolation if the declared direction is violated.
class MonotoneFunction {
 public:
  MonotoneFunction(Direction dir, double lo, double hi,
                   std::function<ExtendedReal(double)> eval,
                   std::optional<std::function<double(double)>> inverse,
                   ClampRule clamp, const TolerancePolicy& pol,
                   std::string name = "");

  ExtendedReal operator()(double x) const { return eval_(x); }

  // f^{[-1]}(y): exact inverse on the image, clamped outside it per the rule.
  double pseudo_inverse(ExtendedReal y, const TolerancePolicy& pol) const;

  Direction direction() const { return dir_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  ExtendedReal at_lo() const { return at_lo_; }
  ExtendedReal at_hi() const { return at_hi_; }
  ClampRule clamp_rule() const { return clamp_; }
  const std::string& name() const { return name_; }

 private:
  double bisect(double y, const TolerancePolicy& pol) const;

  Direction dir_;
  double lo_, hi_;
  std::function<ExtendedReal(double)> eval_;
  std::optional<std::function<double(double)>> inverse_;
  ClampRule clamp_;
  ExtendedReal at_lo_, at_hi_;
  std::string name_;
};

}  // namespace fuzzalg
