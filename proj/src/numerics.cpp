#include "fuzzalg/numerics.hpp"

#include <algorithm>
#include <utility>

namespace fuzzalg {

ExtendedReal::ExtendedReal(double v) : v_(v) {
  if (std::isnan(v)) throw Error("ExtendedReal: NaN is not a value");
}

double ExtendedReal::value() const {
  if (!is_finite()) throw Error("ExtendedReal: infinite value where a finite one is required");
  return v_;
}

ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
    throw UndefinedSum("(-inf) + (+inf) is undefined");
  return ExtendedReal(a.v_ + b.v_);
}

void TolerancePolicy::validate() const {
  if (!(eps_eq > 0) || !(eps_leq > 0) || !(bisect_tol > 0) || bisect_max_iter <= 0)
    throw ConstraintViolation("TolerancePolicy: all tolerances must be strictly positive");
}

bool approx(double a, double b, const TolerancePolicy& pol) {
  return std::abs(a - b) <= pol.eps_eq;
}

bool leq(double a, double b, const TolerancePolicy& pol) {
  return a <= b + pol.eps_leq;
}

bool approx(ExtendedReal a, ExtendedReal b, const TolerancePolicy& pol) {
  if (a.is_finite() && b.is_finite()) return approx(a.value(), b.value(), pol);
  return a == b;
}

bool leq(ExtendedReal a, ExtendedReal b, const TolerancePolicy& pol) {
  if (a.is_neg_inf() || b.is_pos_inf()) return true;
  if (a.is_pos_inf()) return false;  // b is finite or -inf here
  if (b.is_neg_inf()) return false;
  return leq(a.value(), b.value(), pol);
}

std::vector<double> uniform_grid(int n) {
  if (n < 2) throw InvalidGrid("uniform_grid: need at least 2 points, got " + std::to_string(n));
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
  g.front() = 0.0;
  g.back() = 1.0;
  return g;
}

MonotoneFunction::MonotoneFunction(Direction dir, double lo, double hi,
                                   std::function<ExtendedReal(double)> eval,
                                   std::optional<std::function<double(double)>> inverse,
                                   ClampRule clamp, const TolerancePolicy& pol,
                                   std::string name)
    : dir_(dir),
      lo_(lo),
      hi_(hi),
      eval_(std::move(eval)),
      inverse_(std::move(inverse)),
      clamp_(clamp),
      at_lo_(0.0),
      at_hi_(0.0),
      name_(std::move(name)) {
  if (!(lo_ < hi_) || lo_ < 0.0 || hi_ > 1.0)
    throw ConstraintViolation("MonotoneFunction: domain must be a proper subinterval of [0,1]");
  at_lo_ = eval_(lo_);
  at_hi_ = eval_(hi_);

  // Sampled direction check on 101 points.
  const int kSamples = 101;
  ExtendedReal prev = at_lo_;
  for (int i = 1; i < kSamples; ++i) {
    double x = lo_ + (hi_ - lo_) * static_cast<double>(i) / (kSamples - 1);
    if (i == kSamples - 1) x = hi_;
    ExtendedReal cur = eval_(x);
    bool ok;
    if (prev.is_finite() && cur.is_finite()) {
      ok = dir_ == Direction::increasing ? cur.value() >= prev.value() - pol.eps_eq
                                         : cur.value() <= prev.value() + pol.eps_eq;
    } else {
      ok = dir_ == Direction::increasing ? prev <= cur : cur <= prev;
    }
    if (!ok)
      throw MonotonicityViolation("MonotoneFunction '" + name_ + "': sampled values violate the declared " +
                                  (dir_ == Direction::increasing ? std::string("increasing") : std::string("decreasing")) +
                                  " direction near x=" + std::to_string(x));
    prev = cur;
  }
}

double MonotoneFunction::pseudo_inverse(ExtendedReal y, const TolerancePolicy& pol) const {
  const bool inc = dir_ == Direction::increasing;
  const ExtendedReal img_lo = inc ? at_lo_ : at_hi_;  // smallest image value
  const ExtendedReal img_hi = inc ? at_hi_ : at_lo_;  // largest image value

  if (y < img_lo || y > img_hi) {
    switch (clamp_) {
      case ClampRule::lower_end:
        return lo_;
      case ClampRule::upper_end:
        return hi_;
      case ClampRule::nearest_end: {
        // Endpoint whose image is on the exceeded side.
        const bool high = y > img_hi;
        if (inc) return high ? hi_ : lo_;
        return high ? lo_ : hi_;
      }
    }
  }

  // In range. Infinite queries can only match an infinite endpoint image.
  if (!y.is_finite()) {
    if (y == at_lo_) return lo_;
    if (y == at_hi_) return hi_;
    throw InternalInvariantViolation("pseudo_inverse: infinite query inside a finite image");
  }

  const double yd = y.value();
  if (inverse_) {
    double x = (*inverse_)(yd);
    return std::clamp(x, lo_, hi_);
  }
  return bisect(yd, pol);
}

double MonotoneFunction::bisect(double y, const TolerancePolicy& pol) const {
  const bool inc = dir_ == Direction::increasing;
  ExtendedReal flo = at_lo_;
  ExtendedReal fhi = at_hi_;
  // Orientation of the bracket must match the declared direction.
  if ((inc && flo > fhi) || (!inc && flo < fhi))
    throw MonotonicityViolation("MonotoneFunction '" + name_ + "': bracket endpoints contradict the declared direction");

  double a = lo_, b = hi_;
  for (int i = 0; i < pol.bisect_max_iter && (b - a) > pol.bisect_tol; ++i) {
    const double m = 0.5 * (a + b);
    const ExtendedReal fm = eval_(m);
    bool go_right;
    if (!fm.is_finite()) {
      go_right = inc ? fm.is_neg_inf() : fm.is_pos_inf();
    } else {
      go_right = inc ? fm.value() < y : fm.value() > y;
    }
    if (go_right)
      a = m;
    else
      b = m;
  }
  return 0.5 * (a + b);
}

}  // namespace fuzzalg
