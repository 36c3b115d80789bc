#include "fuzzalg/generators.hpp"

#include <cmath>

namespace fuzzalg {

MonotoneFunction complement_generator(const TolerancePolicy& pol) {
  return MonotoneFunction(
      Direction::decreasing, 0.0, 1.0,
      [](double x) { return ExtendedReal(1.0 - x); },
      [](double y) { return 1.0 - y; },
      ClampRule::lower_end, pol, "complement");
}

MonotoneFunction identity_generator(const TolerancePolicy& pol) {
  return MonotoneFunction(
      Direction::increasing, 0.0, 1.0,
      [](double x) { return ExtendedReal(x); },
      [](double y) { return y; },
      ClampRule::upper_end, pol, "identity");
}

MonotoneFunction neg_log_generator(const TolerancePolicy& pol) {
  return MonotoneFunction(
      Direction::decreasing, 0.0, 1.0,
      [](double x) { return ExtendedReal(-std::log(x)); },
      [](double y) { return std::exp(-y); },
      ClampRule::lower_end, pol, "neglog");
}

MonotoneFunction log_uninorm_generator(const TolerancePolicy& pol) {
  return MonotoneFunction(
      Direction::increasing, 0.0, 1.0,
      [](double x) {
        if (x < 0.5) return ExtendedReal(std::log(2.0 * x));
        return ExtendedReal(-std::log(2.0 - 2.0 * x));
      },
      [](double y) {
        if (y < 0.0) return std::exp(y) / 2.0;
        return 1.0 - std::exp(-y) / 2.0;
      },
      ClampRule::nearest_end, pol, "log-uninorm");
}

MonotoneFunction rational_uninorm_generator(const TolerancePolicy& pol) {
  return MonotoneFunction(
      Direction::increasing, 0.0, 1.0,
      [](double x) {
        // 1/(2(1-x)) - 1 equals -1/(2(x-1)) - 1 but stays +inf at x = 1,
        // where the latter form hits IEEE signed zero and flips sign.
        if (x <= 0.5) return ExtendedReal(1.0 - 1.0 / (2.0 * x));
        return ExtendedReal(1.0 / (2.0 * (1.0 - x)) - 1.0);
      },
      [](double y) {
        if (y <= 0.0) return 1.0 / (2.0 * (1.0 - y));
        return 1.0 - 1.0 / (2.0 * (y + 1.0));
      },
      ClampRule::nearest_end, pol, "rational-uninorm");
}

}  // namespace fuzzalg
