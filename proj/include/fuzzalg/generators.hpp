#pragma once

#include "fuzzalg/numerics.hpp"

namespace fuzzalg {

// f(x) = 1 - x. Decreasing, f(1) = 0; additive generator of the Lukasiewicz
// t-norm (and, read as g(x) = x's mirror, of its conorm).
MonotoneFunction complement_generator(const TolerancePolicy& pol = {});

// g(x) = x. Increasing, g(0) = 0; additive generator of the Lukasiewicz
// t-conorm.
MonotoneFunction identity_generator(const TolerancePolicy& pol = {});

// f(x) = -ln x with f(0) = +inf. Decreasing, f(1) = 0; additive generator of
// the product t-norm.
MonotoneFunction neg_log_generator(const TolerancePolicy& pol = {});

// h(x) = ln(2x) on [0,1/2), -ln(2-2x) on [1/2,1]. Increasing with
// h(0) = -inf, h(1/2) = 0, h(1) = +inf; generator of a representable uninorm
// with neutral element 1/2.
MonotoneFunction log_uninorm_generator(const TolerancePolicy& pol = {});

// h(x) = 1 - 1/(2x) on [0,1/2], 1/(2(1-x)) - 1 on (1/2,1]. Same endpoint
// behaviour as the logarithmic one but rational in between.
MonotoneFunction rational_uninorm_generator(const TolerancePolicy& pol = {});

}  // namespace fuzzalg
