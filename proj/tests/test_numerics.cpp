#include "doctest.h"
#include "fuzzalg/generators.hpp"
#include "fuzzalg/numerics.hpp"

#include <cmath>

using namespace fuzzalg;

TEST_CASE("extended reals carry symbolic infinities") {
  ExtendedReal a(0.5);
  CHECK(a.is_finite());
  CHECK(a.value() == 0.5);

  ExtendedReal p = ExtendedReal::pos_inf();
  ExtendedReal n = ExtendedReal::neg_inf();
  CHECK(p.is_pos_inf());
  CHECK(n.is_neg_inf());
  CHECK_THROWS_AS(p.value(), Error);
  CHECK(p.as_double() > 0);

  CHECK((a + p).is_pos_inf());
  CHECK((a + n).is_neg_inf());
  CHECK((p + p).is_pos_inf());
  CHECK_THROWS_AS(p + n, UndefinedSum);
  CHECK_THROWS_AS(n + p, UndefinedSum);
  CHECK((-p).is_neg_inf());

  CHECK(n < a);
  CHECK(a < p);
  CHECK(n < p);
  CHECK_FALSE(p < p);

  CHECK_THROWS_AS(ExtendedReal(std::nan("")), Error);
}

TEST_CASE("tolerance policy validation") {
  TolerancePolicy pol;
  CHECK_NOTHROW(pol.validate());
  pol.eps_eq = 0.0;
  CHECK_THROWS_AS(pol.validate(), ConstraintViolation);
}

TEST_CASE("approx and leq respect the tolerances") {
  TolerancePolicy pol;
  CHECK(approx(0.3, 0.3 + 1e-10, pol));
  CHECK_FALSE(approx(0.3, 0.3 + 1e-8, pol));
  CHECK(leq(0.5, 0.5, pol));
  CHECK(leq(0.5 + 1e-10, 0.5, pol));
  CHECK_FALSE(leq(0.5 + 1e-8, 0.5, pol));

  CHECK(approx(ExtendedReal::pos_inf(), ExtendedReal::pos_inf(), pol));
  CHECK_FALSE(approx(ExtendedReal::pos_inf(), ExtendedReal(1.0), pol));
  CHECK(leq(ExtendedReal::neg_inf(), ExtendedReal(-1e9), pol));
  CHECK(leq(ExtendedReal(1e9), ExtendedReal::pos_inf(), pol));
  CHECK_FALSE(leq(ExtendedReal::pos_inf(), ExtendedReal(1e9), pol));
}

TEST_CASE("uniform grids hit the endpoints exactly") {
  CHECK_THROWS_AS(uniform_grid(1), InvalidGrid);
  auto g = uniform_grid(5);
  REQUIRE(g.size() == 5);
  CHECK(g[0] == 0.0);
  CHECK(g[1] == 0.25);
  CHECK(g[2] == 0.5);
  CHECK(g[3] == 0.75);
  CHECK(g[4] == 1.0);
  auto g2 = uniform_grid(101);
  CHECK(g2.front() == 0.0);
  CHECK(g2.back() == 1.0);
}

TEST_CASE("monotone function construction validates direction and domain") {
  TolerancePolicy pol;
  CHECK_THROWS_AS(MonotoneFunction(Direction::increasing, 0.0, 1.0,
                                   [](double x) { return ExtendedReal(1.0 - x); }, std::nullopt,
                                   ClampRule::lower_end, pol),
                  MonotonicityViolation);
  CHECK_THROWS_AS(MonotoneFunction(Direction::increasing, 0.5, 0.5,
                                   [](double x) { return ExtendedReal(x); }, std::nullopt,
                                   ClampRule::lower_end, pol),
                  ConstraintViolation);
  CHECK_THROWS_AS(MonotoneFunction(Direction::increasing, -0.1, 1.0,
                                   [](double x) { return ExtendedReal(x); }, std::nullopt,
                                   ClampRule::lower_end, pol),
                  ConstraintViolation);
}

TEST_CASE("complement generator inverts analytically and clamps low") {
  TolerancePolicy pol;
  auto f = complement_generator(pol);
  CHECK(f.direction() == Direction::decreasing);
  CHECK(f(0.25).value() == 0.75);
  CHECK(f.pseudo_inverse(ExtendedReal(0.3), pol) == doctest::Approx(0.7));
  // Sum beyond the image goes to the lower domain end.
  CHECK(f.pseudo_inverse(f(0.2) + f(0.3), pol) == 0.0);
  CHECK(f.pseudo_inverse(f(0.6) + f(0.7), pol) == doctest::Approx(0.3));
}

TEST_CASE("negative-log generator handles the infinite endpoint") {
  TolerancePolicy pol;
  auto f = neg_log_generator(pol);
  CHECK(f(0.0).is_pos_inf());
  CHECK(f(0.5).value() == doctest::Approx(0.6931471805599453));
  CHECK(f(1.0).value() == doctest::Approx(0.0));
  CHECK(f.pseudo_inverse(ExtendedReal::pos_inf(), pol) == 0.0);
  CHECK(f.pseudo_inverse(ExtendedReal(0.0), pol) == 1.0);
  CHECK(f.pseudo_inverse(f(0.25) + f(0.5), pol) == doctest::Approx(0.125));
}

TEST_CASE("logarithmic uninorm generator round-trips") {
  TolerancePolicy pol;
  auto h = log_uninorm_generator(pol);
  CHECK(h(0.0).is_neg_inf());
  CHECK(h(1.0).is_pos_inf());
  CHECK(h(0.5).value() == 0.0);
  CHECK(h(0.25).value() == doctest::Approx(-0.6931471805599453));
  CHECK(h(0.75).value() == doctest::Approx(0.6931471805599453));
  for (double x : {0.1, 0.3, 0.5, 0.7, 0.9})
    CHECK(h.pseudo_inverse(h(x), pol) == doctest::Approx(x).epsilon(1e-12));
  CHECK(h.pseudo_inverse(ExtendedReal::neg_inf(), pol) == 0.0);
  CHECK(h.pseudo_inverse(ExtendedReal::pos_inf(), pol) == 1.0);
  // Frozen: h(1/4)+h(1/4) = ln(1/4), inverse e^{ln(1/4)}/2 = 1/8.
  CHECK(h.pseudo_inverse(h(0.25) + h(0.25), pol) == doctest::Approx(0.125));
  CHECK(h.pseudo_inverse(h(0.75) + h(0.75), pol) == doctest::Approx(0.875));
}

TEST_CASE("rational uninorm generator stays +inf at 1") {
  TolerancePolicy pol;
  auto h = rational_uninorm_generator(pol);
  CHECK(h(0.0).is_neg_inf());
  CHECK(h(1.0).is_pos_inf());  // would be -inf if evaluated via 1/(x-1) at signed zero
  CHECK(h(0.5).value() == 0.0);
  CHECK(h(0.25).value() == doctest::Approx(-1.0));
  CHECK(h(0.75).value() == doctest::Approx(1.0));
  for (double x : {0.05, 0.25, 0.5, 0.75, 0.95})
    CHECK(h.pseudo_inverse(h(x), pol) == doctest::Approx(x).epsilon(1e-12));
  CHECK(h.pseudo_inverse(ExtendedReal(-2.0), pol) == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("bisection serves evaluators without an analytic inverse") {
  TolerancePolicy pol;
  MonotoneFunction cube(Direction::increasing, 0.0, 1.0,
                        [](double x) { return ExtendedReal(x * x * x); }, std::nullopt,
                        ClampRule::nearest_end, pol, "cube");
  CHECK(cube.pseudo_inverse(ExtendedReal(0.125), pol) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(cube.pseudo_inverse(ExtendedReal(2.0), pol) == 1.0);   // above the image
  CHECK(cube.pseudo_inverse(ExtendedReal(-1.0), pol) == 0.0);  // below the image

  // Infinite endpoints force the symbolic branch inside the bisection.
  MonotoneFunction h(Direction::increasing, 0.0, 1.0,
                     [](double x) {
                       if (x < 0.5) return ExtendedReal(std::log(2.0 * x));
                       return ExtendedReal(-std::log(2.0 - 2.0 * x));
                     },
                     std::nullopt, ClampRule::nearest_end, pol, "h-no-inverse");
  CHECK(h.pseudo_inverse(ExtendedReal(0.0), pol) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(h.pseudo_inverse(ExtendedReal(-0.6931471805599453), pol) == doctest::Approx(0.25).epsilon(1e-9));
}
