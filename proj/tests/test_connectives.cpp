#include "doctest.h"
#include "fuzzalg/connectives.hpp"
#include "fuzzalg/generators.hpp"

using namespace fuzzalg;

namespace {
const TolerancePolicy kPol;
}

TEST_CASE("classical t-norms: frozen values and boundary behaviour") {
  auto tm = TNorm::minimum();
  auto tp = TNorm::product();
  auto tl = TNorm::lukasiewicz();
  auto td = TNorm::drastic();

  CHECK(tm(0.3, 0.7) == 0.3);
  CHECK(tp(0.3, 0.7) == doctest::Approx(0.21));
  CHECK(tl(0.3, 0.7) == 0.0);
  CHECK(tl(0.6, 0.7) == doctest::Approx(0.3));
  CHECK(td(0.3, 0.7) == 0.0);
  CHECK(td(1.0, 0.7) == 0.7);
  CHECK(td(0.7, 1.0) == 0.7);
  CHECK(td(0.999999, 0.999999) == 0.0);

  for (double x : uniform_grid(11)) {
    CHECK(tm(x, 1.0) == x);
    CHECK(tp(x, 1.0) == x);
    CHECK(tl(x, 1.0) == doctest::Approx(x));
    CHECK(td(x, 1.0) == x);
    CHECK(td(1.0, x) == x);
  }

  CHECK(tm.continuous());
  CHECK_FALSE(td.continuous());
  CHECK(tm.name() == "min");
  CHECK(td.name() == "drastic");
}

TEST_CASE("classical t-conorms: frozen values and boundary behaviour") {
  auto sm = TConorm::maximum();
  auto sp = TConorm::probabilistic_sum();
  auto sl = TConorm::lukasiewicz();
  auto sd = TConorm::drastic();

  CHECK(sm(0.3, 0.7) == 0.7);
  CHECK(sp(0.3, 0.7) == doctest::Approx(0.79));
  CHECK(sl(0.3, 0.7) == 1.0);
  CHECK(sl(0.2, 0.3) == 0.5);
  CHECK(sd(0.3, 0.7) == 1.0);
  CHECK(sd(0.0, 0.7) == 0.7);
  CHECK(sd(0.7, 0.0) == 0.7);

  for (double x : uniform_grid(11)) {
    CHECK(sm(x, 0.0) == x);
    CHECK(sp(x, 0.0) == x);
    CHECK(sl(x, 0.0) == x);
    CHECK(sd(x, 0.0) == x);
  }
}

TEST_CASE("pointwise order chains hold on a grid") {
  auto tm = TNorm::minimum();
  auto tp = TNorm::product();
  auto tl = TNorm::lukasiewicz();
  auto td = TNorm::drastic();
  auto sm = TConorm::maximum();
  auto sp = TConorm::probabilistic_sum();
  auto sl = TConorm::lukasiewicz();
  auto sd = TConorm::drastic();

  auto grid = uniform_grid(21);
  for (double x : grid)
    for (double y : grid) {
      CHECK(td(x, y) <= tl(x, y) + 1e-12);
      CHECK(tl(x, y) <= tp(x, y) + 1e-12);
      CHECK(tp(x, y) <= tm(x, y) + 1e-12);
      CHECK(sm(x, y) <= sp(x, y) + 1e-12);
      CHECK(sp(x, y) <= sl(x, y) + 1e-12);
      CHECK(sl(x, y) <= sd(x, y) + 1e-12);
    }
}

TEST_CASE("generator-built operators reproduce their closed forms") {
  auto tl_gen = TNorm::from_generator(complement_generator(kPol), kPol);
  auto tp_gen = TNorm::from_generator(neg_log_generator(kPol), kPol);
  auto sl_gen = TConorm::from_generator(identity_generator(kPol), kPol);
  auto tl = TNorm::lukasiewicz();
  auto tp = TNorm::product();
  auto sl = TConorm::lukasiewicz();

  auto grid = uniform_grid(21);
  for (double x : grid)
    for (double y : grid) {
      CHECK(tl_gen(x, y) == doctest::Approx(tl(x, y)).epsilon(1e-9));
      CHECK(tp_gen(x, y) == doctest::Approx(tp(x, y)).epsilon(1e-9));
      CHECK(sl_gen(x, y) == doctest::Approx(sl(x, y)).epsilon(1e-9));
    }

  // Associativity spot checks through the generator path.
  for (auto [a, b, c] : {std::tuple{0.2, 0.5, 0.9}, {0.35, 0.35, 0.35}, {0.1, 0.85, 0.6}}) {
    CHECK(tp_gen(tp_gen(a, b), c) == doctest::Approx(tp_gen(a, tp_gen(b, c))).epsilon(1e-9));
    CHECK(tl_gen(tl_gen(a, b), c) == doctest::Approx(tl_gen(a, tl_gen(b, c))).epsilon(1e-9));
  }
}

TEST_CASE("generator admission rules are enforced") {
  CHECK_THROWS_AS(TNorm::from_generator(identity_generator(kPol), kPol), ConstraintViolation);
  CHECK_THROWS_AS(TConorm::from_generator(complement_generator(kPol), kPol), ConstraintViolation);

  // Decreasing but f(1) != 0.
  MonotoneFunction shifted(Direction::decreasing, 0.0, 1.0,
                           [](double x) { return ExtendedReal(2.0 - x); }, std::nullopt,
                           ClampRule::lower_end, kPol, "shifted");
  CHECK_THROWS_AS(TNorm::from_generator(shifted, kPol), ConstraintViolation);

  // Right shape, wrong clamp rule.
  MonotoneFunction wrong_clamp(Direction::decreasing, 0.0, 1.0,
                               [](double x) { return ExtendedReal(1.0 - x); }, std::nullopt,
                               ClampRule::upper_end, kPol, "wrong-clamp");
  CHECK_THROWS_AS(TNorm::from_generator(wrong_clamp, kPol), ConstraintViolation);

  CHECK_THROWS_AS(TNorm::minimum().generator(), Error);
}

TEST_CASE("idempotents and grid archimedean test") {
  auto grid = uniform_grid(11);
  CHECK(idempotents(TNorm::minimum(), grid, kPol).size() == 11);
  CHECK(idempotents(TNorm::product(), grid, kPol) == std::vector<double>{0.0, 1.0});
  CHECK(idempotents(TNorm::lukasiewicz(), grid, kPol) == std::vector<double>{0.0, 1.0});
  CHECK(idempotents(TConorm::maximum(), grid, kPol).size() == 11);
  CHECK(idempotents(TConorm::probabilistic_sum(), grid, kPol) == std::vector<double>{0.0, 1.0});

  CHECK(is_archimedean_on_grid(TNorm::product(), grid, kPol));
  CHECK(is_archimedean_on_grid(TNorm::lukasiewicz(), grid, kPol));
  CHECK_FALSE(is_archimedean_on_grid(TNorm::minimum(), grid, kPol));
  CHECK(is_archimedean_on_grid(TConorm::lukasiewicz(), grid, kPol));
  CHECK_FALSE(is_archimedean_on_grid(TConorm::maximum(), grid, kPol));
  CHECK_THROWS_AS(is_archimedean_on_grid(TNorm::drastic(), grid, kPol), NotContinuous);
  CHECK_THROWS_AS(is_archimedean_on_grid(TConorm::drastic(), grid, kPol), NotContinuous);
}

TEST_CASE("binary-op wrappers keep name and semantics") {
  auto op = TNorm::product().as_binary_op();
  CHECK(op.name == "product");
  CHECK(op(0.5, 0.5) == 0.25);
  auto sop = TConorm::maximum().as_binary_op();
  CHECK(sop.name == "max");
  CHECK(sop(0.2, 0.9) == 0.9);
}
