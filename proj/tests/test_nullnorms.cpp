#include "doctest.h"
#include "fuzzalg/nullnorms.hpp"

using namespace fuzzalg;

namespace {
const TolerancePolicy kPol;

void require_all_pass(const AxiomReport& r) {
  for (const auto& cond : r.conditions) {
    INFO(cond.name << (cond.witness ? " @ " + cond.witness->str() : std::string()));
    CHECK(cond.pass);
  }
}
}  // namespace

TEST_CASE("nullnorm block structure, frozen values") {
  Nullnorm f(TConorm::lukasiewicz(), 0.5, TNorm::lukasiewicz(), kPol);
  CHECK(f(0.25, 0.25) == 0.5);  // 0.5*S_L(0.5,0.5)
  CHECK(f(0.75, 0.75) == 0.5);  // 0.5+0.5*T_L(0.5,0.5)
  CHECK(f(0.25, 0.75) == 0.5);
  CHECK(f(0.75, 1.0) == 0.75);
  CHECK(f(1.0, 1.0) == 1.0);
  CHECK(f(0.0, 0.25) == 0.25);
  CHECK(f(0.0, 1.0) == 0.5);  // k recovered at the opposite corners
  CHECK(f.k() == 0.5);
  CHECK(f.name() == "nullnorm(lukasiewicz,0.5,lukasiewicz)");

  for (double x : uniform_grid(11)) {
    CHECK(f(0.5, x) == 0.5);
    CHECK(f(x, 0.5) == 0.5);
  }
  for (double x : {0.0, 0.1, 0.3, 0.5}) CHECK(f(0.0, x) == doctest::Approx(x));
  for (double x : {0.5, 0.7, 0.9, 1.0}) CHECK(f(1.0, x) == doctest::Approx(x));
}

TEST_CASE("nullnorm axioms pass exhaustively across the built-in families") {
  auto grid = uniform_grid(21);
  const TNorm ts[] = {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz(), TNorm::drastic()};
  const TConorm ss[] = {TConorm::maximum(), TConorm::probabilistic_sum(), TConorm::lukasiewicz(),
                        TConorm::drastic()};
  for (const auto& s : ss)
    for (const auto& t : ts)
      for (double k : {0.25, 0.5, 0.75}) {
        Nullnorm f(s, k, t, kPol);
        INFO(f.name());
        auto rep = check_nullnorm_axioms(f, grid, kPol);
        require_all_pass(rep);
        CHECK(approx(f(0.0, 1.0), k, kPol));
      }
}

TEST_CASE("degenerate absorbing elements collapse to one block") {
  Nullnorm t_only(TConorm::lukasiewicz(), 0.0, TNorm::lukasiewicz(), kPol);
  Nullnorm s_only(TConorm::lukasiewicz(), 1.0, TNorm::lukasiewicz(), kPol);
  auto tl = TNorm::lukasiewicz();
  auto sl = TConorm::lukasiewicz();
  for (double x : uniform_grid(11))
    for (double y : uniform_grid(11)) {
      CHECK(t_only(x, y) == tl(x, y));
      CHECK(s_only(x, y) == sl(x, y));
    }
}

TEST_CASE("nullnorm constructor rejects k outside the unit interval") {
  CHECK_THROWS_AS(Nullnorm(TConorm::lukasiewicz(), 1.5, TNorm::lukasiewicz(), kPol),
                  ConstraintViolation);
  CHECK_THROWS_AS(Nullnorm(TConorm::lukasiewicz(), -0.1, TNorm::lukasiewicz(), kPol),
                  ConstraintViolation);
}

TEST_CASE("constant map fails the boundary identity with witness (0,0)") {
  auto constant_half = [](double, double) { return 0.5; };
  auto rep = check_nullnorm_axioms(constant_half, 0.5, uniform_grid(21), kPol);
  const auto* lower = rep.find("lower-identity");
  REQUIRE(lower != nullptr);
  CHECK_FALSE(lower->pass);
  REQUIRE(lower->witness.has_value());
  CHECK(lower->witness->point == std::vector<double>{0.0, 0.0});
  CHECK(lower->witness->lhs == 0.5);
  const auto* absorbing = rep.find("absorbing");
  REQUIRE(absorbing != nullptr);
  CHECK(absorbing->pass);
}
