#include "doctest.h"
#include "fuzzalg/algebra.hpp"
#include "fuzzalg/connectives.hpp"
#include "fuzzalg/nullnorms.hpp"
#include "fuzzalg/uninorms.hpp"

using namespace fuzzalg;

namespace {
const TolerancePolicy kPol;
}

TEST_CASE("carriers: construction, indexing, description") {
  auto g = Carrier::grid(21);
  CHECK(g.size() == 21);
  CHECK(g.is_grid());
  CHECK(g.describe() == "grid(21)");
  CHECK(g.index_of(0.35, kPol) == 7);
  CHECK(g.index_of(0.35 + 1e-12, kPol) == 7);
  CHECK_FALSE(g.index_of(0.33, kPol).has_value());
  CHECK_FALSE(g.index_of(1.2, kPol).has_value());

  auto f = Carrier::finite({0.0, 0.3, 1.0}, {"lo", "mid", "hi"}, kPol);
  CHECK_FALSE(f.is_grid());
  CHECK(f.label(1) == "mid");
  CHECK(f.describe() == "{lo,mid,hi}");
  CHECK(f.index_of(0.3, kPol) == 1);
  CHECK_FALSE(f.index_of(0.5, kPol).has_value());

  CHECK_THROWS_AS(Carrier::finite({0.1, 0.1}, {}, kPol), ConstraintViolation);
  CHECK_THROWS_AS(Carrier::finite({}, {}, kPol), ConstraintViolation);
  CHECK_THROWS_AS(Carrier::finite({0.1, 0.2}, {"one"}, kPol), ConstraintViolation);
  CHECK_THROWS_AS(Carrier::grid(1), InvalidGrid);
}

TEST_CASE("discrete carriers enumerate the anchored ladder") {
  auto c = discrete_carrier(0.5, 2, 2);
  REQUIRE(c.size() == 5);
  CHECK(c.value(0) == 0.0);
  CHECK(c.value(1) == 0.25);
  CHECK(c.value(2) == 0.5);
  CHECK(c.value(3) == 0.75);
  CHECK(c.value(4) == 1.0);

  auto c2 = discrete_carrier(0.5, 1, 1);
  REQUIRE(c2.size() == 3);
  CHECK(c2.value(0) == 0.0);
  CHECK(c2.value(1) == 0.5);
  CHECK(c2.value(2) == 1.0);

  auto c3 = discrete_carrier(0.4, 2, 3);
  REQUIRE(c3.size() == 6);
  CHECK(c3.value(0) == 0.0);
  CHECK(c3.value(1) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(c3.value(2) == 0.4);  // anchor is exact
  CHECK(c3.value(3) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(c3.value(4) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(c3.value(5) == 1.0);  // top is exact

  for (std::size_t i = 0; i + 1 < c3.size(); ++i) CHECK(c3.value(i) < c3.value(i + 1));

  CHECK_THROWS_AS(discrete_carrier(0.0, 2, 2), ConstraintViolation);
  CHECK_THROWS_AS(discrete_carrier(0.5, 0, 2), ConstraintViolation);
}

TEST_CASE("grid monoids validate closure at construction") {
  auto tl = Monoid::from_op(Carrier::grid(21), TNorm::lukasiewicz().as_binary_op(), 1.0, kPol);
  CHECK(tl.identity_value() == 1.0);
  CHECK(tl.op_value(0.6, 0.7) == doctest::Approx(0.3));
  CHECK(check_monoid(tl).pass());

  CHECK_NOTHROW(Monoid::from_op(Carrier::grid(21), TNorm::minimum().as_binary_op(), 1.0, kPol));
  CHECK_NOTHROW(Monoid::from_op(Carrier::grid(21), TConorm::lukasiewicz().as_binary_op(), 0.0, kPol));
  CHECK_NOTHROW(Monoid::from_op(Carrier::grid(21), TConorm::maximum().as_binary_op(), 0.0, kPol));

  // The product t-norm leaves uniform grids: 0.3*0.3 = 0.09 is off-grid.
  CHECK_THROWS_AS(Monoid::from_op(Carrier::grid(11), TNorm::product().as_binary_op(), 1.0, kPol),
                  ConstraintViolation);
  auto rep = check_monoid(Carrier::grid(11), TNorm::product().as_binary_op(), 1.0, kPol);
  const auto* closure = rep.find("closure");
  REQUIRE(closure != nullptr);
  CHECK_FALSE(closure->pass);
  CHECK(rep.find("identity")->pass);
  CHECK(rep.find("associativity")->pass);  // raw-value fallback
}

TEST_CASE("finite monoids from value ops") {
  auto c = Carrier::finite({0, 1, 2, 3, 4, 5}, {}, kPol);
  auto mx = Monoid::from_op(c, BinaryOp{"max", [](double a, double b) { return std::max(a, b); }},
                            0.0, kPol);
  CHECK(mx.op_value(2, 4) == 4);
  CHECK(check_monoid(mx).pass());

  auto mn = Monoid::from_op(c, BinaryOp{"min", [](double a, double b) { return std::min(a, b); }},
                            5.0, kPol);
  CHECK(mn.op_value(2, 4) == 2);

  auto add5 = Monoid::from_op(
      c, BinaryOp{"addcap5", [](double a, double b) { return std::min(a + b, 5.0); }}, 0.0, kPol);
  CHECK(add5.op_value(3, 4) == 5);
  CHECK(add5.op_value(1, 3) == 4);
}

TEST_CASE("table monoids reject broken associativity with a witness triple") {
  auto c = Carrier::finite({0, 1, 2}, {}, kPol);
  // op(i,j) = |i-j| has identity 0 but is not associative.
  std::vector<std::vector<std::size_t>> t{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
  auto rep = check_monoid(c, t, 0, kPol);
  CHECK(rep.find("identity")->pass);
  const auto* assoc = rep.find("associativity");
  REQUIRE(assoc != nullptr);
  CHECK_FALSE(assoc->pass);
  REQUIRE(assoc->witness.has_value());
  CHECK(assoc->witness->point == std::vector<double>{1.0, 1.0, 2.0});
  CHECK_THROWS_AS(Monoid::from_table(c, t, 0, kPol), ConstraintViolation);

  std::vector<std::vector<std::size_t>> good{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  auto m = Monoid::from_table(c, good, 0, kPol);
  CHECK(m.op_index(1, 2) == 2);
  CHECK(check_monoid(m).pass());
}

TEST_CASE("is_submonoid: discrete uninorm and nullnorm ladders") {
  auto ul = Uninorm::u_min(TNorm::lukasiewicz(), TConorm::lukasiewicz(), 0.5, kPol);
  auto m_ul = Monoid::from_op(Carrier::grid(21), ul.as_binary_op(), 0.5, kPol);
  auto l22 = discrete_carrier(0.5, 2, 2);
  CHECK(is_submonoid(m_ul, l22.values(), kPol).pass());

  // The nullnorm has no identity on [0,1]; the ladder is still closed and
  // contains both 0 and 1, which is the discrete-substructure condition.
  Nullnorm fl(TConorm::lukasiewicz(), 0.5, TNorm::lukasiewicz(), kPol);
  auto closed = is_closed_under(fl.as_binary_op(), l22.values(), kPol);
  CHECK(closed.pass());
  CHECK(l22.index_of(0.0, kPol).has_value());
  CHECK(l22.index_of(1.0, kPol).has_value());

  // Product probe: {0, 0.3, 1} is not closed, witness 0.3*0.3 = 0.09.
  std::vector<double> probe{0.0, 0.3, 1.0};
  auto sub = is_submonoid(TNorm::product().as_binary_op(), 1.0, probe, kPol);
  CHECK_FALSE(sub.pass());
  CHECK(sub.find("contains-identity")->pass);
  const auto* cl = sub.find("closure");
  REQUIRE(cl != nullptr);
  CHECK_FALSE(cl->pass);
  REQUIRE(cl->witness.has_value());
  CHECK(cl->witness->point == std::vector<double>{0.3, 0.3});
  CHECK(cl->witness->lhs == doctest::Approx(0.09));

  // Missing identity is its own verdict.
  std::vector<double> no_e{0.0, 0.5};
  CHECK_FALSE(is_submonoid(TNorm::product().as_binary_op(), 1.0, no_e, kPol)
                  .find("contains-identity")
                  ->pass);

  // Subset values must come from the carrier.
  std::vector<double> off{0.33};
  CHECK_THROWS_AS(is_submonoid(m_ul, off, kPol), ConstraintViolation);
}

TEST_CASE("bounded lattices: chain and 2x2 Boolean") {
  auto ch = BoundedLattice::chain(4);
  CHECK(ch.size() == 4);
  CHECK(ch.bottom() == 0);
  CHECK(ch.top() == 3);
  CHECK(ch.meet(1, 3) == 1);
  CHECK(ch.join(1, 3) == 3);
  CHECK(ch.leq(1, 3));
  CHECK_FALSE(ch.leq(3, 1));

  auto b = BoundedLattice::boolean2();
  CHECK(b.size() == 4);
  CHECK(b.label(b.bottom()) == "0");
  CHECK(b.label(b.top()) == "1");
  auto a_idx = *b.index_of_label("a");
  auto b_idx = *b.index_of_label("b");
  CHECK(b.meet(a_idx, b_idx) == b.bottom());
  CHECK(b.join(a_idx, b_idx) == b.top());
  CHECK_FALSE(b.leq(a_idx, b_idx));
  CHECK_FALSE(b.leq(b_idx, a_idx));
  CHECK(b.leq(b.bottom(), a_idx));
  CHECK(b.leq(a_idx, b.top()));
}

TEST_CASE("lattice law violations are rejected") {
  // meet=min is fine, but join=min breaks absorption.
  std::vector<std::string> labels{"0", "1"};
  std::vector<std::vector<std::size_t>> mn{{0, 0}, {0, 1}};
  CHECK_THROWS_AS(BoundedLattice::from_tables(labels, mn, mn), ConstraintViolation);
  CHECK_NOTHROW(BoundedLattice::from_tables(labels, mn, {{0, 1}, {1, 1}}));
  CHECK_THROWS_AS(BoundedLattice::from_tables({"0"}, {{0}}, {{1}}), ConstraintViolation);
}
