#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fuzzalg/algebra.hpp"
#include "fuzzalg/binary_op.hpp"
#include "fuzzalg/errors.hpp"
#include "fuzzalg/fuzzy_monoids.hpp"
#include "fuzzalg/numerics.hpp"
#include "fuzzalg/report.hpp"

namespace fuzzalg {

// Symmetric fuzzy relation E on a finite carrier with E(x,x) = 1. Symmetry is
// structural: only the upper triangle is stored, so E(x,y) and E(y,x) read the
// same cell. The diagonal must be 1 within eps_eq at construction and is
// stored as exactly 1.
class IndistinguishabilityOp {
 public:
  static IndistinguishabilityOp from_fn(std::string name, Carrier carrier,
                                        const std::function<double(double, double)>& fn,
                                        const TolerancePolicy& pol = {});
  // Full n-by-n table; off-diagonal entries must be exactly symmetric.
  static IndistinguishabilityOp from_table(std::string name, Carrier carrier,
                                           const std::vector<std::vector<double>>& table,
                                           const TolerancePolicy& pol = {});
  // 1 on the diagonal, 0 elsewhere (classical equality).
  static IndistinguishabilityOp crisp(Carrier carrier, const TolerancePolicy& pol = {});
  // Constant 1 everywhere (total indistinguishability).
  static IndistinguishabilityOp all_one(Carrier carrier, const TolerancePolicy& pol = {});
  // 1 on the diagonal, a constant c in [0,1] elsewhere.
  static IndistinguishabilityOp constant(Carrier carrier, double c,
                                         const TolerancePolicy& pol = {});

  double at(std::size_t i, std::size_t j) const;
  double operator()(double x, double y) const;  // value-based lookup
  const Carrier& carrier() const { return carrier_; }
  const std::string& name() const { return name_; }
  // True when no off-diagonal entry reaches 1 within eps_eq.
  bool separates_points(const TolerancePolicy& pol = {}) const;

 private:
  IndistinguishabilityOp(std::string name, Carrier carrier, std::vector<double> upper,
                         TolerancePolicy pol);

  std::string name_;
  Carrier carrier_;
  std::vector<double> upper_;  // row-major upper triangle including diagonal
  TolerancePolicy pol_;
};

// Ternary fuzzy relation v(x,y,z) on a finite carrier: the degree to which z
// is the product of x and y. All values must lie in [0,1].
class VagueOp {
 public:
  static VagueOp from_fn(std::string name, Carrier carrier,
                         const std::function<double(std::size_t, std::size_t, std::size_t)>& fn,
                         const TolerancePolicy& pol = {});
  // Flat table of size n^3 indexed (i*n + j)*n + k.
  static VagueOp from_table(std::string name, Carrier carrier, std::vector<double> values,
                            const TolerancePolicy& pol = {});

  double at(std::size_t i, std::size_t j, std::size_t k) const;
  const Carrier& carrier() const { return carrier_; }
  const std::string& name() const { return name_; }

 private:
  VagueOp(std::string name, Carrier carrier, std::vector<double> values, TolerancePolicy pol);

  std::string name_;
  Carrier carrier_;
  std::vector<double> values_;
  TolerancePolicy pol_;
};

// Left-iterated 4-ary extension a(a(a(p,q),r),s) of a binary aggregation —
// order-independent whenever a is associative and commutative. Checks that
// need a 4-ary aggregation accept a custom extension for the general case and
// default to this one.
using QuaternaryAggregator = std::function<double(double, double, double, double)>;
QuaternaryAggregator left_iterated_4(const BinaryOp& a);

struct IndistinguishabilityReport {
  CheckReport report;
  bool separates_points = false;
  bool pass() const { return report.pass(); }
};

// Conditions "reflexivity", "symmetry", and "transitivity"
// (a(E(x,y),E(y,z)) <= E(x,z) over all triples).
IndistinguishabilityReport check_indistinguishability(const BinaryOp& a,
                                                      const IndistinguishabilityOp& e,
                                                      const TolerancePolicy& pol = {});

// Conditions "right-regularity" (E(x,y) <= E(x*z, y*z)) and "left-regularity"
// (E(x,y) <= E(z*x, z*y)) over all triples of the shared carrier.
CheckReport check_regular(const IndistinguishabilityOp& e, const Monoid& m,
                          const TolerancePolicy& pol = {});

// v(x,y,z) = E(x*y, z). Requires E regular with respect to the monoid
// operation; throws RegularityRequired otherwise.
VagueOp vague_from_monoid(const IndistinguishabilityOp& e, const Monoid& m,
                          const TolerancePolicy& pol = {});

// Conditions:
//   "extensionality": a4(v(x,y,z), E(x,x'), E(y,y'), E(z,z')) <= v(x',y',z')
//                     over all 6-tuples;
//   "functionality":  a(v(x,y,z), v(x,y,z')) <= E(z,z') over all 4-tuples;
//   "totality":       for every pair some z has v(x,y,z) >= 1 - eps_eq.
// The 6-tuple scan is exhaustive for carriers of at most 8 elements and falls
// back to seeded uniform sampling (count and seed recorded in the condition
// info) on larger ones or when epol.mode is sampled. The 4-tuple scan samples
// only when its tuple count exceeds epol.budget. Totality is always
// exhaustive.
CheckReport check_vague_binary(const BinaryOp& a, const IndistinguishabilityOp& e,
                               const VagueOp& v, const TolerancePolicy& pol = {},
                               const EnumerationPolicy& epol = {},
                               const QuaternaryAggregator& ext4 = {});

// All elements e with v(e,x,x) >= 1 - eps_eq and v(x,e,x) >= 1 - eps_eq for
// every x, in carrier order.
std::vector<std::size_t> vague_identity_candidates(const VagueOp& v,
                                                   const TolerancePolicy& pol = {});

// Conditions:
//   "associativity": a4(v(y,z,d), v(x,d,m), v(x,y,q), v(q,z,w)) <= E(m,w)
//                    over all 7-tuples (same enumeration rules as the 6-tuple
//                    scan above);
//   "identity":      some element satisfies both crisp identity conditions.
CheckReport check_vague_monoid(const BinaryOp& a, const IndistinguishabilityOp& e,
                               const VagueOp& v, const TolerancePolicy& pol = {},
                               const EnumerationPolicy& epol = {},
                               const QuaternaryAggregator& ext4 = {});

// Recovers the crisp operation from the unique level-1 entries of v. Requires
// e to separate points (throws SeparationViolated otherwise, also when some
// pair has two products at level 1); throws MissingProduct when a pair has
// none; throws ConstraintViolation when the recovered table has no identity.
Monoid associated_monoid(const VagueOp& v, const IndistinguishabilityOp& e,
                         const TolerancePolicy& pol = {});

// Both sides of the commutativity equivalence plus their agreement.
struct CommutativityReport {
  ConditionResult vague_side;      // a(v(x,y,m), v(y,x,w)) <= E(m,w) over 4-tuples
  ConditionResult monoid_side;     // x*y = y*x over all pairs
  ConditionResult correspondence;  // the two verdicts agree
  bool pass() const { return correspondence.pass; }
};
CommutativityReport check_commutativity_correspondence(const BinaryOp& a,
                                                       const IndistinguishabilityOp& e,
                                                       const VagueOp& v, const Monoid& m,
                                                       const TolerancePolicy& pol = {});

// Condition "inequality": v_src(x,y,z) <= v_dst(f(x),f(y),f(z)) over all src
// triples. When it passes and the source has an identity candidate e, a
// second condition "identity-image" verifies that f(e) satisfies both
// identity conditions in the destination. f_map holds destination indices,
// one per source carrier element.
CheckReport check_homomorphism(const std::vector<std::size_t>& f_map, const VagueOp& src_v,
                               const IndistinguishabilityOp& src_e, const VagueOp& dst_v,
                               const IndistinguishabilityOp& dst_e,
                               const TolerancePolicy& pol = {});

// sigma(x) = E_dst(f(x), e') on the source carrier, where e' is given as a
// value of the destination carrier.
FuzzySubset kernel(const Carrier& src, const std::vector<std::size_t>& f_map,
                   const IndistinguishabilityOp& dst_e, double dst_identity,
                   const TolerancePolicy& pol = {});

// Finite monoids on the carrier {0,...,n}: max (identity 0), min (identity
// n), addition truncated at n (identity 0), and a non-commutative left-zero
// semigroup with 0 adjoined as identity.
std::vector<Monoid> vague_test_corpus(std::size_t n, const TolerancePolicy& pol = {});

}  // namespace fuzzalg
