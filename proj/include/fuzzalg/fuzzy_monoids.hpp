#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzalg/algebra.hpp"
#include "fuzzalg/connectives.hpp"
#include "fuzzalg/nullnorms.hpp"
#include "fuzzalg/uninorms.hpp"

namespace fuzzalg {

// Membership function sigma over a carrier. Raw values may overshoot [0,1]
// by at most eps_eq and are clamped; larger overshoots throw at evaluation.
// Table-backed subsets are defined only on carrier elements.
class FuzzySubset {
 public:
  static FuzzySubset from_fn(std::string name, Carrier carrier, std::function<double(double)> fn,
                             const TolerancePolicy& pol = {});
  static FuzzySubset from_table(std::string name, Carrier carrier, std::vector<double> values,
                                const TolerancePolicy& pol = {});

  double operator()(double x) const;
  const Carrier& carrier() const { return carrier_; }
  const std::string& name() const { return name_; }

 private:
  FuzzySubset(std::string name, Carrier carrier, std::function<double(double)> fn,
              const TolerancePolicy& pol)
      : name_(std::move(name)), carrier_(std::move(carrier)), fn_(std::move(fn)), pol_(pol) {}

  std::string name_;
  Carrier carrier_;
  std::function<double(double)> fn_;
  TolerancePolicy pol_;
};

// n-ary aggregation operator, n >= 2. Monotonicity is the caller's
// responsibility; the boundary identities A(0,...,0) = 0 and A(1,...,1) = 1
// are spot-checked at construction.
class Aggregator {
 public:
  static Aggregator min_n(std::size_t arity, const TolerancePolicy& pol = {});
  // Left-iterated n-ary extension of an associative binary operator.
  static Aggregator iterated(BinaryOp op, std::size_t arity, const TolerancePolicy& pol = {});

  double operator()(std::span<const double> xs) const;
  std::size_t arity() const { return arity_; }
  const std::string& name() const { return name_; }

 private:
  Aggregator(std::string name, std::size_t arity,
             std::function<double(std::span<const double>)> fn, const TolerancePolicy& pol);

  std::string name_;
  std::size_t arity_;
  std::function<double(std::span<const double>)> fn_;
};

// Caps tuple enumeration in the exhaustive submonoid checks. Exhaustive mode
// throws BudgetExceeded past the budget; sampled mode draws seeded uniform
// tuples instead and records the sample count and seed in the report.
struct EnumerationPolicy {
  enum class Mode { exhaustive, sampled };
  Mode mode = Mode::exhaustive;
  std::uint64_t budget = 10'000'000;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
};

// Conditions "inequality" (A(sigma(x_1),...,sigma(x_n)) <= sigma of the
// product, over all carrier n-tuples at the aggregator's arity) and
// "identity" (sigma(e) = 1), reported separately.
CheckReport check_a_fuzzy_submonoid(const Aggregator& a, const Monoid& m, const FuzzySubset& sigma,
                                    const TolerancePolicy& pol = {},
                                    const EnumerationPolicy& epol = {});

// Binary instances of the A-check.
CheckReport check_u_fuzzy_submonoid(const Uninorm& u, const Monoid& m, const FuzzySubset& sigma,
                                    const TolerancePolicy& pol = {},
                                    const EnumerationPolicy& epol = {});
CheckReport check_u_fuzzy_submonoid(const BinaryOp& u, const Monoid& m, const FuzzySubset& sigma,
                                    const TolerancePolicy& pol = {},
                                    const EnumerationPolicy& epol = {});
// Adds a note with min sigma over the carrier next to the absorbing element
// k: a passing sigma always satisfies min sigma >= k - eps_leq.
CheckReport check_f_fuzzy_submonoid(const Nullnorm& f, const Monoid& m, const FuzzySubset& sigma,
                                    const TolerancePolicy& pol = {},
                                    const EnumerationPolicy& epol = {});

// Carrier elements where sigma reaches 1 within eps_eq.
std::vector<double> core_of(const FuzzySubset& sigma, const TolerancePolicy& pol = {});

struct MonotoneReport {
  bool monotone = true;  // pairwise on B
  bool endpoint = true;  // sigma(1) = 1 (decreasing) / sigma(0) = 1 (increasing)
  std::optional<Witness> witness;
  std::vector<double> b;

  bool pass() const { return monotone && endpoint; }
};

// B = {x in the grid | sigma(x) in [e,1]}; checks the requested monotonicity
// pairwise on B plus the matching endpoint condition. Grid carriers only.
MonotoneReport monotone_on_b(const FuzzySubset& sigma, double e, Direction dir,
                             const TolerancePolicy& pol = {});

struct SubadditiveReport {
  bool subadditive = true;
  std::optional<Witness> witness;
  std::size_t pairs_checked = 0;
  std::size_t undefined_skipped = 0;  // pairs whose sums hit (+inf) + (-inf)
};

// f(a+b) <= f(a) + f(b) + eps_leq over all unordered sample pairs; pairs
// with undefined extended sums are skipped and counted.
SubadditiveReport subadditive_on(const std::function<ExtendedReal(ExtendedReal)>& f,
                                 std::span<const ExtendedReal> samples,
                                 const TolerancePolicy& pol = {});

// direct:    sigma = h^{-1}( f(t(x)) )
// reflected: sigma = h^{-1}( -f(t(x)) ), the (-h)^{[-1]} reading.
// The two differ whenever f is not odd; both are first-class and the chosen
// convention is recorded in the subset's name.
enum class SigmaConvention { direct, reflected };

FuzzySubset sigma_from_generators(const MonotoneFunction& h,
                                  const std::function<ExtendedReal(ExtendedReal)>& f,
                                  const MonotoneFunction& t, SigmaConvention conv, Carrier carrier,
                                  const TolerancePolicy& pol = {});

struct SubnormCharacterization {
  CheckReport direct;         // "inequality": U(sigma(x),sigma(y)) <= sigma(T(x,y)) on the grid
  CheckReport subadditivity;  // "subadditivity" of f = (-h) o sigma o t^{[-1]} on t's image
  std::vector<std::pair<ExtendedReal, ExtendedReal>> f_samples;  // (a, f(a))
};

// Both sides of the equivalence between the direct inequality and the
// subadditivity of f = (-h) o sigma o t^{[-1]}, evaluated independently so
// they can be compared. f is sampled at t(grid) plus {0, t(0)}. Requires a
// representable uninorm; the t-norm is rebuilt from its generator.
SubnormCharacterization characterize_subnorm_via_f(const Uninorm& u, const MonotoneFunction& t_gen,
                                                   const FuzzySubset& sigma, const Carrier& grid,
                                                   const TolerancePolicy& pol = {});

// Lattice-valued membership: carrier element i maps to lattice element
// values[i].
class LatticeFuzzySubset {
 public:
  LatticeFuzzySubset(std::string name, Carrier carrier, BoundedLattice lattice,
                     std::vector<std::size_t> values);

  std::size_t at(std::size_t carrier_index) const { return values_[carrier_index]; }
  const Carrier& carrier() const { return carrier_; }
  const BoundedLattice& lattice() const { return lattice_; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Carrier carrier_;
  BoundedLattice lattice_;
  std::vector<std::size_t> values_;
};

enum class LatticeConnective { meet, join };

// Conditions "inequality" (sigma(x) meet/join sigma(y) <= sigma(x o y) in
// the lattice order) and "identity" (sigma(e) = top).
CheckReport check_lattice_fuzzy_submonoid(const Monoid& m, const LatticeFuzzySubset& sigma,
                                          LatticeConnective conn,
                                          const TolerancePolicy& pol = {});

// The two membership functions for which no uninorm admits the submonoid
// inequality against any t-norm (sigma(x) = x) resp. t-conorm
// (sigma(x) = 1 - x).
enum class ProbeFamily { identity_sigma_tnorm, complement_sigma_tconorm };

// One condition per candidate, named after it. A condition passes when the
// predicted violating pair is exhibited: x = e with y scanned above e for
// the t-norm family, x = 1 - e with y scanned below 1 - e for the dual.
// base is the monoid operation the inequality is checked against.
CheckReport nonexistence_probe(ProbeFamily family, std::span<const Uninorm> candidates,
                               const BinaryOp& base, const Carrier& grid,
                               const TolerancePolicy& pol = {});

// The scaled-min structure, literally: T rescaled onto [0,e]^2, the rescaled
// maximum on the open square (e,1]^2, min on the mixed region. Not a
// uninorm: the identity law fails above e (U(e,y) = e for y > e).
BinaryOp scaled_min_structure(const TNorm& t, double e, const TolerancePolicy& pol = {});

// Deterministic membership functions for property trials; the seed is part
// of the subset name so any report that prints it identifies the trial.
// Piecewise-linear with 4-8 knots spanning [0,1], values uniform in [0,1].
FuzzySubset random_piecewise_sigma(std::uint64_t seed, Carrier carrier,
                                   const TolerancePolicy& pol = {});
// Piecewise-constant with 2-6 pieces; values are pushed at least `snap`
// away from each avoid level so threshold comparisons never sit on an edge.
FuzzySubset random_step_sigma(std::uint64_t seed, Carrier carrier,
                              std::vector<double> avoid_levels, double snap = 1e-4,
                              const TolerancePolicy& pol = {});

}  // namespace fuzzalg
