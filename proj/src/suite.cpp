#include "fuzzalg/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fuzzalg/algebra.hpp"
#include "fuzzalg/binary_op.hpp"
#include "fuzzalg/connectives.hpp"
#include "fuzzalg/dsl.hpp"
#include "fuzzalg/errors.hpp"
#include "fuzzalg/fuzzy_monoids.hpp"
#include "fuzzalg/generators.hpp"
#include "fuzzalg/nullnorms.hpp"
#include "fuzzalg/registry.hpp"
#include "fuzzalg/report.hpp"
#include "fuzzalg/uninorms.hpp"
#include "fuzzalg/vague.hpp"

namespace fuzzalg {
namespace {

constexpr std::string_view kExampleScript =
    "# Composed membership function against a representable uninorm at e = 0.5.\n"
    "let h = piecewise(x) { [0, 0.5) -> ln(2 * x); [0.5, 1] -> -ln(2 - 2 * x); };\n"
    "let t = fn(x) 1 - x;\n"
    "let sigma = fuzzyset compose(invgen(h), sqrt, gen(t), reflected);\n"
    "let up = uninorm rep(h, 0.5, conjunctive);\n"
    "check usubnorm(sigma, up, lukasiewicz) on grid(201);\n";

constexpr std::string_view kBadLex = "@ bad token\n";

constexpr std::string_view kBadParse = "check subnorm(u, Up on grid(101);\n";

constexpr std::string_view kBadDomain =
    "let h = piecewise(x) { [0, 0.4) -> x; [0.5, 1] -> 1 - x; };\n";

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform draw in [0, 1).
double unit_draw(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

std::vector<double> sampled_values(const FuzzySubset& sigma, const Carrier& grid) {
  std::vector<double> out;
  out.reserve(grid.values().size());
  for (double x : grid.values()) out.push_back(sigma(x));
  return out;
}

SuiteLine generator_roundtrip(const TolerancePolicy& pol) {
  SuiteLine line{"generator-roundtrip", false, ""};
  TNorm t = TNorm::from_generator(complement_generator(pol), pol);
  TConorm s = TConorm::from_generator(identity_generator(pol), pol);
  Carrier g = Carrier::grid(101);
  double dev_t = 0.0;
  double dev_s = 0.0;
  for (double x : g.values()) {
    for (double y : g.values()) {
      dev_t = std::max(dev_t, std::fabs(t(x, y) - std::max(0.0, x + y - 1.0)));
      dev_s = std::max(dev_s, std::fabs(s(x, y) - std::min(1.0, x + y)));
    }
  }
  line.pass = dev_t <= 1e-9 && dev_s <= 1e-9;
  line.detail = "max deviation from the closed forms on the 101x101 grid: " + fmt(dev_t) +
                " (t-norm), " + fmt(dev_s) + " (t-conorm)";
  return line;
}

SuiteLine representable_eval_axioms(const TolerancePolicy& pol) {
  SuiteLine line{"representable-eval-axioms", false, ""};
  Uninorm u = Uninorm::representable(log_uninorm_generator(pol), 0.5, Boundary::conjunctive, pol);
  Carrier g = Carrier::grid(101);
  double dev_identity = 0.0;
  for (double y : g.values()) dev_identity = std::max(dev_identity, std::fabs(u(0.5, y) - y));
  double dev_low = std::fabs(u(0.25, 0.25) - 0.125);
  double dev_high = std::fabs(u(0.75, 0.75) - 0.875);
  Carrier g21 = Carrier::grid(21);
  AxiomReport axioms = check_uninorm_axioms(u, g21.values(), pol);
  line.pass = dev_identity <= 1e-9 && dev_low <= 1e-9 && dev_high <= 1e-9 && axioms.pass();
  line.detail = "identity row off by " + fmt(dev_identity) + "; u(0.25,0.25) off by " +
                fmt(dev_low) + ", u(0.75,0.75) off by " + fmt(dev_high) + "; axioms " +
                (axioms.pass() ? "pass" : "fail") + " on the 21-point grid";
  return line;
}

SuiteLine surface_export_monotone(const TolerancePolicy&) {
  SuiteLine line{"surface-export-monotone", false, ""};
  const int n = 101;
  double worst = 0.0;
  for (const std::string& name : {std::string("rep_log"), std::string("rep_rat")}) {
    BinaryOp op = lookup_surface(name);
    std::ostringstream out;
    export_grid_csv(op, n, out);
    std::istringstream in(out.str());
    std::string header;
    if (!std::getline(in, header) || header != "x,y,value") {
      line.detail = name + ": bad header '" + header + "'";
      return line;
    }
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n) * n);
    std::string row;
    while (std::getline(in, row)) {
      double x = 0.0;
      double y = 0.0;
      double v = 0.0;
      if (std::sscanf(row.c_str(), "%lf,%lf,%lf", &x, &y, &v) != 3) {
        line.detail = name + ": unparseable row '" + row + "'";
        return line;
      }
      worst = std::max(worst, std::fabs(v - op(x, y)));
      values.push_back(v);
    }
    if (values.size() != static_cast<std::size_t>(n) * n) {
      line.detail = name + ": expected " + std::to_string(n * n) + " rows, got " +
                    std::to_string(values.size());
      return line;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::size_t k = static_cast<std::size_t>(i) * n + j;
        if (j > 0 && values[k] + 1e-9 < values[k - 1]) {
          line.detail = name + ": row monotonicity violated at cell (" + std::to_string(i) +
                        "," + std::to_string(j) + ")";
          return line;
        }
        if (i > 0 && values[k] + 1e-9 < values[k - n]) {
          line.detail = name + ": column monotonicity violated at cell (" + std::to_string(i) +
                        "," + std::to_string(j) + ")";
          return line;
        }
      }
    }
  }
  line.pass = worst <= 1e-9;
  line.detail = "rep_log and rep_rat exports re-parse within " + fmt(worst) +
                " of direct evaluation; both surfaces monotone in each argument";
  return line;
}

SuiteLine composed_sigma_inequality(const TolerancePolicy& pol) {
  SuiteLine line{"composed-sigma-inequality", false, ""};
  MonotoneFunction h = log_uninorm_generator(pol);
  MonotoneFunction t = complement_generator(pol);
  auto root = [](ExtendedReal a) {
    if (!a.is_finite()) return a;
    return ExtendedReal(std::sqrt(a.as_double()));
  };
  Carrier g = Carrier::grid(201);
  FuzzySubset sigma = sigma_from_generators(h, root, t, SigmaConvention::reflected, g, pol);
  double s0 = sigma(0.0);
  double s_half = sigma(0.5);
  double s1 = sigma(1.0);
  bool frozen = std::fabs(s0 - 0.18393972058572117) <= 1e-9 &&
                std::fabs(s_half - 0.2465343456976199) <= 1e-9 && std::fabs(s1 - 0.5) <= 1e-9;
  Uninorm u = Uninorm::representable(h, 0.5, Boundary::conjunctive, pol);
  Monoid m = Monoid::from_op(g, TNorm::lukasiewicz().as_binary_op(), 1.0, pol);
  CheckReport report = check_u_fuzzy_submonoid(u, m, sigma, pol);
  const ConditionResult* inequality = report.find("inequality");
  const ConditionResult* identity = report.find("identity");
  bool recorded = identity != nullptr && !identity->pass && identity->witness.has_value() &&
                  std::fabs(identity->witness->lhs - 0.5) <= 1e-9;
  line.pass = frozen && inequality != nullptr && inequality->pass && recorded;
  line.detail = "inequality holds on the 201-point grid; sigma(1) = " + fmt(s1) +
                " recorded against the identity condition";
  return line;
}

SuiteLine subadditivity_equivalence(const SuiteOptions& opts) {
  SuiteLine line{"subadditivity-equivalence", false, ""};
  Uninorm u =
      Uninorm::representable(log_uninorm_generator(opts.pol), 0.5, Boundary::conjunctive, opts.pol);
  MonotoneFunction t = complement_generator(opts.pol);
  Carrier g = Carrier::grid(51);
  int disagreements = 0;
  int direct_passes = 0;
  for (int i = 0; i < 50; ++i) {
    FuzzySubset sigma = random_piecewise_sigma(opts.seed * 1000 + i, g, opts.pol);
    if (i % 5 == 0) {
      // Compress every fifth trial into [0.45, 0.47], a band where the
      // inequality provably holds, so both verdict quadrants occur.
      std::vector<double> values = sampled_values(sigma, g);
      for (double& v : values) v = 0.45 + 0.02 * v;
      sigma = FuzzySubset::from_table("band(" + std::to_string(i) + ")", g, values, opts.pol);
    }
    SubnormCharacterization ch = characterize_subnorm_via_f(u, t, sigma, g, opts.pol);
    bool direct = ch.direct.pass();
    bool ladder = ch.subadditivity.pass();
    if (direct) ++direct_passes;
    if (direct != ladder) ++disagreements;
  }
  line.pass = disagreements == 0;
  line.detail = "50 trials: " + std::to_string(direct_passes) + " direct passes, " +
                std::to_string(disagreements) + " disagreements with the subadditivity verdict";
  return line;
}

SuiteLine disjunctive_rigidity(const SuiteOptions& opts) {
  SuiteLine line{"disjunctive-rigidity", false, ""};
  Uninorm u = Uninorm::u_max(TNorm::lukasiewicz(), TConorm::lukasiewicz(), 0.5, opts.pol);
  Carrier g = Carrier::grid(51);
  Monoid m = Monoid::from_op(g, TNorm::minimum().as_binary_op(), 1.0, opts.pol);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    FuzzySubset raw = random_piecewise_sigma(opts.seed * 2000 + i, g, opts.pol);
    std::vector<double> values = sampled_values(raw, g);
    values.back() = 1.0;
    if (*std::min_element(values.begin(), values.end()) > 1.0 - 1e-3)
      values[values.size() / 2] = 0.3;
    FuzzySubset sigma =
        FuzzySubset::from_table("pinned(" + std::to_string(i) + ")", g, values, opts.pol);
    if (!check_u_fuzzy_submonoid(u, m, sigma, opts.pol).pass()) ++failures;
  }
  FuzzySubset one = FuzzySubset::from_fn("one", g, [](double) { return 1.0; }, opts.pol);
  bool constant_passes = check_u_fuzzy_submonoid(u, m, one, opts.pol).pass();
  line.pass = failures == 100 && constant_passes;
  line.detail = std::to_string(failures) +
                "/100 pinned memberships rejected; the constant-one membership passes";
  return line;
}

SuiteLine nullnorm_bound_characterization(const SuiteOptions& opts) {
  SuiteLine line{"nullnorm-bound-characterization", false, ""};
  Carrier g = Carrier::grid(21);
  Monoid m = Monoid::from_op(g, TNorm::minimum().as_binary_op(), 1.0, opts.pol);

  // Bound: every membership passing the <S_L, 0.5, T_L> check stays >= 0.5.
  Nullnorm f_l(TConorm::lukasiewicz(), 0.5, TNorm::lukasiewicz(), opts.pol);
  int bound_passes = 0;
  bool bound_ok = true;
  for (int i = 0; i < 100; ++i) {
    FuzzySubset raw = random_piecewise_sigma(opts.seed * 3000 + i, g, opts.pol);
    std::vector<double> values = sampled_values(raw, g);
    if (i % 2 == 0) {
      for (double& v : values) v = 0.5 + 0.5 * v;
      values.back() = 1.0;
    }
    FuzzySubset sigma =
        FuzzySubset::from_table("bound(" + std::to_string(i) + ")", g, values, opts.pol);
    if (check_f_fuzzy_submonoid(f_l, m, sigma, opts.pol).pass()) {
      ++bound_passes;
      if (*std::min_element(values.begin(), values.end()) < 0.5 - 1e-9) bound_ok = false;
    }
  }
  bound_ok = bound_ok && bound_passes >= 1;

  // Characterization: for <S, k, T_M> the verdict equals
  // sigma(1) = 1 and min sigma >= k, with the check's own tolerances.
  int mismatches = 0;
  int combo = 0;
  for (const TConorm& s : {TConorm::lukasiewicz(), TConorm::maximum()}) {
    for (double k : {0.25, 0.5}) {
      Nullnorm f_m(s, k, TNorm::minimum(), opts.pol);
      for (int i = 0; i < 25; ++i) {
        FuzzySubset raw =
            random_piecewise_sigma(opts.seed * 4000 + combo * 25 + i, g, opts.pol);
        std::vector<double> values = sampled_values(raw, g);
        if (i % 2 == 0) {
          for (double& v : values) v = k + (1.0 - k) * v;
          values.back() = 1.0;
        }
        FuzzySubset sigma =
            FuzzySubset::from_table("char(" + std::to_string(combo * 25 + i) + ")", g, values,
                                    opts.pol);
        bool predicted = std::fabs(values.back() - 1.0) <= opts.pol.eps_eq &&
                         *std::min_element(values.begin(), values.end()) >= k - opts.pol.eps_leq;
        bool actual = check_f_fuzzy_submonoid(f_m, m, sigma, opts.pol).pass();
        if (predicted != actual) ++mismatches;
      }
      ++combo;
    }
  }
  line.pass = bound_ok && mismatches == 0;
  line.detail = std::to_string(bound_passes) +
                "/100 trials pass the bound check, all with min >= 0.5; characterization over 4 "
                "nullnorms: " +
                std::to_string(mismatches) + " mismatches in 100 trials";
  return line;
}

// Step memberships for the monotone-on-B scenario. Families 0 and 1 place
// the knee so one side of the equivalence is exercised near its boundary;
// family 2 delegates to the generic seeded step generator. All values stay
// at least 1e-3 away from the threshold e.
FuzzySubset step_sigma_family(std::uint64_t seed, const Carrier& g, double e,
                              const TolerancePolicy& pol) {
  int family = static_cast<int>(seed % 3);
  if (family == 2) return random_step_sigma(seed, g, {e}, 1e-4, pol);
  std::uint64_t state = seed;
  std::size_t n = g.values().size();
  std::size_t knee = 1 + static_cast<std::size_t>(splitmix64(state) % (n - 1));
  bool low_piece_above_e = (splitmix64(state) % 2) == 1;
  double low = low_piece_above_e
                   ? std::min(1.0 - 1e-3, e + 1e-3 + unit_draw(state) * (1.0 - e - 2e-3))
                   : unit_draw(state) * std::max(0.0, e - 2e-3);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool high = (family == 0) ? (i >= knee) : (i < knee);
    values[i] = high ? 1.0 : low;
  }
  return FuzzySubset::from_table("step(" + std::to_string(seed) + ")", g, values, pol);
}

SuiteLine monotone_on_b_equivalence(const SuiteOptions& opts) {
  SuiteLine line{"monotone-on-b-equivalence", false, ""};
  Carrier g = Carrier::grid(21);
  Monoid m_min = Monoid::from_op(g, TNorm::minimum().as_binary_op(), 1.0, opts.pol);
  Monoid m_max = Monoid::from_op(g, TConorm::maximum().as_binary_op(), 0.0, opts.pol);
  int mismatches = 0;
  int comparisons = 0;
  int level = 0;
  for (double e : {0.25, 0.5, 0.75}) {
    BinaryOp w = scaled_min_structure(TNorm::lukasiewicz(), e, opts.pol);
    for (int i = 0; i < 100; ++i) {
      FuzzySubset sigma =
          step_sigma_family(opts.seed * 5000 + static_cast<std::uint64_t>(level) * 100 + i, g, e,
                            opts.pol);
      bool dec_check = check_u_fuzzy_submonoid(w, m_min, sigma, opts.pol).pass();
      bool dec_prop = monotone_on_b(sigma, e, Direction::decreasing, opts.pol).pass();
      bool inc_check = check_u_fuzzy_submonoid(w, m_max, sigma, opts.pol).pass();
      bool inc_prop = monotone_on_b(sigma, e, Direction::increasing, opts.pol).pass();
      if (dec_check != dec_prop) ++mismatches;
      if (inc_check != inc_prop) ++mismatches;
      comparisons += 2;
    }
    ++level;
  }
  line.pass = mismatches == 0;
  line.detail = std::to_string(comparisons) + " verdict pairs at e in {0.25, 0.5, 0.75}: " +
                std::to_string(mismatches) + " mismatches between the check and the criterion";
  return line;
}

SuiteLine discrete_substructure_closure(const TolerancePolicy& pol) {
  SuiteLine line{"discrete-substructure-closure", false, ""};
  Uninorm u_l = Uninorm::u_min(TNorm::lukasiewicz(), TConorm::lukasiewicz(), 0.5, pol);
  Nullnorm f_l(TConorm::lukasiewicz(), 0.5, TNorm::lukasiewicz(), pol);
  BinaryOp u_op = u_l.as_binary_op();
  BinaryOp f_op = f_l.as_binary_op();
  int verified = 0;
  for (int n : {1, 2, 5}) {
    for (int m : {1, 2, 5}) {
      Carrier c = discrete_carrier(0.5, n, m);
      const std::vector<double>& values = c.values();
      bool endpoints = values.front() == 0.0 && values.back() == 1.0;
      bool sub = is_submonoid(u_op, 0.5, values, pol).pass();
      bool closed = is_closed_under(f_op, values, pol).pass();
      if (!(endpoints && sub && closed)) {
        line.detail = "L(" + std::to_string(n) + "," + std::to_string(m) + ") failed: " +
                      (endpoints ? "" : "endpoints ") + (sub ? "" : "submonoid ") +
                      (closed ? "" : "closure");
        return line;
      }
      ++verified;
    }
  }
  line.pass = verified == 9;
  line.detail = "9 discrete carriers contain 0, 0.5, 1 and are closed under both operators";
  return line;
}

bool vague_roundtrip_combo(const BinaryOp& a, const IndistinguishabilityOp& e, const Monoid& m,
                           const TolerancePolicy& pol, std::string& why) {
  if (!check_indistinguishability(a, e, pol).pass()) {
    why = "indistinguishability axioms";
    return false;
  }
  VagueOp v = vague_from_monoid(e, m, pol);
  if (!check_vague_binary(a, e, v, pol).pass()) {
    why = "vague binary axioms";
    return false;
  }
  if (!check_vague_monoid(a, e, v, pol).pass()) {
    why = "vague monoid axioms";
    return false;
  }
  Monoid recovered = associated_monoid(v, e, pol);
  std::size_t size = m.carrier().values().size();
  if (recovered.identity_index() != m.identity_index()) {
    why = "recovered identity";
    return false;
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (recovered.op_index(i, j) != m.op_index(i, j)) {
        why = "recovered table";
        return false;
      }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (v.at(i, m.identity_index(), j) != e.at(i, j)) {
        why = "identity slice";
        return false;
      }
  if (!check_commutativity_correspondence(a, e, v, m, pol).pass()) {
    why = "commutativity correspondence";
    return false;
  }
  std::vector<std::size_t> identity_map(size);
  for (std::size_t i = 0; i < size; ++i) identity_map[i] = i;
  FuzzySubset sigma = kernel(m.carrier(), identity_map, e, m.identity_value(), pol);
  if (!check_a_fuzzy_submonoid(Aggregator::iterated(a, 2, pol), m, sigma, pol).pass()) {
    why = "kernel membership";
    return false;
  }
  return true;
}

SuiteLine vague_roundtrip(const TolerancePolicy& pol) {
  SuiteLine line{"vague-roundtrip", false, ""};
  BinaryOp a_min{"min", [](double x, double y) { return std::min(x, y); }};
  BinaryOp a_uni = Uninorm::u_min(TNorm::minimum(), TConorm::maximum(), 0.5, pol).as_binary_op();
  BinaryOp a_null = Nullnorm(TConorm::lukasiewicz(), 0.25, TNorm::minimum(), pol).as_binary_op();
  BinaryOp a_tl = TNorm::lukasiewicz().as_binary_op();
  int verified = 0;
  for (std::size_t n : {2u, 3u, 5u}) {
    for (const Monoid& m : vague_test_corpus(n, pol)) {
      const Carrier& c = m.carrier();
      IndistinguishabilityOp crisp = IndistinguishabilityOp::crisp(c, pol);
      IndistinguishabilityOp const03 = IndistinguishabilityOp::constant(c, 0.3, pol);
      IndistinguishabilityOp const025 = IndistinguishabilityOp::constant(c, 0.25, pol);
      double span = static_cast<double>(n);
      IndistinguishabilityOp dist = IndistinguishabilityOp::from_fn(
          "distance", c, [span](double x, double y) { return 1.0 - std::fabs(x - y) / span; },
          pol);
      const std::pair<const BinaryOp*, const IndistinguishabilityOp*> combos[] = {
          {&a_min, &crisp},  {&a_min, &const03},  {&a_uni, &crisp},
          {&a_uni, &const03}, {&a_null, &const025}, {&a_tl, &dist},
      };
      for (const auto& [a, e] : combos) {
        // The distance relation is not regular for the left-zero member
        // (composing the identity with z moves 0 to z but fixes 1), so that
        // pairing falls outside the regular-relation precondition.
        if (e == &dist && m.op_name() == "leftzero+e") continue;
        std::string why;
        if (!vague_roundtrip_combo(*a, *e, m, pol, why)) {
          line.detail = m.name() + " with " + a->name + ": " + why;
          return line;
        }
        ++verified;
      }
    }
  }
  line.pass = verified == 69;
  line.detail = "69 aggregator/relation/monoid combinations round-trip exhaustively";
  return line;
}

SuiteLine nonexistence_probes(const TolerancePolicy& pol) {
  SuiteLine line{"nonexistence-probes", false, ""};
  std::vector<Uninorm> candidates;
  candidates.push_back(Uninorm::u_min(TNorm::lukasiewicz(), TConorm::lukasiewicz(), 0.5, pol));
  candidates.push_back(Uninorm::u_max(TNorm::lukasiewicz(), TConorm::lukasiewicz(), 0.5, pol));
  candidates.push_back(
      Uninorm::representable(log_uninorm_generator(pol), 0.5, Boundary::conjunctive, pol));
  candidates.push_back(
      Uninorm::representable(rational_uninorm_generator(pol), 0.5, Boundary::disjunctive, pol));
  candidates.push_back(Uninorm::idempotent(complement_generator(pol), 0.5, TieRule::take_min, pol));
  Carrier g = Carrier::grid(21);
  CheckReport tnorm_side = nonexistence_probe(ProbeFamily::identity_sigma_tnorm, candidates,
                                              TNorm::lukasiewicz().as_binary_op(), g, pol);
  CheckReport tconorm_side = nonexistence_probe(ProbeFamily::complement_sigma_tconorm, candidates,
                                                TConorm::lukasiewicz().as_binary_op(), g, pol);
  line.pass = tnorm_side.pass() && tconorm_side.pass();
  line.detail = "both membership patterns exhibit the predicted violation for all 5 candidates";
  return line;
}

template <typename ErrorType>
bool rejects_with_position(std::string_view text, std::string_view prefix, bool needs_elaborate) {
  try {
    dsl::Program p = dsl::parse_program(text);
    if (needs_elaborate) dsl::elaborate(p);
    return false;
  } catch (const ErrorType& err) {
    std::string_view what(err.what());
    return what.substr(0, prefix.size()) == prefix;
  } catch (const Error&) {
    return false;
  }
}

SuiteLine dsl_fixtures(const TolerancePolicy& pol) {
  SuiteLine line{"dsl-fixtures", false, ""};
  bool example_ok = false;
  try {
    dsl::Program p = dsl::parse_program(kExampleScript);
    dsl::RunOptions options;
    options.pol = pol;
    dsl::ProgramResult result = dsl::run_program(p, options);
    const dsl::CheckLine* inequality = nullptr;
    const dsl::CheckLine* identity = nullptr;
    for (const dsl::CheckLine& l : result.lines) {
      if (l.name == "usubnorm-inequality") inequality = &l;
      if (l.name == "identity-condition") identity = &l;
    }
    example_ok = p.statements.size() == 5 && inequality != nullptr && inequality->pass &&
                 identity != nullptr && !identity->pass && identity->witness == "sigma(1)=0.5" &&
                 result.run_pass(false) && !result.run_pass(true);
  } catch (const Error&) {
    example_ok = false;
  }
  bool lex_ok = rejects_with_position<dsl::LexError>(kBadLex, "1:1:", false);
  bool parse_ok = rejects_with_position<dsl::ParseError>(kBadParse, "1:21:", false);
  bool domain_ok = rejects_with_position<dsl::DomainGap>(kBadDomain, "1:39:", true);
  line.pass = example_ok && lex_ok && parse_ok && domain_ok;
  line.detail = std::string("example script ") + (example_ok ? "reproduces" : "misses") +
                " both recorded verdicts; malformed scripts rejected at 1:1, 1:21, 1:39";
  return line;
}

}  // namespace

std::vector<SuiteLine> paper_suite(const SuiteOptions& opts) {
  std::vector<SuiteLine> lines;
  lines.push_back(generator_roundtrip(opts.pol));
  lines.push_back(representable_eval_axioms(opts.pol));
  lines.push_back(surface_export_monotone(opts.pol));
  lines.push_back(composed_sigma_inequality(opts.pol));
  lines.push_back(subadditivity_equivalence(opts));
  lines.push_back(disjunctive_rigidity(opts));
  lines.push_back(nullnorm_bound_characterization(opts));
  lines.push_back(monotone_on_b_equivalence(opts));
  lines.push_back(discrete_substructure_closure(opts.pol));
  lines.push_back(vague_roundtrip(opts.pol));
  lines.push_back(nonexistence_probes(opts.pol));
  lines.push_back(dsl_fixtures(opts.pol));
  return lines;
}

std::string_view fixture_example_script() { return kExampleScript; }
std::string_view fixture_bad_lex() { return kBadLex; }
std::string_view fixture_bad_parse() { return kBadParse; }
std::string_view fixture_bad_domain() { return kBadDomain; }

}  // namespace fuzzalg
