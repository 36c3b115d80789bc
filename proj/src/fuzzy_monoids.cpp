#include "fuzzalg/fuzzy_monoids.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace fuzzalg {

namespace {

double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

// Advances a base-`base` odometer in lexicographic order.
bool advance(std::vector<std::size_t>& idx, std::size_t base) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < base) return true;
    idx[i] = 0;
  }
  return false;
}

}  // namespace

FuzzySubset FuzzySubset::from_fn(std::string name, Carrier carrier,
                                 std::function<double(double)> fn, const TolerancePolicy& pol) {
  return FuzzySubset(std::move(name), std::move(carrier), std::move(fn), pol);
}

FuzzySubset FuzzySubset::from_table(std::string name, Carrier carrier, std::vector<double> values,
                                    const TolerancePolicy& pol) {
  if (values.size() != carrier.size())
    throw ConstraintViolation("fuzzy subset " + name + ": " + std::to_string(values.size()) +
                              " values for " + std::to_string(carrier.size()) +
                              " carrier elements");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::isnan(values[i]) || values[i] < -pol.eps_eq || values[i] > 1.0 + pol.eps_eq)
      throw ConstraintViolation("fuzzy subset " + name + ": value " + fmt(values[i]) + " at " +
                                fmt(carrier.value(i)) + " is outside [0,1]");
    values[i] = std::clamp(values[i], 0.0, 1.0);
  }
  auto lookup = [name, carrier, values, pol](double x) {
    auto i = carrier.index_of(x, pol);
    if (!i)
      throw ConstraintViolation("fuzzy subset " + name + ": " + fmt(x) +
                                " is not a carrier element");
    return values[*i];
  };
  return FuzzySubset(std::move(name), std::move(carrier), std::move(lookup), pol);
}

double FuzzySubset::operator()(double x) const {
  double v = fn_(x);
  if (std::isnan(v) || v < -pol_.eps_eq || v > 1.0 + pol_.eps_eq)
    throw ConstraintViolation("fuzzy subset " + name_ + ": membership " + fmt(v) + " at " +
                              fmt(x) + " is outside [0,1]");
  return std::clamp(v, 0.0, 1.0);
}

Aggregator::Aggregator(std::string name, std::size_t arity,
                       std::function<double(std::span<const double>)> fn,
                       const TolerancePolicy& pol)
    : name_(std::move(name)), arity_(arity), fn_(std::move(fn)) {
  if (arity_ < 2)
    throw ConstraintViolation("aggregator " + name_ + ": arity must be at least 2");
  std::vector<double> zeros(arity_, 0.0), ones(arity_, 1.0);
  double a0 = fn_(zeros), a1 = fn_(ones);
  if (!approx(a0, 0.0, pol))
    throw ConstraintViolation("aggregator " + name_ + ": A(0,...,0) = " + fmt(a0) +
                              ", expected 0");
  if (!approx(a1, 1.0, pol))
    throw ConstraintViolation("aggregator " + name_ + ": A(1,...,1) = " + fmt(a1) +
                              ", expected 1");
}

Aggregator Aggregator::min_n(std::size_t arity, const TolerancePolicy& pol) {
  auto fn = [](std::span<const double> xs) { return *std::min_element(xs.begin(), xs.end()); };
  return Aggregator("min[" + std::to_string(arity) + "]", arity, fn, pol);
}

Aggregator Aggregator::iterated(BinaryOp op, std::size_t arity, const TolerancePolicy& pol) {
  std::string name = op.name + "[" + std::to_string(arity) + "]";
  auto fn = [op](std::span<const double> xs) {
    double acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = op(acc, xs[i]);
    return acc;
  };
  return Aggregator(std::move(name), arity, std::move(fn), pol);
}

double Aggregator::operator()(std::span<const double> xs) const {
  if (xs.size() != arity_)
    throw ConstraintViolation("aggregator " + name_ + ": got " + std::to_string(xs.size()) +
                              " arguments, declared arity is " + std::to_string(arity_));
  return fn_(xs);
}

CheckReport check_a_fuzzy_submonoid(const Aggregator& a, const Monoid& m, const FuzzySubset& sigma,
                                    const TolerancePolicy& pol, const EnumerationPolicy& epol) {
  CheckReport rep;
  rep.notes.push_back("A = " + a.name() + ", M = " + m.name() + ", sigma = " + sigma.name());
  const Carrier& c = m.carrier();
  const std::size_t n = c.size();
  const std::size_t k = a.arity();

  std::vector<double> sv(n);
  for (std::size_t i = 0; i < n; ++i) sv[i] = sigma(c.value(i));

  auto& ineq = rep.add("inequality");
  auto eval_tuple = [&](const std::vector<std::size_t>& idx, std::vector<double>& args) {
    for (std::size_t i = 0; i < k; ++i) args[i] = sv[idx[i]];
    double lhs = a(args);
    std::size_t p = idx[0];
    for (std::size_t i = 1; i < k; ++i) p = m.op_index(p, idx[i]);
    return std::pair<double, double>(lhs, sv[p]);
  };
  auto record = [&](const std::vector<std::size_t>& idx, double lhs, double rhs) {
    Witness w;
    for (std::size_t i : idx) w.point.push_back(c.value(i));
    w.lhs = lhs;
    w.rhs = rhs;
    w.note = "aggregated membership exceeds sigma of the product";
    ineq.pass = false;
    ineq.witness = w;
  };

  long double total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= (long double)n;
  std::vector<std::size_t> idx(k, 0);
  std::vector<double> args(k);
  if (epol.mode == EnumerationPolicy::Mode::exhaustive) {
    if (total > (long double)epol.budget)
      throw BudgetExceeded("check_a_fuzzy_submonoid: " + fmt((double)total) +
                           " tuples exceed the budget of " + std::to_string(epol.budget) +
                           "; rerun with EnumerationPolicy::Mode::sampled");
    do {
      auto [lhs, rhs] = eval_tuple(idx, args);
      if (!leq(lhs, rhs, pol)) {
        record(idx, lhs, rhs);
        break;
      }
    } while (advance(idx, n));
    ineq.info = fmt((double)total) + " tuples";
  } else {
    std::mt19937_64 rng(epol.seed);
    std::optional<std::vector<std::size_t>> best;
    double best_lhs = 0, best_rhs = 0;
    for (std::uint64_t s = 0; s < epol.samples; ++s) {
      for (std::size_t i = 0; i < k; ++i)
        idx[i] = std::min(n - 1, (std::size_t)(uniform01(rng) * n));
      auto [lhs, rhs] = eval_tuple(idx, args);
      if (!leq(lhs, rhs, pol) && (!best || idx < *best)) {
        best = idx;
        best_lhs = lhs;
        best_rhs = rhs;
      }
    }
    if (best) record(*best, best_lhs, best_rhs);
    ineq.info = "sampled " + std::to_string(epol.samples) + " tuples, seed " +
                std::to_string(epol.seed);
  }

  auto& ident = rep.add("identity");
  double se = sv[m.identity_index()];
  if (!approx(se, 1.0, pol)) {
    ident.pass = false;
    ident.witness = Witness{{m.identity_value()}, se, 1.0, "sigma(e)"};
  }
  return rep;
}

CheckReport check_u_fuzzy_submonoid(const Uninorm& u, const Monoid& m, const FuzzySubset& sigma,
                                    const TolerancePolicy& pol, const EnumerationPolicy& epol) {
  return check_a_fuzzy_submonoid(Aggregator::iterated(u.as_binary_op(), 2, pol), m, sigma, pol,
                                 epol);
}

CheckReport check_u_fuzzy_submonoid(const BinaryOp& u, const Monoid& m, const FuzzySubset& sigma,
                                    const TolerancePolicy& pol, const EnumerationPolicy& epol) {
  return check_a_fuzzy_submonoid(Aggregator::iterated(u, 2, pol), m, sigma, pol, epol);
}

CheckReport check_f_fuzzy_submonoid(const Nullnorm& f, const Monoid& m, const FuzzySubset& sigma,
                                    const TolerancePolicy& pol, const EnumerationPolicy& epol) {
  auto rep = check_a_fuzzy_submonoid(Aggregator::iterated(f.as_binary_op(), 2, pol), m, sigma,
                                     pol, epol);
  double lo = 1.0;
  for (double x : m.carrier().values()) lo = std::min(lo, sigma(x));
  rep.notes.push_back("min sigma over carrier = " + fmt(lo) + ", absorbing element k = " +
                      fmt(f.k()) + (rep.pass() ? " (min sigma >= k - eps follows)" : ""));
  return rep;
}

std::vector<double> core_of(const FuzzySubset& sigma, const TolerancePolicy& pol) {
  std::vector<double> core;
  for (double x : sigma.carrier().values())
    if (approx(sigma(x), 1.0, pol)) core.push_back(x);
  return core;
}

MonotoneReport monotone_on_b(const FuzzySubset& sigma, double e, Direction dir,
                             const TolerancePolicy& pol) {
  if (!sigma.carrier().is_grid())
    throw ConstraintViolation("monotone_on_b requires a grid carrier");
  MonotoneReport r;
  for (double x : sigma.carrier().values())
    if (leq(e, sigma(x), pol)) r.b.push_back(x);

  for (std::size_t i = 0; i < r.b.size() && r.monotone; ++i) {
    double si = sigma(r.b[i]);
    for (std::size_t j = i + 1; j < r.b.size(); ++j) {
      double sj = sigma(r.b[j]);
      bool ok = dir == Direction::decreasing ? leq(sj, si, pol) : leq(si, sj, pol);
      if (!ok) {
        r.monotone = false;
        r.witness = dir == Direction::decreasing
                        ? Witness{{r.b[i], r.b[j]}, sj, si, "sigma increases on B"}
                        : Witness{{r.b[i], r.b[j]}, si, sj, "sigma decreases on B"};
        break;
      }
    }
  }
  double x0 = dir == Direction::decreasing ? 1.0 : 0.0;
  double s0 = sigma(x0);
  if (!approx(s0, 1.0, pol)) {
    r.endpoint = false;
    if (!r.witness) r.witness = Witness{{x0}, s0, 1.0, "sigma at the endpoint"};
  }
  return r;
}

SubadditiveReport subadditive_on(const std::function<ExtendedReal(ExtendedReal)>& f,
                                 std::span<const ExtendedReal> samples,
                                 const TolerancePolicy& pol) {
  SubadditiveReport r;
  for (std::size_t i = 0; i < samples.size() && r.subadditive; ++i) {
    for (std::size_t j = i; j < samples.size(); ++j) {
      ExtendedReal a = samples[i], b = samples[j];
      try {
        ExtendedReal fs = f(a + b);
        ExtendedReal sum = f(a) + f(b);
        ++r.pairs_checked;
        if (!leq(fs, sum, pol)) {
          r.subadditive = false;
          r.witness = Witness{{a.as_double(), b.as_double()}, fs.as_double(), sum.as_double(),
                              "f(a+b) > f(a) + f(b)"};
          break;
        }
      } catch (const UndefinedSum&) {
        ++r.undefined_skipped;
      }
    }
  }
  return r;
}

FuzzySubset sigma_from_generators(const MonotoneFunction& h,
                                  const std::function<ExtendedReal(ExtendedReal)>& f,
                                  const MonotoneFunction& t, SigmaConvention conv, Carrier carrier,
                                  const TolerancePolicy& pol) {
  bool reflected = conv == SigmaConvention::reflected;
  std::string name = std::string("sigma-") + (reflected ? "reflected" : "direct") + "(" +
                     (h.name().empty() ? "h" : h.name()) + "," +
                     (t.name().empty() ? "t" : t.name()) + ")";
  auto fn = [h, f, t, reflected, pol](double x) {
    ExtendedReal v = f(t(x));
    return h.pseudo_inverse(reflected ? -v : v, pol);
  };
  return FuzzySubset::from_fn(std::move(name), std::move(carrier), std::move(fn), pol);
}

SubnormCharacterization characterize_subnorm_via_f(const Uninorm& u, const MonotoneFunction& t_gen,
                                                   const FuzzySubset& sigma, const Carrier& grid,
                                                   const TolerancePolicy& pol) {
  if (u.kind() != Uninorm::Kind::representable)
    throw ConstraintViolation("characterize_subnorm_via_f requires a representable uninorm");
  const MonotoneFunction h = u.generator();
  TNorm t = TNorm::from_generator(t_gen, pol);

  SubnormCharacterization out;
  out.direct.notes.push_back("U = " + u.name() + ", T = " + t.name() + ", sigma = " +
                             sigma.name() + ", " + grid.describe());
  auto& ineq = out.direct.add("inequality");
  for (std::size_t i = 0; i < grid.size() && ineq.pass; ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      double x = grid.value(i), y = grid.value(j);
      double lhs = u(sigma(x), sigma(y));
      double rhs = sigma(t(x, y));
      if (!leq(lhs, rhs, pol)) {
        ineq.pass = false;
        ineq.witness = Witness{{x, y}, lhs, rhs, "U(sigma(x),sigma(y)) > sigma(T(x,y))"};
        break;
      }
    }
  }

  std::vector<ExtendedReal> samples;
  for (double x : grid.values()) samples.push_back(t_gen(x));
  samples.push_back(0.0);
  samples.push_back(t_gen(0.0));
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

  auto fmap = [h, t_gen, sigma, pol](ExtendedReal a) -> ExtendedReal {
    return -h(sigma(t_gen.pseudo_inverse(a, pol)));
  };
  for (ExtendedReal a : samples) out.f_samples.emplace_back(a, fmap(a));

  auto sub = subadditive_on(fmap, samples, pol);
  out.subadditivity.notes.push_back("f = (-h) o sigma o pseudo-inverse of t, " +
                                    std::to_string(samples.size()) + " sample points");
  auto& cond = out.subadditivity.add("subadditivity");
  cond.pass = sub.subadditive;
  cond.witness = sub.witness;
  cond.info = std::to_string(sub.pairs_checked) + " pairs, " +
              std::to_string(sub.undefined_skipped) + " undefined sums skipped";
  return out;
}

LatticeFuzzySubset::LatticeFuzzySubset(std::string name, Carrier carrier, BoundedLattice lattice,
                                       std::vector<std::size_t> values)
    : name_(std::move(name)),
      carrier_(std::move(carrier)),
      lattice_(std::move(lattice)),
      values_(std::move(values)) {
  if (values_.size() != carrier_.size())
    throw ConstraintViolation("lattice fuzzy subset " + name_ + ": " +
                              std::to_string(values_.size()) + " values for " +
                              std::to_string(carrier_.size()) + " carrier elements");
  for (std::size_t v : values_)
    if (v >= lattice_.size())
      throw ConstraintViolation("lattice fuzzy subset " + name_ + ": value index " +
                                std::to_string(v) + " is not a lattice element");
}

CheckReport check_lattice_fuzzy_submonoid(const Monoid& m, const LatticeFuzzySubset& sigma,
                                          LatticeConnective conn, const TolerancePolicy& pol) {
  const Carrier& c = m.carrier();
  if (sigma.carrier().size() != c.size())
    throw ConstraintViolation("lattice fuzzy subset " + sigma.name() +
                              ": carrier does not match the monoid's");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!approx(sigma.carrier().value(i), c.value(i), pol))
      throw ConstraintViolation("lattice fuzzy subset " + sigma.name() +
                                ": carrier does not match the monoid's");

  const BoundedLattice& lat = sigma.lattice();
  bool is_meet = conn == LatticeConnective::meet;
  CheckReport rep;
  rep.notes.push_back(std::string(is_meet ? "meet" : "join") + " connective, M = " + m.name() +
                      ", sigma = " + sigma.name());

  auto& ineq = rep.add("inequality");
  for (std::size_t i = 0; i < c.size() && ineq.pass; ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      std::size_t a = sigma.at(i), b = sigma.at(j);
      std::size_t lhs = is_meet ? lat.meet(a, b) : lat.join(a, b);
      std::size_t rhs = sigma.at(m.op_index(i, j));
      if (!lat.leq(lhs, rhs)) {
        ineq.pass = false;
        ineq.witness = Witness{{c.value(i), c.value(j)},
                               (double)lhs,
                               (double)rhs,
                               (is_meet ? std::string("meet") : std::string("join")) +
                                   " of memberships = " + lat.label(lhs) +
                                   " is not <= sigma(x o y) = " + lat.label(rhs)};
        break;
      }
    }
  }

  auto& ident = rep.add("identity");
  std::size_t se = sigma.at(m.identity_index());
  if (se != lat.top()) {
    ident.pass = false;
    ident.witness = Witness{{m.identity_value()},
                            (double)se,
                            (double)lat.top(),
                            "sigma(e) = " + lat.label(se) + ", top = " + lat.label(lat.top())};
  }
  return rep;
}

CheckReport nonexistence_probe(ProbeFamily family, std::span<const Uninorm> candidates,
                               const BinaryOp& base, const Carrier& grid,
                               const TolerancePolicy& pol) {
  bool tnorm_case = family == ProbeFamily::identity_sigma_tnorm;
  CheckReport rep;
  rep.notes.push_back(tnorm_case
                          ? "sigma(x) = x against the t-norm " + base.name
                          : "sigma(x) = 1 - x against the t-conorm " + base.name);
  auto sigma = [tnorm_case](double v) { return tnorm_case ? v : 1.0 - v; };

  for (const Uninorm& u : candidates) {
    auto& cond = rep.add(u.name());
    double e = u.e();
    double x = tnorm_case ? e : 1.0 - e;
    bool found = false;
    for (double y : grid.values()) {
      bool in_pattern = tnorm_case ? (y > e && !approx(y, e, pol)) : (y < 1.0 - e && !approx(y, 1.0 - e, pol));
      if (!in_pattern) continue;
      double lhs = u(sigma(x), sigma(y));
      double rhs = sigma(base(x, y));
      if (!leq(lhs, rhs, pol)) {
        cond.witness = Witness{{x, y}, lhs, rhs,
                               "U(sigma(x),sigma(y)) > sigma of the product at the proof-pattern "
                               "pair"};
        cond.info = "violates as predicted";
        found = true;
        break;
      }
    }
    if (!found) {
      cond.pass = false;
      cond.info = "no violating pair found on the grid; nonexistence not confirmed";
    }
  }
  return rep;
}

BinaryOp scaled_min_structure(const TNorm& t, double e, const TolerancePolicy& pol) {
  (void)pol;
  if (!(e > 0.0 && e < 1.0))
    throw ConstraintViolation("scaled-min structure: e = " + fmt(e) + " must lie in (0,1)");
  TNorm tc = t;
  auto fn = [tc, e](double x, double y) {
    if (x <= e && y <= e) return e * tc(x / e, y / e);
    if (x > e && y > e)  // the rescaled maximum, written out as displayed
      return e + (1.0 - e) * std::max((x - e) / (1.0 - e), (y - e) / (1.0 - e));
    return std::min(x, y);
  };
  return BinaryOp{"scaledmin(" + t.name() + "," + fmt(e) + ")", std::move(fn)};
}

FuzzySubset random_piecewise_sigma(std::uint64_t seed, Carrier carrier,
                                   const TolerancePolicy& pol) {
  std::mt19937_64 rng(seed);
  std::size_t knots = 4 + (std::size_t)(uniform01(rng) * 5);  // 4..8
  std::vector<double> xs{0.0};
  for (std::size_t i = 0; i + 2 < knots; ++i) xs.push_back(0.02 + 0.96 * uniform01(rng));
  xs.push_back(1.0);
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 1; i + 1 < xs.size(); ++i)
    if (xs[i] - xs[i - 1] < 1e-6) xs[i] = xs[i - 1] + 1e-6;
  std::vector<double> vs;
  for (std::size_t i = 0; i < xs.size(); ++i) vs.push_back(uniform01(rng));

  auto fn = [xs, vs](double x) {
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.begin()) return vs.front();
    if (it == xs.end()) return vs.back();
    std::size_t j = (std::size_t)(it - xs.begin());
    double w = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return vs[j - 1] + w * (vs[j] - vs[j - 1]);
  };
  return FuzzySubset::from_fn("random-pl(seed=" + std::to_string(seed) + ")", std::move(carrier),
                              std::move(fn), pol);
}

FuzzySubset random_step_sigma(std::uint64_t seed, Carrier carrier,
                              std::vector<double> avoid_levels, double snap,
                              const TolerancePolicy& pol) {
  std::mt19937_64 rng(seed);
  std::size_t pieces = 2 + (std::size_t)(uniform01(rng) * 5);  // 2..6
  std::vector<double> breaks;
  for (std::size_t i = 0; i + 1 < pieces; ++i) breaks.push_back(uniform01(rng));
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> vs;
  for (std::size_t i = 0; i < pieces; ++i) {
    double v = uniform01(rng);
    for (int pass = 0; pass < 8; ++pass) {
      bool moved = false;
      for (double level : avoid_levels) {
        if (std::abs(v - level) < snap) {
          v = std::clamp(v >= level ? level + snap : level - snap, 0.0, 1.0);
          moved = true;
        }
      }
      if (!moved) break;
    }
    vs.push_back(v);
  }
  auto fn = [breaks, vs](double x) {
    std::size_t j = (std::size_t)(std::upper_bound(breaks.begin(), breaks.end(), x) -
                                  breaks.begin());
    return vs[j];
  };
  return FuzzySubset::from_fn("random-step(seed=" + std::to_string(seed) + ")",
                              std::move(carrier), std::move(fn), pol);
}

}  // namespace fuzzalg
