#include "fuzzalg/vague.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <utility>

namespace fuzzalg {
namespace {

double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

bool advance(std::vector<std::size_t>& idx, std::size_t n) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < n) return true;
    idx[i] = 0;
  }
  return false;
}

// Validates a membership degree within eps_eq and clamps it into [0,1].
double admit_unit(double v, const char* who, const TolerancePolicy& pol) {
  if (!(v >= -pol.eps_eq && v <= 1.0 + pol.eps_eq))
    throw ConstraintViolation(std::string(who) + ": value " + fmt(v) + " outside [0,1]");
  return std::min(1.0, std::max(0.0, v));
}

void require_shared_carrier(const Carrier& a, const Carrier& b, const char* who) {
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) same = a.value(i) == b.value(i);
  if (!same)
    throw ConstraintViolation(std::string(who) + ": operands live on different carriers");
}

// Scans all n^k index tuples in lexicographic order (or samples them when
// `sampled`), recording the smallest violating tuple as the witness.
void scan_tuples(const Carrier& c, std::size_t k, bool sampled, const EnumerationPolicy& epol,
                 ConditionResult& out, const char* note,
                 const std::function<std::optional<std::pair<double, double>>(
                     const std::vector<std::size_t>&)>& violation) {
  const std::size_t n = c.size();
  std::vector<std::size_t> idx(k, 0);
  auto record = [&](const std::vector<std::size_t>& t, double lhs, double rhs) {
    Witness w;
    for (std::size_t i : t) w.point.push_back(c.value(i));
    w.lhs = lhs;
    w.rhs = rhs;
    w.note = note;
    out.pass = false;
    out.witness = w;
  };
  if (!sampled) {
    long double total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= (long double)n;
    do {
      if (auto bad = violation(idx)) {
        record(idx, bad->first, bad->second);
        break;
      }
    } while (advance(idx, n));
    out.info = fmt((double)total) + " tuples";
  } else {
    std::mt19937_64 rng(epol.seed);
    std::optional<std::vector<std::size_t>> best;
    double best_lhs = 0, best_rhs = 0;
    for (std::uint64_t s = 0; s < epol.samples; ++s) {
      for (std::size_t i = 0; i < k; ++i)
        idx[i] = std::min(n - 1, (std::size_t)(uniform01(rng) * n));
      if (auto bad = violation(idx)) {
        if (!best || idx < *best) {
          best = idx;
          best_lhs = bad->first;
          best_rhs = bad->second;
        }
      }
    }
    if (best) record(*best, best_lhs, best_rhs);
    out.info = "sampled " + std::to_string(epol.samples) + " tuples, seed " +
               std::to_string(epol.seed);
  }
}

constexpr std::size_t kExhaustiveCap = 8;  // carrier cap for 6- and 7-tuple scans

}  // namespace

// ---------------------------------------------------------------------------
// IndistinguishabilityOp

IndistinguishabilityOp::IndistinguishabilityOp(std::string name, Carrier carrier,
                                               std::vector<double> upper, TolerancePolicy pol)
    : name_(std::move(name)), carrier_(std::move(carrier)), upper_(std::move(upper)),
      pol_(pol) {}

IndistinguishabilityOp IndistinguishabilityOp::from_fn(
    std::string name, Carrier carrier, const std::function<double(double, double)>& fn,
    const TolerancePolicy& pol) {
  const std::size_t n = carrier.size();
  std::vector<double> upper;
  upper.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double v = fn(carrier.value(i), carrier.value(j));
      if (i == j) {
        if (!approx(v, 1.0, pol))
          throw ConstraintViolation("IndistinguishabilityOp: E(x,x) = " + fmt(v) +
                                    " at x = " + fmt(carrier.value(i)) + "; must be 1");
        v = 1.0;
      } else {
        v = admit_unit(v, "IndistinguishabilityOp", pol);
      }
      upper.push_back(v);
    }
  return IndistinguishabilityOp(std::move(name), std::move(carrier), std::move(upper), pol);
}

IndistinguishabilityOp IndistinguishabilityOp::from_table(
    std::string name, Carrier carrier, const std::vector<std::vector<double>>& table,
    const TolerancePolicy& pol) {
  const std::size_t n = carrier.size();
  if (table.size() != n)
    throw ConstraintViolation("IndistinguishabilityOp: table has " +
                              std::to_string(table.size()) + " rows for a carrier of size " +
                              std::to_string(n));
  for (const auto& row : table)
    if (row.size() != n)
      throw ConstraintViolation("IndistinguishabilityOp: ragged table row");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (table[i][j] != table[j][i])
        throw ConstraintViolation("IndistinguishabilityOp: asymmetric at (" +
                                  fmt(carrier.value(i)) + ", " + fmt(carrier.value(j)) + ")");
  auto look = [&](double x, double y) {
    for (std::size_t i = 0; i < n; ++i)
      if (carrier.value(i) == x)
        for (std::size_t j = 0; j < n; ++j)
          if (carrier.value(j) == y) return table[i][j];
    return 0.0;  // unreachable: from_fn feeds carrier values back in
  };
  return from_fn(std::move(name), carrier, look, pol);
}

IndistinguishabilityOp IndistinguishabilityOp::crisp(Carrier carrier,
                                                     const TolerancePolicy& pol) {
  return from_fn("crisp", std::move(carrier),
                 [](double x, double y) { return x == y ? 1.0 : 0.0; }, pol);
}

IndistinguishabilityOp IndistinguishabilityOp::all_one(Carrier carrier,
                                                       const TolerancePolicy& pol) {
  return from_fn("one", std::move(carrier), [](double, double) { return 1.0; }, pol);
}

IndistinguishabilityOp IndistinguishabilityOp::constant(Carrier carrier, double c,
                                                        const TolerancePolicy& pol) {
  admit_unit(c, "IndistinguishabilityOp::constant", pol);
  return from_fn("const(" + fmt(c) + ")", std::move(carrier),
                 [c](double x, double y) { return x == y ? 1.0 : c; }, pol);
}

double IndistinguishabilityOp::at(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const std::size_t n = carrier_.size();
  return upper_[i * n - i * (i - 1) / 2 + (j - i)];
}

double IndistinguishabilityOp::operator()(double x, double y) const {
  auto i = carrier_.index_of(x, pol_);
  auto j = carrier_.index_of(y, pol_);
  if (!i || !j)
    throw ConstraintViolation("IndistinguishabilityOp: " + fmt(i ? y : x) +
                              " is not a carrier element");
  return at(*i, *j);
}

bool IndistinguishabilityOp::separates_points(const TolerancePolicy& pol) const {
  const std::size_t n = carrier_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (at(i, j) >= 1.0 - pol.eps_eq) return false;
  return true;
}

// ---------------------------------------------------------------------------
// VagueOp

VagueOp::VagueOp(std::string name, Carrier carrier, std::vector<double> values,
                 TolerancePolicy pol)
    : name_(std::move(name)), carrier_(std::move(carrier)), values_(std::move(values)),
      pol_(pol) {}

VagueOp VagueOp::from_fn(std::string name, Carrier carrier,
                         const std::function<double(std::size_t, std::size_t, std::size_t)>& fn,
                         const TolerancePolicy& pol) {
  const std::size_t n = carrier.size();
  std::vector<double> values(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        values[(i * n + j) * n + k] = admit_unit(fn(i, j, k), "VagueOp", pol);
  return VagueOp(std::move(name), std::move(carrier), std::move(values), pol);
}

VagueOp VagueOp::from_table(std::string name, Carrier carrier, std::vector<double> values,
                            const TolerancePolicy& pol) {
  const std::size_t n = carrier.size();
  if (values.size() != n * n * n)
    throw ConstraintViolation("VagueOp: table has " + std::to_string(values.size()) +
                              " entries; expected " + std::to_string(n * n * n));
  for (auto& v : values) v = admit_unit(v, "VagueOp", pol);
  return VagueOp(std::move(name), std::move(carrier), std::move(values), pol);
}

double VagueOp::at(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t n = carrier_.size();
  return values_[(i * n + j) * n + k];
}

// ---------------------------------------------------------------------------
// Checks

QuaternaryAggregator left_iterated_4(const BinaryOp& a) {
  auto fn = a.fn;
  return [fn](double p, double q, double r, double s) { return fn(fn(fn(p, q), r), s); };
}

IndistinguishabilityReport check_indistinguishability(const BinaryOp& a,
                                                      const IndistinguishabilityOp& e,
                                                      const TolerancePolicy& pol) {
  IndistinguishabilityReport out;
  CheckReport& rep = out.report;
  rep.notes.push_back("A = " + a.name + ", E = " + e.name());
  const Carrier& c = e.carrier();
  const std::size_t n = c.size();

  auto& refl = rep.add("reflexivity");
  for (std::size_t i = 0; i < n; ++i)
    if (e.at(i, i) != 1.0) {
      refl.pass = false;
      refl.witness = Witness{{c.value(i)}, e.at(i, i), 1.0, "E(x,x)"};
      break;
    }

  auto& sym = rep.add("symmetry");
  for (std::size_t i = 0; i < n && sym.pass; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (e.at(i, j) != e.at(j, i)) {
        sym.pass = false;
        sym.witness = Witness{{c.value(i), c.value(j)}, e.at(i, j), e.at(j, i), "E(x,y) vs E(y,x)"};
        break;
      }

  auto& trans = rep.add("transitivity");
  scan_tuples(c, 3, false, {}, trans, "a(E(x,y),E(y,z)) exceeds E(x,z)",
              [&](const std::vector<std::size_t>& t)
                  -> std::optional<std::pair<double, double>> {
                double lhs = a(e.at(t[0], t[1]), e.at(t[1], t[2]));
                double rhs = e.at(t[0], t[2]);
                if (!leq(lhs, rhs, pol)) return std::pair<double, double>(lhs, rhs);
                return std::nullopt;
              });

  out.separates_points = e.separates_points(pol);
  rep.notes.push_back(out.separates_points ? "separates points" : "does not separate points");
  return out;
}

CheckReport check_regular(const IndistinguishabilityOp& e, const Monoid& m,
                          const TolerancePolicy& pol) {
  require_shared_carrier(e.carrier(), m.carrier(), "check_regular");
  CheckReport rep;
  rep.notes.push_back("E = " + e.name() + ", M = " + m.name());
  const Carrier& c = m.carrier();

  auto& right = rep.add("right-regularity");
  scan_tuples(c, 3, false, {}, right, "right multiplication by z",
              [&](const std::vector<std::size_t>& t)
                  -> std::optional<std::pair<double, double>> {
                double lhs = e.at(t[0], t[1]);
                double rhs = e.at(m.op_index(t[0], t[2]), m.op_index(t[1], t[2]));
                if (!leq(lhs, rhs, pol)) return std::pair<double, double>(lhs, rhs);
                return std::nullopt;
              });

  auto& left = rep.add("left-regularity");
  scan_tuples(c, 3, false, {}, left, "left multiplication by z",
              [&](const std::vector<std::size_t>& t)
                  -> std::optional<std::pair<double, double>> {
                double lhs = e.at(t[0], t[1]);
                double rhs = e.at(m.op_index(t[2], t[0]), m.op_index(t[2], t[1]));
                if (!leq(lhs, rhs, pol)) return std::pair<double, double>(lhs, rhs);
                return std::nullopt;
              });
  return rep;
}

VagueOp vague_from_monoid(const IndistinguishabilityOp& e, const Monoid& m,
                          const TolerancePolicy& pol) {
  require_shared_carrier(e.carrier(), m.carrier(), "vague_from_monoid");
  auto reg = check_regular(e, m, pol);
  if (!reg.pass()) {
    std::string msg = "vague_from_monoid: E is not regular with respect to the operation";
    for (const auto& cond : reg.conditions)
      if (!cond.pass && cond.witness) {
        msg += "; " + cond.name + " fails at " + cond.witness->str();
        break;
      }
    throw RegularityRequired(msg);
  }
  return VagueOp::from_fn(
      "from(" + e.name() + ", " + m.op_name() + ")", m.carrier(),
      [&](std::size_t i, std::size_t j, std::size_t k) { return e.at(m.op_index(i, j), k); },
      pol);
}

CheckReport check_vague_binary(const BinaryOp& a, const IndistinguishabilityOp& e,
                               const VagueOp& v, const TolerancePolicy& pol,
                               const EnumerationPolicy& epol, const QuaternaryAggregator& ext4) {
  require_shared_carrier(e.carrier(), v.carrier(), "check_vague_binary");
  CheckReport rep;
  rep.notes.push_back("A = " + a.name + ", E = " + e.name() + ", V = " + v.name());
  const Carrier& c = v.carrier();
  const std::size_t n = c.size();
  auto a4 = ext4 ? ext4 : left_iterated_4(a);

  auto& ext = rep.add("extensionality");
  bool sample6 = epol.mode == EnumerationPolicy::Mode::sampled || n > kExhaustiveCap;
  scan_tuples(c, 6, sample6, epol, ext, "v(x',y',z') below the aggregated bound",
              [&](const std::vector<std::size_t>& t)
                  -> std::optional<std::pair<double, double>> {
                double lhs = a4(v.at(t[0], t[1], t[2]), e.at(t[0], t[3]), e.at(t[1], t[4]),
                                e.at(t[2], t[5]));
                double rhs = v.at(t[3], t[4], t[5]);
                if (!leq(lhs, rhs, pol)) return std::pair<double, double>(lhs, rhs);
                return std::nullopt;
              });

  auto& fun = rep.add("functionality");
  bool sample4 = epol.mode == EnumerationPolicy::Mode::sampled ||
                 (long double)n * n * n * n > (long double)epol.budget;
  scan_tuples(c, 4, sample4, epol, fun, "E(z,z') below the aggregated pair",
              [&](const std::vector<std::size_t>& t)
                  -> std::optional<std::pair<double, double>> {
                double lhs = a(v.at(t[0], t[1], t[2]), v.at(t[0], t[1], t[3]));
                double rhs = e.at(t[2], t[3]);
                if (!leq(lhs, rhs, pol)) return std::pair<double, double>(lhs, rhs);
                return std::nullopt;
              });

  auto& tot = rep.add("totality");
  for (std::size_t i = 0; i < n && tot.pass; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double best = 0.0;
      for (std::size_t k = 0; k < n; ++k) best = std::max(best, v.at(i, j, k));
      if (!(best >= 1.0 - pol.eps_eq)) {
        tot.pass = false;
        tot.witness = Witness{{c.value(i), c.value(j)}, best, 1.0, "no z attains membership 1"};
        break;
      }
    }
  tot.info = fmt((double)(n * n)) + " pairs";
  return rep;
}

std::vector<std::size_t> vague_identity_candidates(const VagueOp& v,
                                                   const TolerancePolicy& pol) {
  const std::size_t n = v.carrier().size();
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = v.at(e, x, x) >= 1.0 - pol.eps_eq && v.at(x, e, x) >= 1.0 - pol.eps_eq;
    if (ok) out.push_back(e);
  }
  return out;
}

CheckReport check_vague_monoid(const BinaryOp& a, const IndistinguishabilityOp& e,
                               const VagueOp& v, const TolerancePolicy& pol,
                               const EnumerationPolicy& epol, const QuaternaryAggregator& ext4) {
  require_shared_carrier(e.carrier(), v.carrier(), "check_vague_monoid");
  CheckReport rep;
  rep.notes.push_back("A = " + a.name + ", E = " + e.name() + ", V = " + v.name());
  const Carrier& c = v.carrier();
  const std::size_t n = c.size();
  auto a4 = ext4 ? ext4 : left_iterated_4(a);

  auto& assoc = rep.add("associativity");
  bool sample7 = epol.mode == EnumerationPolicy::Mode::sampled || n > kExhaustiveCap;
  // Tuple order (x, y, z, d, m, q, w).
  scan_tuples(c, 7, sample7, epol, assoc, "E(m,w) below the aggregated chain",
              [&](const std::vector<std::size_t>& t)
                  -> std::optional<std::pair<double, double>> {
                double lhs = a4(v.at(t[1], t[2], t[3]), v.at(t[0], t[3], t[4]),
                                v.at(t[0], t[1], t[5]), v.at(t[5], t[2], t[6]));
                double rhs = e.at(t[4], t[6]);
                if (!leq(lhs, rhs, pol)) return std::pair<double, double>(lhs, rhs);
                return std::nullopt;
              });

  auto& ident = rep.add("identity");
  auto cands = vague_identity_candidates(v, pol);
  if (cands.empty()) {
    ident.pass = false;
    ident.info = "no identity element";
  } else {
    std::string list;
    for (std::size_t i : cands) {
      if (!list.empty()) list += ", ";
      list += fmt(c.value(i));
    }
    ident.info = "candidates: " + list;
  }
  return rep;
}

Monoid associated_monoid(const VagueOp& v, const IndistinguishabilityOp& e,
                         const TolerancePolicy& pol) {
  require_shared_carrier(e.carrier(), v.carrier(), "associated_monoid");
  if (!e.separates_points(pol))
    throw SeparationViolated("associated_monoid: E does not separate points");
  const Carrier& c = v.carrier();
  const std::size_t n = c.size();

  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> hits;
      for (std::size_t k = 0; k < n; ++k)
        if (v.at(i, j, k) >= 1.0 - pol.eps_eq) hits.push_back(k);
      const std::string pair =
          "(x, y) = (" + fmt(c.value(i)) + ", " + fmt(c.value(j)) + ")";
      if (hits.empty())
        throw MissingProduct("associated_monoid: no product at level 1 for " + pair);
      if (hits.size() > 1)
        throw SeparationViolated("associated_monoid: two products at level 1 for " + pair +
                                 ": z = " + fmt(c.value(hits[0])) + " and z = " +
                                 fmt(c.value(hits[1])));
      table[i][j] = hits[0];
    }

  std::size_t e_idx = n;
  for (std::size_t cand = 0; cand < n && e_idx == n; ++cand) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = table[cand][j] == j && table[j][cand] == j;
    if (ok) e_idx = cand;
  }
  if (e_idx == n)
    throw ConstraintViolation("associated_monoid: recovered operation has no identity element");
  return Monoid::from_table(c, std::move(table), e_idx, pol);
}

CommutativityReport check_commutativity_correspondence(const BinaryOp& a,
                                                       const IndistinguishabilityOp& e,
                                                       const VagueOp& v, const Monoid& m,
                                                       const TolerancePolicy& pol) {
  require_shared_carrier(e.carrier(), v.carrier(), "check_commutativity_correspondence");
  require_shared_carrier(e.carrier(), m.carrier(), "check_commutativity_correspondence");
  const Carrier& c = m.carrier();

  CommutativityReport out;
  out.vague_side.name = "vague-commutativity";
  // Tuple order (x, y, m, w).
  scan_tuples(c, 4, false, {}, out.vague_side, "E(m,w) below the aggregated pair",
              [&](const std::vector<std::size_t>& t)
                  -> std::optional<std::pair<double, double>> {
                double lhs = a(v.at(t[0], t[1], t[2]), v.at(t[1], t[0], t[3]));
                double rhs = e.at(t[2], t[3]);
                if (!leq(lhs, rhs, pol)) return std::pair<double, double>(lhs, rhs);
                return std::nullopt;
              });

  out.monoid_side.name = "monoid-commutativity";
  for (std::size_t i = 0; i < c.size() && out.monoid_side.pass; ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (m.op_index(i, j) != m.op_index(j, i)) {
        out.monoid_side.pass = false;
        out.monoid_side.witness =
            Witness{{c.value(i), c.value(j)}, c.value(m.op_index(i, j)),
                    c.value(m.op_index(j, i)), "x*y vs y*x"};
        break;
      }

  out.correspondence.name = "correspondence";
  out.correspondence.pass = out.vague_side.pass == out.monoid_side.pass;
  auto verdict = [](bool b) { return b ? std::string("commutative") : "non-commutative"; };
  out.correspondence.info =
      "vague: " + verdict(out.vague_side.pass) + ", monoid: " + verdict(out.monoid_side.pass);
  return out;
}

CheckReport check_homomorphism(const std::vector<std::size_t>& f_map, const VagueOp& src_v,
                               const IndistinguishabilityOp& src_e, const VagueOp& dst_v,
                               const IndistinguishabilityOp& dst_e, const TolerancePolicy& pol) {
  const Carrier& sc = src_v.carrier();
  const Carrier& dc = dst_v.carrier();
  if (f_map.size() != sc.size())
    throw ConstraintViolation("check_homomorphism: f covers " + std::to_string(f_map.size()) +
                              " of " + std::to_string(sc.size()) + " domain elements");
  for (std::size_t i : f_map)
    if (i >= dc.size())
      throw ConstraintViolation("check_homomorphism: f maps outside the codomain carrier");

  CheckReport rep;
  rep.notes.push_back("f: (" + src_v.name() + ", " + src_e.name() + ") -> (" + dst_v.name() +
                      ", " + dst_e.name() + ")");

  auto& ineq = rep.add("inequality");
  scan_tuples(sc, 3, false, {}, ineq, "image membership below the source",
              [&](const std::vector<std::size_t>& t)
                  -> std::optional<std::pair<double, double>> {
                double lhs = src_v.at(t[0], t[1], t[2]);
                double rhs = dst_v.at(f_map[t[0]], f_map[t[1]], f_map[t[2]]);
                if (!leq(lhs, rhs, pol)) return std::pair<double, double>(lhs, rhs);
                return std::nullopt;
              });

  if (ineq.pass) {
    auto& im = rep.add("identity-image");
    auto cands = vague_identity_candidates(src_v, pol);
    if (cands.empty()) {
      im.info = "no identity element in the domain";
    } else {
      for (std::size_t e : cands) {
        const std::size_t fe = f_map[e];
        for (std::size_t x = 0; x < dc.size(); ++x) {
          if (!(dst_v.at(fe, x, x) >= 1.0 - pol.eps_eq)) {
            im.pass = false;
            im.witness = Witness{{dc.value(fe), dc.value(x), dc.value(x)}, dst_v.at(fe, x, x),
                                 1.0, "f(e) as left identity"};
            break;
          }
          if (!(dst_v.at(x, fe, x) >= 1.0 - pol.eps_eq)) {
            im.pass = false;
            im.witness = Witness{{dc.value(x), dc.value(fe), dc.value(x)}, dst_v.at(x, fe, x),
                                 1.0, "f(e) as right identity"};
            break;
          }
        }
        if (!im.pass) break;
      }
      if (im.pass)
        im.info = "f(e) = " + fmt(dc.value(f_map[cands[0]])) + " is an identity of the codomain";
    }
  }
  return rep;
}

FuzzySubset kernel(const Carrier& src, const std::vector<std::size_t>& f_map,
                   const IndistinguishabilityOp& dst_e, double dst_identity,
                   const TolerancePolicy& pol) {
  const Carrier& dc = dst_e.carrier();
  if (f_map.size() != src.size())
    throw ConstraintViolation("kernel: f covers " + std::to_string(f_map.size()) + " of " +
                              std::to_string(src.size()) + " domain elements");
  for (std::size_t i : f_map)
    if (i >= dc.size())
      throw ConstraintViolation("kernel: f maps outside the codomain carrier");
  auto e_opt = dc.index_of(dst_identity, pol);
  if (!e_opt)
    throw ConstraintViolation("kernel: identity " + fmt(dst_identity) +
                              " is not a codomain carrier element");
  const std::size_t e_idx = *e_opt;
  std::vector<double> values(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) values[i] = dst_e.at(f_map[i], e_idx);
  return FuzzySubset::from_table("ker(" + dst_e.name() + ")", src, values, pol);
}

std::vector<Monoid> vague_test_corpus(std::size_t n, const TolerancePolicy& pol) {
  if (n < 2)
    throw ConstraintViolation("vague_test_corpus: need n >= 2 for a non-commutative member");
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = (double)i;
  Carrier c = Carrier::finite(vals, {}, pol);
  const double top = (double)n;

  std::vector<Monoid> out;
  out.push_back(Monoid::from_op(
      c, BinaryOp{"max", [](double a, double b) { return std::max(a, b); }}, 0.0, pol));
  out.push_back(Monoid::from_op(
      c, BinaryOp{"min", [](double a, double b) { return std::min(a, b); }}, top, pol));
  out.push_back(Monoid::from_op(
      c, BinaryOp{"addcap" + std::to_string(n),
                  [top](double a, double b) { return std::min(a + b, top); }},
      0.0, pol));
  out.push_back(Monoid::from_op(
      c, BinaryOp{"leftzero+e",
                  [](double a, double b) { return a == 0.0 ? b : (b == 0.0 ? a : a); }},
      0.0, pol));
  return out;
}

}  // namespace fuzzalg
