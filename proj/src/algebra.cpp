#include "fuzzalg/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzalg {

Carrier Carrier::finite(std::vector<double> values, std::vector<std::string> labels,
                        const TolerancePolicy& pol) {
  if (values.empty()) throw ConstraintViolation("Carrier: at least one element is required");
  if (!labels.empty() && labels.size() != values.size())
    throw ConstraintViolation("Carrier: label count must match value count");
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (std::abs(values[i] - values[j]) <= pol.eps_eq)
        throw ConstraintViolation("Carrier: elements must be pairwise distinct, got " +
                                  fmt(values[i]) + " twice");
  Carrier c;
  if (labels.empty())
    for (double v : values) labels.push_back(fmt(v));
  c.values_ = std::move(values);
  c.labels_ = std::move(labels);
  return c;
}

Carrier Carrier::grid(int n) {
  Carrier c;
  c.values_ = uniform_grid(n);
  for (double v : c.values_) c.labels_.push_back(fmt(v));
  c.grid_n_ = n;
  return c;
}

std::optional<std::size_t> Carrier::index_of(double v, const TolerancePolicy& pol) const {
  if (is_grid()) {
    const long i = std::lround(v * (grid_n_ - 1));
    if (i < 0 || i >= static_cast<long>(values_.size())) return std::nullopt;
    const auto idx = static_cast<std::size_t>(i);
    if (std::abs(v - values_[idx]) <= pol.eps_eq) return idx;
    return std::nullopt;
  }
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (std::abs(v - values_[i]) <= pol.eps_eq) return i;
  return std::nullopt;
}

std::string Carrier::describe() const {
  if (is_grid()) return "grid(" + std::to_string(grid_n_) + ")";
  std::string out = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ",";
    out += labels_[i];
  }
  return out + "}";
}

Carrier discrete_carrier(double anchor, int n, int m) {
  if (!(anchor > 0.0 && anchor < 1.0))
    throw ConstraintViolation("discrete_carrier: anchor must lie in (0,1)");
  if (n < 1 || m < 1) throw ConstraintViolation("discrete_carrier: need n >= 1 and m >= 1");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n + m + 1));
  for (int i = 0; i < n; ++i) values.push_back(static_cast<double>(i) * anchor / n);
  values.push_back(anchor);
  for (int j = 1; j < m; ++j)
    values.push_back(anchor + static_cast<double>(j) * (1.0 - anchor) / m);
  values.push_back(1.0);
  return Carrier::finite(std::move(values));
}

namespace {

std::optional<std::size_t> match_in(std::span<const double> values, double v,
                                    const TolerancePolicy& pol) {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (std::abs(v - values[i]) <= pol.eps_eq) return i;
  return std::nullopt;
}

}  // namespace

CheckReport check_monoid(const Carrier& c, const BinaryOp& op, double e_value,
                         const TolerancePolicy& pol) {
  CheckReport rep;
  const auto& vals = c.values();
  const std::size_t n = vals.size();

  auto& closure = rep.add("closure");
  for (std::size_t i = 0; i < n && closure.pass; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = op(vals[i], vals[j]);
      if (!c.index_of(v, pol)) {
        closure.pass = false;
        closure.witness = Witness{{vals[i], vals[j]}, v, 0.0, "product off the carrier"};
        break;
      }
    }
  const bool closed = closure.pass;  // closure is invalidated by the adds below

  auto& ident = rep.add("identity");
  if (!c.index_of(e_value, pol)) {
    ident.pass = false;
    ident.witness = Witness{{e_value}, e_value, 0.0, "identity is not a carrier element"};
  } else {
    for (double x : vals) {
      const double l = op(e_value, x);
      if (!approx(l, x, pol)) {
        ident.pass = false;
        ident.witness = Witness{{x}, l, x, "op(e,x)"};
        break;
      }
      const double r = op(x, e_value);
      if (!approx(r, x, pol)) {
        ident.pass = false;
        ident.witness = Witness{{x}, r, x, "op(x,e)"};
        break;
      }
    }
  }

  auto& assoc = rep.add("associativity");
  if (closed) {
    // Products are carrier elements: compare snapped indices so off-by-eps
    // drift cannot accumulate through the nesting.
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table[i][j] = *c.index_of(op(vals[i], vals[j]), pol);
    for (std::size_t i = 0; i < n && assoc.pass; ++i)
      for (std::size_t j = 0; j < n && assoc.pass; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t a = table[table[i][j]][k], b = table[i][table[j][k]];
          if (a != b) {
            assoc.pass = false;
            assoc.witness = Witness{{vals[i], vals[j], vals[k]}, vals[a], vals[b],
                                    "op(op(x,y),z) vs op(x,op(y,z))"};
            break;
          }
        }
  } else {
    rep.notes.push_back("associativity checked on raw values because closure failed");
    for (std::size_t i = 0; i < n && assoc.pass; ++i)
      for (std::size_t j = 0; j < n && assoc.pass; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const double a = op(op(vals[i], vals[j]), vals[k]);
          const double b = op(vals[i], op(vals[j], vals[k]));
          if (!approx(a, b, pol)) {
            assoc.pass = false;
            assoc.witness =
                Witness{{vals[i], vals[j], vals[k]}, a, b, "op(op(x,y),z) vs op(x,op(y,z))"};
            break;
          }
        }
  }
  return rep;
}

CheckReport check_monoid(const Carrier& c, const std::vector<std::vector<std::size_t>>& table,
                         std::size_t e_index, const TolerancePolicy& pol) {
  (void)pol;
  const std::size_t n = c.size();
  if (table.size() != n)
    throw ConstraintViolation("monoid table: need one row per carrier element");
  for (const auto& row : table)
    if (row.size() != n)
      throw ConstraintViolation("monoid table: need one column per carrier element");
  if (e_index >= n) throw ConstraintViolation("monoid table: identity index out of range");

  CheckReport rep;
  auto& closure = rep.add("closure");
  for (std::size_t i = 0; i < n && closure.pass; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] >= n) {
        closure.pass = false;
        closure.witness = Witness{{c.value(i), c.value(j)}, static_cast<double>(table[i][j]), 0.0,
                                  "table entry out of range"};
        break;
      }
  const bool closed = closure.pass;  // closure is invalidated by the adds below

  auto& ident = rep.add("identity");
  if (closed) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[e_index][j] != j) {
        ident.pass = false;
        ident.witness = Witness{{c.value(j)}, c.value(table[e_index][j]), c.value(j), "op(e,x)"};
        break;
      }
      if (table[j][e_index] != j) {
        ident.pass = false;
        ident.witness = Witness{{c.value(j)}, c.value(table[j][e_index]), c.value(j), "op(x,e)"};
        break;
      }
    }
  }

  auto& assoc = rep.add("associativity");
  if (closed) {
    for (std::size_t i = 0; i < n && assoc.pass; ++i)
      for (std::size_t j = 0; j < n && assoc.pass; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t a = table[table[i][j]][k], b = table[i][table[j][k]];
          if (a != b) {
            assoc.pass = false;
            assoc.witness = Witness{{c.value(i), c.value(j), c.value(k)}, c.value(a), c.value(b),
                                    "op(op(x,y),z) vs op(x,op(y,z))"};
            break;
          }
        }
  }
  return rep;
}

namespace {

std::string first_failure(const CheckReport& rep) {
  for (const auto& cond : rep.conditions)
    if (!cond.pass)
      return cond.name + (cond.witness ? " @ " + cond.witness->str() : std::string());
  return "unknown";
}

}  // namespace

Monoid::Monoid(Carrier c, std::vector<std::vector<std::size_t>> table, std::size_t e_index,
               std::string op_name, const TolerancePolicy& pol)
    : carrier_(std::move(c)),
      table_(std::move(table)),
      e_index_(e_index),
      op_name_(std::move(op_name)),
      pol_(pol) {
  name_ = "monoid(" + carrier_.describe() + "," + op_name_ + ",e=" + carrier_.label(e_index_) + ")";
}

Monoid Monoid::from_table(Carrier c, std::vector<std::vector<std::size_t>> table,
                          std::size_t e_index, const TolerancePolicy& pol) {
  CheckReport rep = check_monoid(c, table, e_index, pol);
  if (!rep.pass())
    throw ConstraintViolation("monoid construction failed: " + first_failure(rep));
  return Monoid(std::move(c), std::move(table), e_index, "table", pol);
}

Monoid Monoid::from_op(Carrier c, BinaryOp op, double e_value, const TolerancePolicy& pol) {
  const auto e_idx = c.index_of(e_value, pol);
  if (!e_idx)
    throw ConstraintViolation("monoid construction failed: identity " + fmt(e_value) +
                              " is not a carrier element");
  CheckReport rep = check_monoid(c, op, e_value, pol);
  if (!rep.pass())
    throw ConstraintViolation("monoid construction failed: " + first_failure(rep));
  const std::size_t n = c.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = *c.index_of(op(c.value(i), c.value(j)), pol);
  return Monoid(std::move(c), std::move(table), *e_idx, op.name, pol);
}

double Monoid::op_value(double x, double y) const {
  const auto i = carrier_.index_of(x, pol_);
  const auto j = carrier_.index_of(y, pol_);
  if (!i || !j)
    throw ConstraintViolation("Monoid::op_value: " + fmt(!i ? x : y) +
                              " is not a carrier element");
  return carrier_.value(table_[*i][*j]);
}

CheckReport check_monoid(const Monoid& m) {
  BinaryOp op{m.op_name(), [&m](double x, double y) { return m.op_value(x, y); }};
  return check_monoid(m.carrier(), op, m.identity_value());
}

CheckReport is_submonoid(const BinaryOp& op, double e_value, std::span<const double> subset,
                         const TolerancePolicy& pol) {
  CheckReport rep;
  auto& ce = rep.add("contains-identity");
  if (!match_in(subset, e_value, pol)) {
    ce.pass = false;
    ce.witness = Witness{{e_value}, e_value, 0.0, "identity missing from subset"};
  }
  auto& cl = rep.add("closure");
  for (std::size_t i = 0; i < subset.size() && cl.pass; ++i)
    for (std::size_t j = 0; j < subset.size(); ++j) {
      const double v = op(subset[i], subset[j]);
      if (!match_in(subset, v, pol)) {
        cl.pass = false;
        cl.witness = Witness{{subset[i], subset[j]}, v, 0.0, "product escapes the subset"};
        break;
      }
    }
  return rep;
}

CheckReport is_submonoid(const Monoid& m, std::span<const double> subset,
                         const TolerancePolicy& pol) {
  for (double v : subset)
    if (!m.carrier().index_of(v, pol))
      throw ConstraintViolation("is_submonoid: subset value " + fmt(v) +
                                " is not a carrier element");
  BinaryOp op{m.op_name(), [&m](double x, double y) { return m.op_value(x, y); }};
  return is_submonoid(op, m.identity_value(), subset, pol);
}

CheckReport is_closed_under(const BinaryOp& op, std::span<const double> subset,
                            const TolerancePolicy& pol) {
  CheckReport rep;
  auto& cl = rep.add("closure");
  for (std::size_t i = 0; i < subset.size() && cl.pass; ++i)
    for (std::size_t j = 0; j < subset.size(); ++j) {
      const double v = op(subset[i], subset[j]);
      if (!match_in(subset, v, pol)) {
        cl.pass = false;
        cl.witness = Witness{{subset[i], subset[j]}, v, 0.0, "product escapes the subset"};
        break;
      }
    }
  return rep;
}

namespace {

void require_square(const std::vector<std::vector<std::size_t>>& t, std::size_t n,
                    const char* which) {
  if (t.size() != n) throw ConstraintViolation(std::string("lattice ") + which + ": wrong row count");
  for (const auto& row : t)
    if (row.size() != n)
      throw ConstraintViolation(std::string("lattice ") + which + ": wrong column count");
  for (const auto& row : t)
    for (std::size_t v : row)
      if (v >= n) throw ConstraintViolation(std::string("lattice ") + which + ": entry out of range");
}

}  // namespace

BoundedLattice BoundedLattice::from_tables(std::vector<std::string> labels,
                                           std::vector<std::vector<std::size_t>> meet,
                                           std::vector<std::vector<std::size_t>> join) {
  const std::size_t n = labels.size();
  if (n == 0) throw ConstraintViolation("lattice: at least one element is required");
  require_square(meet, n, "meet");
  require_square(join, n, "join");

  auto law = [&](bool ok, const std::string& msg) {
    if (!ok) throw ConstraintViolation("lattice: " + msg);
  };
  for (std::size_t i = 0; i < n; ++i) {
    law(meet[i][i] == i, "meet idempotence fails at " + labels[i]);
    law(join[i][i] == i, "join idempotence fails at " + labels[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      law(meet[i][j] == meet[j][i], "meet commutativity fails at (" + labels[i] + "," + labels[j] + ")");
      law(join[i][j] == join[j][i], "join commutativity fails at (" + labels[i] + "," + labels[j] + ")");
      law(meet[i][join[i][j]] == i, "absorption x^(xvy)=x fails at (" + labels[i] + "," + labels[j] + ")");
      law(join[i][meet[i][j]] == i, "absorption xv(x^y)=x fails at (" + labels[i] + "," + labels[j] + ")");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        law(meet[meet[i][j]][k] == meet[i][meet[j][k]],
            "meet associativity fails at (" + labels[i] + "," + labels[j] + "," + labels[k] + ")");
        law(join[join[i][j]][k] == join[i][join[j][k]],
            "join associativity fails at (" + labels[i] + "," + labels[j] + "," + labels[k] + ")");
      }

  BoundedLattice lat;
  lat.labels_ = std::move(labels);
  lat.meet_ = std::move(meet);
  lat.join_ = std::move(join);

  bool found_top = false, found_bottom = false;
  for (std::size_t t = 0; t < n && !found_top; ++t) {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x) ok = ok && lat.meet_[t][x] == x;
    if (ok) {
      lat.top_ = t;
      found_top = true;
    }
  }
  for (std::size_t b = 0; b < n && !found_bottom; ++b) {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x) ok = ok && lat.join_[b][x] == x;
    if (ok) {
      lat.bottom_ = b;
      found_bottom = true;
    }
  }
  if (!found_top) throw ConstraintViolation("lattice: no maximum element (meet identity)");
  if (!found_bottom) throw ConstraintViolation("lattice: no minimum element (join identity)");
  return lat;
}

BoundedLattice BoundedLattice::chain(std::size_t n) {
  if (n == 0) throw ConstraintViolation("lattice chain: need at least one element");
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      meet[i][j] = std::min(i, j);
      join[i][j] = std::max(i, j);
    }
  }
  return from_tables(std::move(labels), std::move(meet), std::move(join));
}

BoundedLattice BoundedLattice::boolean2() {
  // Elements encoded as bit masks: 0=00, a=01, b=10, 1=11.
  std::vector<std::string> labels{"0", "a", "b", "1"};
  std::vector<std::vector<std::size_t>> meet(4, std::vector<std::size_t>(4));
  std::vector<std::vector<std::size_t>> join(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      meet[i][j] = i & j;
      join[i][j] = i | j;
    }
  return from_tables(std::move(labels), std::move(meet), std::move(join));
}

std::optional<std::size_t> BoundedLattice::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

}  // namespace fuzzalg
