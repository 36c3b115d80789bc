#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzalg/binary_op.hpp"
#include "fuzzalg/numerics.hpp"
#include "fuzzalg/report.hpp"

namespace fuzzalg {

// Evaluation substrate: an ordered finite set of labelled numeric elements,
// either given explicitly or as the uniform n-point grid on [0,1].
class Carrier {
 public:
  static Carrier finite(std::vector<double> values, std::vector<std::string> labels = {},
                        const TolerancePolicy& pol = {});
  static Carrier grid(int n);

  std::size_t size() const { return values_.size(); }
  double value(std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  bool is_grid() const { return grid_n_ > 0; }
  int grid_n() const { return grid_n_; }

  // Index of the element matching v within eps_eq; grids resolve in O(1).
  std::optional<std::size_t> index_of(double v, const TolerancePolicy& pol = {}) const;

  std::string describe() const;  // "grid(21)" or "{a,b,c}"

 private:
  Carrier() = default;
  std::vector<double> values_;
  std::vector<std::string> labels_;
  int grid_n_ = 0;
};

// The L_{n,m} carrier {0, e/n, ..., e, e+(1-e)/m, ..., 1}: n+m+1 sorted
// points containing 0, the anchor, and 1 exactly.
Carrier discrete_carrier(double anchor, int n, int m);

// Component-level monoid axioms: closure of op over the carrier, identity at
// e, associativity over all triples. Closure failures fall back to raw-value
// associativity so every condition still gets a verdict.
CheckReport check_monoid(const Carrier& c, const BinaryOp& op, double e_value,
                         const TolerancePolicy& pol = {});
CheckReport check_monoid(const Carrier& c, const std::vector<std::vector<std::size_t>>& table,
                         std::size_t e_index, const TolerancePolicy& pol = {});

// Finite monoid with a materialized index table. Construction re-runs the
// full axiom check and throws ConstraintViolation with the first witness.
class Monoid {
 public:
  static Monoid from_table(Carrier c, std::vector<std::vector<std::size_t>> table,
                           std::size_t e_index, const TolerancePolicy& pol = {});
  static Monoid from_op(Carrier c, BinaryOp op, double e_value, const TolerancePolicy& pol = {});

  const Carrier& carrier() const { return carrier_; }
  std::size_t identity_index() const { return e_index_; }
  double identity_value() const { return carrier_.value(e_index_); }
  std::size_t op_index(std::size_t i, std::size_t j) const { return table_[i][j]; }
  // Product of two carrier values (matched within eps_eq); throws
  // ConstraintViolation when an argument is not a carrier element.
  double op_value(double x, double y) const;
  const std::string& name() const { return name_; }
  const std::string& op_name() const { return op_name_; }

 private:
  Monoid(Carrier c, std::vector<std::vector<std::size_t>> table, std::size_t e_index,
         std::string op_name, const TolerancePolicy& pol);
  Carrier carrier_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t e_index_;
  std::string op_name_;
  std::string name_;
  TolerancePolicy pol_;
};

CheckReport check_monoid(const Monoid& m);

// Subset of the monoid's carrier: checks identity membership and closure of
// the induced operation within the subset (values matched within eps_eq).
CheckReport is_submonoid(const Monoid& m, std::span<const double> subset,
                         const TolerancePolicy& pol = {});
CheckReport is_submonoid(const BinaryOp& op, double e_value, std::span<const double> subset,
                         const TolerancePolicy& pol = {});
// Closure alone — for absorbing-element structures that carry no identity.
CheckReport is_closed_under(const BinaryOp& op, std::span<const double> subset,
                            const TolerancePolicy& pol = {});

// Finite bounded lattice given extensionally by meet/join tables over
// labelled elements; bottom and top are located as the join/meet identities.
class BoundedLattice {
 public:
  static BoundedLattice from_tables(std::vector<std::string> labels,
                                    std::vector<std::vector<std::size_t>> meet,
                                    std::vector<std::vector<std::size_t>> join);
  // 0 < 1 < ... < n-1.
  static BoundedLattice chain(std::size_t n);
  // Four-element Boolean lattice {0, a, b, 1} with a, b incomparable.
  static BoundedLattice boolean2();

  std::size_t size() const { return labels_.size(); }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  // Lattice order: a <= b iff a meet b = a.
  bool leq(std::size_t a, std::size_t b) const { return meet_[a][b] == a; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of_label(const std::string& label) const;

 private:
  BoundedLattice() = default;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> meet_, join_;
  std::size_t bottom_ = 0, top_ = 0;
};

}  // namespace fuzzalg
