#include "fuzzalg/registry.hpp"

#include <ostream>
#include <string_view>

#include "fuzzalg/algebra.hpp"
#include "fuzzalg/connectives.hpp"
#include "fuzzalg/errors.hpp"
#include "fuzzalg/generators.hpp"
#include "fuzzalg/report.hpp"
#include "fuzzalg/uninorms.hpp"

namespace fuzzalg {

const std::vector<SurfaceEntry>& surface_registry() {
  static const std::vector<SurfaceEntry> entries = [] {
    std::vector<SurfaceEntry> out;
    auto add = [&out](std::string name, std::string desc, BinaryOp op) {
      out.push_back(SurfaceEntry{std::move(name), std::move(desc), std::move(op)});
    };
    add("tnorm:min", "minimum t-norm", TNorm::minimum().as_binary_op());
    add("tnorm:product", "product t-norm", TNorm::product().as_binary_op());
    add("tnorm:lukasiewicz", "Lukasiewicz t-norm", TNorm::lukasiewicz().as_binary_op());
    add("tnorm:drastic", "drastic t-norm", TNorm::drastic().as_binary_op());
    add("tconorm:max", "maximum t-conorm", TConorm::maximum().as_binary_op());
    add("tconorm:probsum", "probabilistic sum", TConorm::probabilistic_sum().as_binary_op());
    add("tconorm:lukasiewicz", "Lukasiewicz t-conorm", TConorm::lukasiewicz().as_binary_op());
    add("tconorm:drastic", "drastic t-conorm", TConorm::drastic().as_binary_op());
    add("rep_log",
        "representable uninorm, logarithmic generator, e = 0.5, conjunctive",
        Uninorm::representable(log_uninorm_generator(), 0.5, Boundary::conjunctive)
            .as_binary_op());
    add("rep_rat",
        "representable uninorm, rational generator, e = 0.5, conjunctive",
        Uninorm::representable(rational_uninorm_generator(), 0.5, Boundary::conjunctive)
            .as_binary_op());
    return out;
  }();
  return entries;
}

BinaryOp lookup_surface(const std::string& name) {
  const std::vector<SurfaceEntry>& reg = surface_registry();
  if (name.find(':') != std::string::npos) {
    for (const SurfaceEntry& e : reg) {
      if (e.name == name) return e.op;
    }
    throw ConstraintViolation("unknown operator '" + name + "' (known: " + surface_list() + ")");
  }
  std::vector<const SurfaceEntry*> hits;
  for (const SurfaceEntry& e : reg) {
    if (e.name == name) return e.op;
    std::string_view n = e.name;
    auto colon = n.find(':');
    if (colon != std::string_view::npos && n.substr(colon + 1) == name) {
      hits.push_back(&e);
    }
  }
  if (hits.size() == 1) return hits.front()->op;
  if (hits.size() > 1) {
    std::string msg = "ambiguous operator '" + name + "': candidates";
    for (const SurfaceEntry* e : hits) msg += " " + e->name;
    throw ConstraintViolation(msg);
  }
  throw ConstraintViolation("unknown operator '" + name + "' (known: " + surface_list() + ")");
}

std::string surface_list() {
  std::string out;
  for (const SurfaceEntry& e : surface_registry()) {
    if (!out.empty()) out += ", ";
    out += e.name;
  }
  return out;
}

void export_grid_csv(const BinaryOp& op, int n, std::ostream& out) {
  Carrier grid = Carrier::grid(n);
  out << "x,y,value\n";
  for (double x : grid.values()) {
    for (double y : grid.values()) {
      out << fmt(x) << ',' << fmt(y) << ',' << fmt(op(x, y)) << '\n';
    }
  }
}

}  // namespace fuzzalg
