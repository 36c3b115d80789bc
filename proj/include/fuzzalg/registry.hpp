#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fuzzalg/binary_op.hpp"

namespace fuzzalg {

// A named operator surface that can be exported as a value grid.
struct SurfaceEntry {
  std::string name;  // qualified ("tnorm:min") or plain ("rep_log")
  std::string description;
  BinaryOp op;
};

// Built-in surfaces: the four t-norms and four t-conorms under qualified
// names, the canonical unambiguous spellings (min, product, max, probsum),
// and the two representable uninorms at e = 0.5 (logarithmic and rational
// generators, conjunctive boundary).
const std::vector<SurfaceEntry>& surface_registry();

// Resolves a surface name. A name containing ':' must match exactly; a bare
// name matches either a plain entry or the suffix of exactly one qualified
// entry. Throws ConstraintViolation for unknown names and for ambiguous bare
// names (the message lists the qualified candidates).
BinaryOp lookup_surface(const std::string& name);

// All registry names, comma-separated, for diagnostics.
std::string surface_list();

// Writes "x,y,value" rows over the n-point unit grid, x varying slowest.
// Values are rendered with the shortest round-trippable form up to 12
// significant digits, so a given operator always exports byte-identical
// output. n < 2 is rejected.
void export_grid_csv(const BinaryOp& op, int n, std::ostream& out);

}  // namespace fuzzalg
