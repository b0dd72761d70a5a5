#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legcob/braid.hpp"

namespace legcob {

// A claimed exact Lagrangian filling of a Legendrian knot: the classical
// invariants of the knot plus the surface genus, with optional smooth data.
struct FillingClaim {
  int tb = 0;
  int rot = 0;
  int genus = 0;
  std::optional<int> slice_genus;  // smooth 4-ball genus, if known
  std::optional<int> tb_bound;     // sharp upper bound for tb, if known
};

// A slice surface that would acquire a collar; at least one of the two
// optional fields must be known for the obstruction test to say anything.
struct CollarScenario {
  int filling_genus = 0;                // genus the collared filling would have
  std::optional<int> concave_genus;     // genus forced from the concave side
  std::optional<int> tb_bound;          // Kauffman-polynomial tb bound
};

enum class Status { Consistent, Violation, NonCollarable };

std::string status_name(Status s);

// Obstructions only: absence of a hit is reported as Consistent, never as a
// positive "collarable" claim.
struct Verdict {
  Status status = Status::Consistent;
  std::vector<std::string> reasons;
};

// Checks the filling equalities rot = 0, tb = 2g - 1, g = g_s, tb = TB;
// unknown fields skip their clause.  Never throws.
Verdict check_filling(const FillingClaim& c);

// NonCollarable when the concave-side genus disagrees with the filling
// genus, or when the tb bound falls below 2g - 1.  PreconditionError when
// both optional fields are unknown.
Verdict collar_obstruction(const CollarScenario& s);

// Result of running a quasipositive disk certificate end to end.
struct DiskSliceReport {
  Verdict verdict;
  SurfaceData surface;
  int crossings = 0;
  int tb_bound = 0;
  // The same data as ordered KEY VALUE pairs, ready for line output.
  std::vector<std::pair<std::string, std::string>> lines;
};

// Expands the factorization, builds the braid-closure diagram, evaluates the
// Kauffman tb bound, and feeds it to collar_obstruction with filling genus
// zero.  PreconditionError unless the factorization certifies a disk
// (k = n - 1 bands and a knot closure).
DiskSliceReport certify_disk_slice(const QPFactorization& q, int crossing_cap);

}  // namespace legcob
