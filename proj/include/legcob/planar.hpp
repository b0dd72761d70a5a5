#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "legcob/front.hpp"

namespace legcob {

// Planar diagram: each crossing lists its four edge labels counterclockwise
// starting at the incoming under-strand; `loops` counts crossing-free circles.
struct PD {
  std::vector<std::array<int, 4>> x;
  int loops = 0;

  bool operator==(const PD&) const = default;
};

// Text form: one "X a b c d" line per crossing, optional "O k" line for
// crossing-free loops, '#' comments.  Validation: labels positive, every
// label used exactly twice.
PD parse_pd(const std::string& text);
std::string serialize_pd(const PD& d);
void validate_pd(const PD& d);

// Relabels edges 1..E in first-use order (crossings scanned in order,
// slots counterclockwise).  Keeps diagrams comparable across histories.
PD canonical_relabel(const PD& d);

// Recovers a consistent orientation of every component and returns the
// crossing signs; ValidationError when the diagram is inconsistent.
std::vector<int> orient_signs(const PD& d);

int pd_writhe(const PD& d);

// Mirror image: reverses every crossing (sign +1 tuples rotate one way,
// sign -1 tuples the other), leaving edge labels in place.
PD pd_mirror(const PD& d);

// Resolves a front into its planar diagram.  When an orientation is given,
// crossings still resolve the same way (the under strand's horizontal
// direction at each crossing decides the tuple); the orientation parameter
// exists so callers resolve exactly the diagram they measured.
PD front_to_pd(const FrontWord& w);
PD front_to_pd(const FrontWord& w, const Orientation& o);

// A knot-table record: a named planar diagram with provenance and an
// optional reference Jones polynomial (variable A, "exp:coeff" pairs).
struct KnotRecord {
  std::string name;
  std::string source;
  PD pd;
  std::optional<std::string> jones;
};

std::vector<KnotRecord> parse_knot_table(const std::string& text);

}  // namespace legcob
