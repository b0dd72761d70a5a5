#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "legcob/errors.hpp"

namespace legcob {

// A front word is a left-to-right sequence of Morse events of a generic
// Legendrian front: L<i> opens a left cusp whose new strands land in rows
// i, i+1; R<i> closes rows i, i+1 in a right cusp; X<i> crosses rows i, i+1.
// Rows are counted from the top, starting at 1.
struct Token {
  char kind;  // 'L', 'R' or 'X'
  int row;

  bool operator==(const Token&) const = default;
};

using FrontWord = std::vector<Token>;

// Throws SyntaxError on malformed tokens, ValidationError on words whose
// strand counts do not stay legal (messages name the 1-based event).
FrontWord parse_front(const std::string& text);
void validate_front(const FrontWord& w);
std::string serialize_front(const FrontWord& w);

// Strand count in each of the m+1 gaps between events (gap 0 before the
// first event).
std::vector<int> gap_counts(const FrontWord& w);

// A segment is one horizontal strand piece: (gap, row).
struct Seg {
  int gap, row;

  auto operator<=>(const Seg&) const = default;
};

// Position of a traversal: a segment plus a horizontal direction
// (+1 rightward, -1 leftward).
struct TraceState {
  int gap, row, dir;

  bool operator==(const TraceState&) const = default;
};

// One step of the traversal through the event adjacent to (gap,row) in
// direction dir.
TraceState next_state(const FrontWord& w, int gap, int row, int dir);

// A full orientation of the front: its components (each a closed cyclic
// list of segments in traversal order) plus the direction in which each
// segment is traversed.
struct Orientation {
  std::vector<std::vector<Seg>> comps;
  std::map<Seg, int> dir;
};

// Canonical orientation: each component traverses its lexicographically
// least segment rightward; components are listed by least segment.
Orientation orient(const FrontWord& w);

// Orientation seeded from a previous one: any component containing a seeded
// segment keeps that segment's direction, others fall back to the canonical
// rule.  Used to carry orientations through moves so that writhe and
// rotation comparisons are exact even for multi-component fronts.
Orientation orient_seeded(const FrontWord& w, const std::map<Seg, int>& seeds);

struct Invariants {
  int tb = 0;
  int rot = 0;
  int writhe = 0;
  int cusps = 0;
  int components = 0;

  bool operator==(const Invariants&) const = default;
};

Invariants invariants(const FrontWord& w);
Invariants invariants(const FrontWord& w, const Orientation& o);

}  // namespace legcob
