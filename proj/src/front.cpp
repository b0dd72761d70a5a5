#include "legcob/front.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace legcob {

FrontWord parse_front(const std::string& text) {
  FrontWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok[0] == '#') {  // comment runs to end of line
      std::string rest;
      std::getline(is, rest);
      continue;
    }
    if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'R' && tok[0] != 'X'))
      throw SyntaxError("bad token '" + tok + "'");
    int row = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9')
        throw SyntaxError("bad token '" + tok + "'");
      row = row * 10 + (tok[i] - '0');
    }
    if (row == 0) throw SyntaxError("bad token '" + tok + "'");
    w.push_back({tok[0], row});
  }
  validate_front(w);
  return w;
}

void validate_front(const FrontWord& w) {
  int c = 0;
  for (size_t j = 0; j < w.size(); ++j) {
    const Token& t = w[j];
    std::ostringstream who;
    who << "event " << (j + 1) << ": " << t.kind << t.row;
    if (t.kind == 'L') {
      if (t.row < 1 || t.row > c + 1)
        throw ValidationError(who.str() + " needs 1<=i<=" +
                              std::to_string(c + 1));
      c += 2;
    } else {
      if (t.row < 1 || t.row > c - 1)
        throw ValidationError(who.str() + " needs 1<=i<=" +
                              std::to_string(c - 1));
      if (t.kind == 'R') c -= 2;
    }
  }
  if (c != 0)
    throw ValidationError("word ends with " + std::to_string(c) +
                          " open strands");
}

std::string serialize_front(const FrontWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i].kind << w[i].row;
  }
  return os.str();
}

std::vector<int> gap_counts(const FrontWord& w) {
  std::vector<int> g{0};
  int c = 0;
  for (const Token& t : w) {
    if (t.kind == 'L')
      c += 2;
    else if (t.kind == 'R')
      c -= 2;
    g.push_back(c);
  }
  return g;
}

TraceState next_state(const FrontWord& w, int gap, int row, int dir) {
  if (dir > 0) {
    const Token& t = w[gap];  // event gap+1 sits to the right of gap
    int i = t.row;
    if (t.kind == 'L') {
      return {gap + 1, row < i ? row : row + 2, +1};
    }
    if (t.kind == 'X') {
      if (row == i) return {gap + 1, i + 1, +1};
      if (row == i + 1) return {gap + 1, i, +1};
      return {gap + 1, row, +1};
    }
    // R: strands i, i+1 turn around, the rest shift up past the cusp.
    if (row == i) return {gap, i + 1, -1};
    if (row == i + 1) return {gap, i, -1};
    return {gap + 1, row > i + 1 ? row - 2 : row, +1};
  }
  const Token& t = w[gap - 1];  // event gap sits to the left of gap
  int i = t.row;
  if (t.kind == 'L') {
    if (row == i) return {gap, i + 1, +1};
    if (row == i + 1) return {gap, i, +1};
    return {gap - 1, row > i + 1 ? row - 2 : row, -1};
  }
  if (t.kind == 'X') {
    if (row == i) return {gap - 1, i + 1, -1};
    if (row == i + 1) return {gap - 1, i, -1};
    return {gap - 1, row, -1};
  }
  return {gap - 1, row >= i ? row + 2 : row, -1};
}

namespace {

// Walks the closed curve through `start`, recording segments and directions.
std::pair<std::vector<Seg>, std::map<Seg, int>> trace_orbit(
    const FrontWord& w, TraceState start) {
  std::vector<Seg> segs;
  std::map<Seg, int> dir;
  TraceState s = start;
  do {
    segs.push_back({s.gap, s.row});
    dir[{s.gap, s.row}] = s.dir;
    s = next_state(w, s.gap, s.row, s.dir);
  } while (!(s == start));
  return {segs, dir};
}

Orientation orient_impl(const FrontWord& w, const std::map<Seg, int>* seeds) {
  std::vector<int> gc = gap_counts(w);
  std::set<Seg> seen;
  std::vector<std::pair<Seg, std::pair<std::vector<Seg>, std::map<Seg, int>>>>
      found;
  for (int g = 0; g < static_cast<int>(gc.size()); ++g)
    for (int r = 1; r <= gc[g]; ++r) {
      if (seen.count({g, r})) continue;
      auto orbit = trace_orbit(w, {g, r, +1});
      Seg least = *std::min_element(orbit.first.begin(), orbit.first.end());
      int want = +1;  // canonical: least segment goes rightward
      if (seeds) {
        for (const Seg& s : orbit.first) {
          auto it = seeds->find(s);
          if (it != seeds->end()) {
            want = it->second * orbit.second[s] *
                   orbit.second[least];  // flip so s matches its seed
            break;
          }
        }
      }
      if (orbit.second[least] != want)
        orbit = trace_orbit(w, {least.gap, least.row, want});
      // rotate so the orbit starts at its least segment
      auto pos = std::find(orbit.first.begin(), orbit.first.end(), least);
      std::rotate(orbit.first.begin(), pos, orbit.first.end());
      for (const Seg& s : orbit.first) seen.insert(s);
      found.push_back({least, std::move(orbit)});
    }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Orientation o;
  for (auto& [least, orbit] : found) {
    o.comps.push_back(std::move(orbit.first));
    for (const auto& [s, d] : orbit.second) o.dir[s] = d;
  }
  return o;
}

}  // namespace

Orientation orient(const FrontWord& w) { return orient_impl(w, nullptr); }

Orientation orient_seeded(const FrontWord& w,
                          const std::map<Seg, int>& seeds) {
  return orient_impl(w, &seeds);
}

Invariants invariants(const FrontWord& w) {
  return invariants(w, orient(w));
}

Invariants invariants(const FrontWord& w, const Orientation& o) {
  Invariants iv;
  iv.components = static_cast<int>(o.comps.size());
  int up = 0, down = 0;
  for (size_t j = 0; j < w.size(); ++j) {
    const Token& t = w[j];
    int e = static_cast<int>(j) + 1;
    int i = t.row;
    if (t.kind == 'X') {
      // The strand descending through the crossing is the over strand.
      int d_over = o.dir.at({e - 1, i});
      int d_under = o.dir.at({e - 1, i + 1});
      iv.writhe += (d_over * d_under > 0) ? 1 : -1;
    } else if (t.kind == 'L') {
      ++iv.cusps;
      // Upward cusp when the curve leaves the upper branch rightward.
      if (o.dir.at({e, i}) > 0)
        ++up;
      else
        ++down;
    } else {
      ++iv.cusps;
      if (o.dir.at({e - 1, i}) > 0)
        ++down;
      else
        ++up;
    }
  }
  iv.tb = iv.writhe - iv.cusps / 2;
  iv.rot = (down - up) / 2;
  return iv;
}

}  // namespace legcob
