#include "legcob/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace legcob {

std::string kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1a: return "R1a";
    case MoveKind::R1b: return "R1b";
    case MoveKind::R2a: return "R2a";
    case MoveKind::R2b: return "R2b";
    case MoveKind::R3: return "R3";
    case MoveKind::SaddleUp: return "SaddleUp";
    case MoveKind::Birth: return "Birth";
    case MoveKind::Death: return "Death";
    case MoveKind::FarCommute: return "FarCommute";
    case MoveKind::R1aInv: return "R1a-";
    case MoveKind::R1bInv: return "R1b-";
    case MoveKind::R2aInv: return "R2a-";
    case MoveKind::R2bInv: return "R2b-";
  }
  return "?";
}

MoveKind parse_kind(const std::string& s) {
  static const std::map<std::string, MoveKind> table = {
      {"R1a", MoveKind::R1a},           {"R1b", MoveKind::R1b},
      {"R2a", MoveKind::R2a},           {"R2b", MoveKind::R2b},
      {"R3", MoveKind::R3},             {"SaddleUp", MoveKind::SaddleUp},
      {"Birth", MoveKind::Birth},       {"Death", MoveKind::Death},
      {"FarCommute", MoveKind::FarCommute},
      {"R1a-", MoveKind::R1aInv},       {"R1b-", MoveKind::R1bInv},
      {"R2a-", MoveKind::R2aInv},       {"R2b-", MoveKind::R2bInv},
  };
  auto it = table.find(s);
  if (it == table.end()) throw SyntaxError("unknown move kind '" + s + "'");
  return it->second;
}

std::optional<FrontWord> try_far_commute(const FrontWord& w, int p) {
  if (p < 0 || p + 1 >= static_cast<int>(w.size())) return std::nullopt;
  const Token t1 = w[p], t2 = w[p + 1];
  const int a = t1.row, b = t2.row;
  std::vector<Token> res;
  auto pair = [&](char k1, int r1, char k2, int r2) {
    res = {{k1, r1}, {k2, r2}};
  };
  if (t1.kind == 'X' && t2.kind == 'X') {
    if (std::abs(a - b) >= 2) pair('X', b, 'X', a);
  } else if (t1.kind == 'X' && t2.kind == 'L') {
    if (b <= a)
      pair('L', b, 'X', a + 2);
    else if (b >= a + 2)
      pair('L', b, 'X', a);
  } else if (t1.kind == 'L' && t2.kind == 'X') {
    if (b <= a - 2)
      pair('X', b, 'L', a);
    else if (b >= a + 2)
      pair('X', b - 2, 'L', a);
  } else if (t1.kind == 'X' && t2.kind == 'R') {
    if (b >= a + 2)
      pair('R', b, 'X', a);
    else if (b <= a - 2)
      pair('R', b, 'X', a - 2);
  } else if (t1.kind == 'R' && t2.kind == 'X') {
    if (b >= a)
      pair('X', b + 2, 'R', a);
    else if (b <= a - 2)
      pair('X', b, 'R', a);
  } else if (t1.kind == 'L' && t2.kind == 'L') {
    if (b <= a)
      pair('L', b, 'L', a + 2);
    else if (b >= a + 2)
      pair('L', b - 2, 'L', a);
  } else if (t1.kind == 'R' && t2.kind == 'R') {
    if (b >= a)
      pair('R', b + 2, 'R', a);
    else if (b <= a - 2)
      pair('R', b, 'R', a - 2);
  } else if (t1.kind == 'L' && t2.kind == 'R') {
    if (b <= a - 2)
      pair('R', b, 'L', a - 2);
    else if (b >= a + 2)
      pair('R', b - 2, 'L', a);
  } else if (t1.kind == 'R' && t2.kind == 'L') {
    if (b <= a - 1)
      pair('L', b, 'R', a + 2);
    else if (b >= a + 1)
      pair('L', b + 2, 'R', a);
  }
  if (res.empty()) return std::nullopt;
  FrontWord out(w.begin(), w.begin() + p);
  out.insert(out.end(), res.begin(), res.end());
  out.insert(out.end(), w.begin() + p + 2, w.end());
  try {
    validate_front(out);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
  return out;
}

namespace {

int tok_rank(char k) { return k == 'L' ? 0 : (k == 'R' ? 1 : 2); }

bool lex_less(const FrontWord& a, const FrontWord& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Token& x, const Token& y) {
        return std::pair(tok_rank(x.kind), x.row) <
               std::pair(tok_rank(y.kind), y.row);
      });
}

}  // namespace

FrontWord normal_form(FrontWord w, std::vector<int>* trace) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p) {
      auto nw = try_far_commute(w, p);
      if (nw && lex_less(*nw, w)) {
        w = std::move(*nw);
        if (trace) trace->push_back(p);
        changed = true;
        break;
      }
    }
  }
  return w;
}

std::vector<MoveSite> enumerate_moves(const FrontWord& w) {
  const std::vector<int> cs = gap_counts(w);
  const int m = static_cast<int>(w.size());
  std::vector<MoveSite> sites;
  for (int p = 0; p <= m; ++p) {
    for (int r = 1; r <= cs[p]; ++r) {
      sites.push_back({MoveKind::R1a, p, r});
      sites.push_back({MoveKind::R1b, p, r});
    }
    for (int i = 1; i <= cs[p] + 1; ++i)
      sites.push_back({MoveKind::Birth, p, i});
  }
  for (int p = 0; p < m; ++p) {
    const Token& t = w[p];
    if (t.kind == 'L') {
      if (cs[p] >= t.row) sites.push_back({MoveKind::R2a, p, 0});
      if (t.row >= 2) sites.push_back({MoveKind::R2a, p, 1});
    }
    if (t.kind == 'R') {
      if (cs[p] >= t.row + 2) sites.push_back({MoveKind::R2b, p, 0});
      if (t.row >= 2) sites.push_back({MoveKind::R2b, p, 1});
    }
    if (p + 1 < m && t.kind == 'R' && w[p + 1] == Token{'L', t.row})
      sites.push_back({MoveKind::SaddleUp, p, 0});
    if (try_far_commute(w, p)) sites.push_back({MoveKind::FarCommute, p, 0});
  }
  for (int p = 0; p + 2 < m; ++p) {
    const Token &a = w[p], &b = w[p + 1], &c = w[p + 2];
    if (a.kind == 'L' && b.kind == 'X' && c.kind == 'R' && c.row == a.row) {
      if (b.row == a.row + 1) sites.push_back({MoveKind::R1aInv, p, a.row});
      if (b.row == a.row - 1) sites.push_back({MoveKind::R1bInv, p, b.row});
    }
    if (a.kind == 'X' && b.kind == 'X' && c.kind == 'X' && a.row == c.row &&
        std::abs(b.row - a.row) == 1)
      sites.push_back({MoveKind::R3, p, 0});
    if (a.kind == 'L' && b.kind == 'X' && c.kind == 'X') {
      if (a.row == b.row + 1 && c.row == b.row + 1)
        sites.push_back({MoveKind::R2aInv, p, 0});
      if (a.row == b.row - 1 && c.row == b.row - 1)
        sites.push_back({MoveKind::R2aInv, p, 1});
    }
    if (a.kind == 'X' && b.kind == 'X' && c.kind == 'R') {
      if (a.row == b.row + 1 && c.row == b.row + 1)
        sites.push_back({MoveKind::R2bInv, p, 0});
      if (a.row == b.row - 1 && c.row == b.row - 1)
        sites.push_back({MoveKind::R2bInv, p, 1});
    }
  }
  return sites;
}

namespace {

MoveResult rewrite(const FrontWord& w, int p, int cut,
                   std::vector<Token> repl) {
  MoveResult r;
  r.cut_at = p;
  r.cut_len = cut;
  r.rep_len = static_cast<int>(repl.size());
  r.word.assign(w.begin(), w.begin() + p);
  r.word.insert(r.word.end(), repl.begin(), repl.end());
  r.word.insert(r.word.end(), w.begin() + p + cut, w.end());
  validate_front(r.word);
  return r;
}

[[noreturn]] void bad_site(const FrontWord& w, const MoveSite& s,
                           const std::string& why) {
  throw InvalidSite(kind_name(s.kind) + " at index " +
                    std::to_string(s.index) + " variant " +
                    std::to_string(s.variant) + ": " + why + " in '" +
                    serialize_front(w) + "'");
}

void need_range(const FrontWord& w, const MoveSite& s, int lo, int hi) {
  if (s.index < lo || s.index > hi) bad_site(w, s, "index out of range");
}

const Token& tok_at(const FrontWord& w, const MoveSite& s, int off) {
  const int q = s.index + off;
  if (q < 0 || q >= static_cast<int>(w.size()))
    bad_site(w, s, "pattern runs past the end");
  return w[q];
}

}  // namespace

MoveResult apply_move(const FrontWord& w, const MoveSite& s) {
  const std::vector<int> cs = gap_counts(w);
  const int m = static_cast<int>(w.size());
  const int p = s.index;
  switch (s.kind) {
    case MoveKind::R1a: {
      need_range(w, s, 0, m);
      const int r = s.variant;
      if (r < 1 || r > cs[p]) bad_site(w, s, "host row does not exist");
      return rewrite(w, p, 0, {{'L', r}, {'X', r + 1}, {'R', r}});
    }
    case MoveKind::R1b: {
      need_range(w, s, 0, m);
      const int r = s.variant;
      if (r < 1 || r > cs[p]) bad_site(w, s, "host row does not exist");
      return rewrite(w, p, 0, {{'L', r + 1}, {'X', r}, {'R', r + 1}});
    }
    case MoveKind::R1aInv: {
      const Token &a = tok_at(w, s, 0), &b = tok_at(w, s, 1),
                  &c = tok_at(w, s, 2);
      if (!(a.kind == 'L' && b.kind == 'X' && c.kind == 'R' &&
            b.row == a.row + 1 && c.row == a.row))
        bad_site(w, s, "pattern mismatch");
      return rewrite(w, p, 3, {});
    }
    case MoveKind::R1bInv: {
      const Token &a = tok_at(w, s, 0), &b = tok_at(w, s, 1),
                  &c = tok_at(w, s, 2);
      if (!(a.kind == 'L' && b.kind == 'X' && c.kind == 'R' &&
            b.row == a.row - 1 && c.row == a.row))
        bad_site(w, s, "pattern mismatch");
      return rewrite(w, p, 3, {});
    }
    case MoveKind::R2a: {
      const Token& t = tok_at(w, s, 0);
      if (t.kind != 'L') bad_site(w, s, "needs a left cusp");
      const int k = t.row;
      if (s.variant == 0) {
        if (cs[p] < k) bad_site(w, s, "no strand to slide over");
        return rewrite(w, p, 1, {{'L', k + 1}, {'X', k}, {'X', k + 1}});
      }
      if (k < 2) bad_site(w, s, "no strand above the cusp");
      return rewrite(w, p, 1, {{'L', k - 1}, {'X', k}, {'X', k - 1}});
    }
    case MoveKind::R2b: {
      const Token& t = tok_at(w, s, 0);
      if (t.kind != 'R') bad_site(w, s, "needs a right cusp");
      const int k = t.row;
      if (s.variant == 0) {
        if (cs[p] < k + 2) bad_site(w, s, "no strand to slide over");
        return rewrite(w, p, 1, {{'X', k + 1}, {'X', k}, {'R', k + 1}});
      }
      if (k < 2) bad_site(w, s, "no strand above the cusp");
      return rewrite(w, p, 1, {{'X', k - 1}, {'X', k}, {'R', k - 1}});
    }
    case MoveKind::R2aInv: {
      const Token &a = tok_at(w, s, 0), &b = tok_at(w, s, 1),
                  &c = tok_at(w, s, 2);
      const int off = s.variant == 0 ? 1 : -1;
      if (!(a.kind == 'L' && b.kind == 'X' && c.kind == 'X' &&
            a.row == b.row + off && c.row == b.row + off))
        bad_site(w, s, "pattern mismatch");
      return rewrite(w, p, 3, {{'L', s.variant == 0 ? a.row - 1 : a.row + 1}});
    }
    case MoveKind::R2bInv: {
      const Token &a = tok_at(w, s, 0), &b = tok_at(w, s, 1),
                  &c = tok_at(w, s, 2);
      const int off = s.variant == 0 ? 1 : -1;
      if (!(a.kind == 'X' && b.kind == 'X' && c.kind == 'R' &&
            a.row == b.row + off && c.row == b.row + off))
        bad_site(w, s, "pattern mismatch");
      return rewrite(w, p, 3, {{'R', s.variant == 0 ? a.row - 1 : a.row + 1}});
    }
    case MoveKind::R3: {
      const Token &a = tok_at(w, s, 0), &b = tok_at(w, s, 1),
                  &c = tok_at(w, s, 2);
      if (!(a.kind == 'X' && b.kind == 'X' && c.kind == 'X' &&
            a.row == c.row && std::abs(b.row - a.row) == 1))
        bad_site(w, s, "pattern mismatch");
      return rewrite(w, p, 3, {{'X', b.row}, {'X', a.row}, {'X', b.row}});
    }
    case MoveKind::SaddleUp: {
      const Token &a = tok_at(w, s, 0), &b = tok_at(w, s, 1);
      if (!(a.kind == 'R' && b.kind == 'L' && a.row == b.row))
        bad_site(w, s, "needs an adjacent R L pair on one row");
      return rewrite(w, p, 2, {});
    }
    case MoveKind::Birth: {
      need_range(w, s, 0, m);
      const int i = s.variant;
      if (i < 1 || i > cs[p] + 1) bad_site(w, s, "row out of range");
      return rewrite(w, p, 0, {{'L', i}, {'R', i}});
    }
    case MoveKind::Death: {
      const Token &a = tok_at(w, s, 0), &b = tok_at(w, s, 1);
      if (!(a.kind == 'L' && b.kind == 'R' && a.row == b.row))
        bad_site(w, s, "needs an adjacent L R pair on one row");
      return rewrite(w, p, 2, {});
    }
    case MoveKind::FarCommute: {
      auto nw = try_far_commute(w, p);
      if (!nw) bad_site(w, s, "events do not far-commute");
      MoveResult r;
      r.word = std::move(*nw);
      r.cut_at = p;
      r.cut_len = 2;
      r.rep_len = 2;
      return r;
    }
  }
  bad_site(w, s, "unknown move");
}

std::map<Seg, int> carry_dirs(const Orientation& o, const MoveResult& r) {
  const int delta = r.rep_len - r.cut_len;
  std::map<Seg, int> out;
  for (const auto& [s, d] : o.dir) {
    if (s.gap <= r.cut_at)
      out[s] = d;
    else if (s.gap >= r.cut_at + r.cut_len)
      out[{s.gap + delta, s.row}] = d;
  }
  return out;
}

bool saddle_coherent(const FrontWord& w, int p, const Orientation& o) {
  const int i = w[p].row;
  return o.dir.at({p, i}) == o.dir.at({p + 2, i});
}

Script parse_script(const std::string& text) {
  Script sc;
  std::istringstream is(text);
  std::string line;
  bool have_front = false;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "FRONT") {
      if (have_front) throw SyntaxError("duplicate FRONT line");
      std::string rest;
      std::getline(ls, rest);
      sc.bottom = parse_front(rest);
      have_front = true;
    } else if (head == "MOVE") {
      if (!have_front) throw SyntaxError("MOVE before FRONT");
      std::string kind;
      int index = 0;
      if (!(ls >> kind >> index)) throw SyntaxError("bad MOVE line");
      MoveSite s{parse_kind(kind), index, 0};
      ls >> s.variant;  // optional
      sc.steps.push_back(s);
    } else {
      throw SyntaxError("unknown script line '" + head + "'");
    }
  }
  if (!have_front) throw SyntaxError("script needs a FRONT line");
  return sc;
}

std::string serialize_script(const Script& s) {
  std::ostringstream os;
  os << "FRONT " << serialize_front(s.bottom) << '\n';
  for (const MoveSite& st : s.steps) {
    os << "MOVE " << kind_name(st.kind) << ' ' << st.index;
    if (st.variant != 0) os << ' ' << st.variant;
    os << '\n';
  }
  return os.str();
}

CobordismReport verify_script(const Script& s, bool allow_caps) {
  CobordismReport rep;
  FrontWord w = s.bottom;
  validate_front(w);
  Orientation o = orient(w);
  rep.tb_bottom = invariants(w, o).tb;
  const int comps_bottom = static_cast<int>(o.comps.size());
  for (size_t idx = 0; idx < s.steps.size(); ++idx) {
    const MoveSite& st = s.steps[idx];
    const std::string at = "step " + std::to_string(idx + 1) + ": ";
    if (st.kind == MoveKind::Death) {
      if (!allow_caps)
        throw StepError(at + "Death requires --allow-caps");
      rep.capped = true;
      ++rep.deaths;
    }
    MoveResult r;
    try {
      r = apply_move(w, st);
    } catch (const InvalidSite& e) {
      throw StepError(at + e.what());
    } catch (const ValidationError& e) {
      throw StepError(at + e.what());
    }
    // The site pattern is valid now, so the coherence lookup is in range.
    if (st.kind == MoveKind::SaddleUp) {
      ++rep.saddles;
      if (!saddle_coherent(w, st.index, o)) rep.oriented = false;
    }
    if (st.kind == MoveKind::Birth) ++rep.births;
    o = orient_seeded(r.word, carry_dirs(o, r));
    w = std::move(r.word);
  }
  rep.top = w;
  rep.chi = rep.births + rep.deaths - rep.saddles;
  rep.tb_top = invariants(w, o).tb;
  const int comps_top = static_cast<int>(orient(w).comps.size());
  rep.ok = true;
  if (!rep.capped && rep.oriented &&
      rep.tb_top - rep.tb_bottom != -rep.chi) {
    rep.ok = false;
    rep.diagnostics = "tb relation violated: tb_top - tb_bottom = " +
                      std::to_string(rep.tb_top - rep.tb_bottom) +
                      " but -chi = " + std::to_string(-rep.chi);
  }
  // chi = 2 - 2g - b for a connected oriented surface with b boundary
  // circles; report g when the formula yields a non-negative integer.
  const int b = comps_bottom + comps_top;
  const int num = 2 - b - rep.chi;
  if (num >= 0 && num % 2 == 0)
    rep.genus = num / 2;
  return rep;
}

SearchResult search_cobordism(const FrontWord& from, const FrontWord& to,
                              const SearchBudget& budget) {
  validate_front(from);
  validate_front(to);
  SearchResult res;
  res.script.bottom = from;

  if (serialize_front(from) == serialize_front(to)) {
    res.found = true;
    res.depth = 0;
    res.states = 1;
    return res;
  }

  auto key_of = [](const FrontWord& w) {
    return serialize_front(normal_form(w));
  };
  const std::string goal = key_of(to);

  struct Node {
    FrontWord word;
    int depth;
    long long parent;  // index into nodes, -1 for the root
    MoveSite via;
  };
  std::vector<Node> nodes;
  std::map<std::string, long long> seen;
  std::deque<long long> queue;
  nodes.push_back({from, 0, -1, {}});
  seen[key_of(from)] = 0;
  queue.push_back(0);
  long long goal_node = key_of(from) == goal ? 0 : -1;

  while (goal_node < 0 && !queue.empty()) {
    const long long cur = queue.front();
    queue.pop_front();
    const FrontWord w = nodes[cur].word;
    const int depth = nodes[cur].depth;
    if (depth >= budget.max_depth) {
      res.budget_exceeded = true;
      continue;
    }
    for (const MoveSite& s : enumerate_moves(w)) {
      if (s.kind == MoveKind::FarCommute) continue;  // same state
      MoveResult r = apply_move(w, s);
      if (static_cast<int>(r.word.size()) > budget.max_events) {
        res.budget_exceeded = true;
        continue;
      }
      const std::string k = key_of(r.word);
      if (seen.count(k)) continue;
      if (static_cast<long long>(nodes.size()) >= budget.max_states) {
        res.budget_exceeded = true;
        break;
      }
      seen[k] = static_cast<long long>(nodes.size());
      nodes.push_back({r.word, depth + 1, cur, s});
      if (k == goal) {
        goal_node = static_cast<long long>(nodes.size()) - 1;
        break;
      }
      queue.push_back(static_cast<long long>(nodes.size()) - 1);
    }
  }
  res.states = static_cast<long long>(nodes.size());
  if (goal_node < 0) return res;

  std::vector<MoveSite> steps;
  for (long long at = goal_node; nodes[at].parent >= 0;
       at = nodes[at].parent)
    steps.push_back(nodes[at].via);
  std::reverse(steps.begin(), steps.end());
  res.depth = static_cast<int>(steps.size());

  // The found word may differ from `to` by plane isotopy; append the
  // far-commutations taking it to the shared normal form, then the inverse
  // of `to`'s own normalization (far commutations are involutive in place).
  std::vector<int> down;
  normal_form(nodes[goal_node].word, &down);
  for (int p : down) steps.push_back({MoveKind::FarCommute, p, 0});
  std::vector<int> up;
  normal_form(to, &up);
  for (auto it = up.rbegin(); it != up.rend(); ++it)
    steps.push_back({MoveKind::FarCommute, *it, 0});

  res.script.steps = std::move(steps);
  res.found = true;
  res.budget_exceeded = false;
  return res;
}

}  // namespace legcob
