#include "legcob/planar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace legcob {

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

PD parse_pd(const std::string& text) {
  PD d;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "X") {
      std::array<int, 4> t{};
      for (int& v : t)
        if (!(ls >> v)) throw SyntaxError("X line needs 4 edge labels");
      std::string extra;
      if (ls >> extra) throw SyntaxError("X line has trailing junk");
      d.x.push_back(t);
    } else if (head == "O") {
      int k = 0;
      if (!(ls >> k) || k < 0) throw SyntaxError("O line needs a count");
      d.loops += k;
    } else {
      throw SyntaxError("unknown line '" + head + "'");
    }
  }
  validate_pd(d);
  return d;
}

std::string serialize_pd(const PD& d) {
  std::ostringstream os;
  for (const auto& t : d.x)
    os << "X " << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << '\n';
  if (d.loops) os << "O " << d.loops << '\n';
  return os.str();
}

void validate_pd(const PD& d) {
  std::map<int, int> uses;
  for (const auto& t : d.x)
    for (int e : t) {
      if (e <= 0) throw ValidationError("edge labels must be positive");
      ++uses[e];
    }
  for (const auto& [e, n] : uses)
    if (n != 2)
      throw ValidationError("edge " + std::to_string(e) + " used " +
                            std::to_string(n) + " times (want 2)");
  if (d.loops < 0) throw ValidationError("negative loop count");
}

PD canonical_relabel(const PD& d) {
  PD r = d;
  std::map<int, int> ren;
  int next = 1;
  for (auto& t : r.x)
    for (int& e : t) {
      auto it = ren.find(e);
      if (it == ren.end()) it = ren.emplace(e, next++).first;
      e = it->second;
    }
  return r;
}

std::vector<int> orient_signs(const PD& d) {
  validate_pd(d);
  const int n = static_cast<int>(d.x.size());
  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (int ci = 0; ci < n; ++ci)
    for (int s = 0; s < 4; ++s) occ[d.x[ci][s]].push_back({ci, s});

  // In/out status per slot: under slots are rigid, over slots flip with the
  // crossing sign x: io(slot1) = -x, io(slot3) = +x (+1 means inbound).
  std::vector<int> sign(n, 0);
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  std::vector<std::pair<int, int>> forced;
  for (const auto& [e, ends] : occ) {
    auto [c1, s1] = ends[0];
    auto [c2, s2] = ends[1];
    const bool f1 = (s1 == 0 || s1 == 2), f2 = (s2 == 0 || s2 == 2);
    const int v1 = s1 == 0 ? 1 : -1, v2 = s2 == 0 ? 1 : -1;
    if (f1 && f2) {
      if (v1 * v2 != -1) throw ValidationError("orientation trace failed");
    } else if (f1 || f2) {
      const int f = f1 ? v1 : v2;
      const auto [c, s] = f1 ? ends[1] : ends[0];
      forced.push_back({c, s == 3 ? -f : f});
    } else {
      const int parity = ((s1 == 3) == (s2 == 3)) ? -1 : 1;
      adj[c1].push_back({c2, parity});
      adj[c2].push_back({c1, parity});
    }
  }

  auto assign = [&](int c0, int v0) {
    std::vector<std::pair<int, int>> stack{{c0, v0}};
    while (!stack.empty()) {
      auto [c, v] = stack.back();
      stack.pop_back();
      if (sign[c]) {
        if (sign[c] != v) throw ValidationError("orientation trace failed");
        continue;
      }
      sign[c] = v;
      for (auto [c2, par] : adj[c]) stack.push_back({c2, v * par});
    }
  };
  std::sort(forced.begin(), forced.end());
  for (auto [c, v] : forced) assign(c, v);
  for (int c = 0; c < n; ++c)
    if (!sign[c]) assign(c, +1);
  return sign;
}

int pd_writhe(const PD& d) {
  std::vector<int> s = orient_signs(d);
  return std::accumulate(s.begin(), s.end(), 0);
}

PD pd_mirror(const PD& d) {
  std::vector<int> s = orient_signs(d);
  PD r = d;
  for (size_t i = 0; i < r.x.size(); ++i) {
    const auto& t = d.x[i];
    r.x[i] = s[i] > 0 ? std::array<int, 4>{t[3], t[0], t[1], t[2]}
                      : std::array<int, 4>{t[1], t[2], t[3], t[0]};
  }
  return r;
}

namespace {

PD finalize_pd(std::vector<std::array<int, 4>> tuples, UF& uf, int nids) {
  // Replace every id by its class representative, then find classes that
  // never appear at a crossing: each is a crossing-free circle.
  std::vector<bool> used(nids, false);
  for (auto& t : tuples)
    for (int& e : t) {
      e = uf.find(e);
      used[e] = true;
    }
  int free_loops = 0;
  for (int i = 0; i < nids; ++i)
    if (uf.find(i) == i && !used[i]) ++free_loops;
  PD d;
  d.x = std::move(tuples);
  d.loops = free_loops;
  for (auto& t : d.x)
    for (int& e : t) ++e;  // labels are 1-based
  return canonical_relabel(d);
}

}  // namespace

PD front_to_pd(const FrontWord& w) { return front_to_pd(w, orient(w)); }

PD front_to_pd(const FrontWord& w, const Orientation& o) {
  std::vector<std::array<int, 4>> tuples;
  std::vector<int> cur;  // edge id occupying each row, top to bottom
  int nids = 0;
  UF uf(4 * static_cast<int>(w.size()) + 4);
  auto fresh = [&]() { return nids++; };
  for (size_t j = 0; j < w.size(); ++j) {
    const Token& t = w[j];
    const int e = static_cast<int>(j) + 1;
    const int i = t.row;
    if (t.kind == 'L') {
      const int f = fresh();
      cur.insert(cur.begin() + (i - 1), 2, f);
    } else if (t.kind == 'X') {
      const int n_top = fresh(), n_bot = fresh();
      const int d_under = o.dir.at({e - 1, i + 1});
      if (d_under > 0)
        tuples.push_back({cur[i], n_bot, n_top, cur[i - 1]});
      else
        tuples.push_back({n_top, cur[i - 1], cur[i], n_bot});
      cur[i - 1] = n_top;
      cur[i] = n_bot;
    } else {
      uf.join(cur[i - 1], cur[i]);
      cur.erase(cur.begin() + (i - 1), cur.begin() + (i + 1));
    }
  }
  return finalize_pd(std::move(tuples), uf, nids);
}

std::vector<KnotRecord> parse_knot_table(const std::string& text) {
  std::vector<KnotRecord> out;
  KnotRecord rec;
  bool open = false;
  std::string pd_text;
  auto flush = [&]() {
    if (!open) return;
    if (rec.name.empty()) throw SyntaxError("knot record without NAME");
    rec.pd = parse_pd(pd_text);
    out.push_back(rec);
    rec = {};
    pd_text.clear();
    open = false;
  };
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) {
      flush();
      continue;
    }
    open = true;
    if (head == "NAME") {
      ls >> rec.name;
    } else if (head == "SOURCE") {
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
      rec.source = rest;
    } else if (head == "JONES") {
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
      rec.jones = rest;
    } else if (head == "X" || head == "O") {
      pd_text += line + "\n";
    } else {
      throw SyntaxError("unknown knot-table line '" + head + "'");
    }
  }
  flush();
  return out;
}

}  // namespace legcob
