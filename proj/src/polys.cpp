#include "legcob/polys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <vector>

namespace legcob {

namespace {

const Laurent1 kDeltaBracket = Laurent1::mono(2, -1) + Laurent1::mono(-2, -1);
const Laurent2 kDeltaDub = Laurent2::mono(1, -1) + Laurent2::mono(-1, -1, -1) +
                           Laurent2::mono(0, 0);

void check_cap(const PD& d, int cap) {
  if (static_cast<int>(d.x.size()) > cap)
    throw CrossingCapExceeded("diagram has " + std::to_string(d.x.size()) +
                              " crossings, cap is " + std::to_string(cap));
}

// States grouped by (number of B smoothings, circle count): every state
// contributes A^(n-2b) delta^c, so integer tallies capture the whole sum
// and the polynomial assembly happens once at the end.  Integer merges
// also make the result independent of how tasks are assigned to threads.
using StateCounts = std::vector<std::vector<long long>>;

// Tallies all states whose smoothing choices extend the given prefix mask
// (bit ci set = B smoothing at crossing ci).
void bracket_range(const PD& d, unsigned long long prefix, int k, int maxe,
                   StateCounts& cnt) {
  const int n = static_cast<int>(d.x.size());
  const unsigned long long rest = 1ull << (n - k);
  std::vector<int> parent(maxe + 1);
  std::vector<int> stamp(maxe + 1, -1);
  for (unsigned long long hi = 0; hi < rest; ++hi) {
    const unsigned long long mask = prefix | (hi << k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    int nb = 0;
    for (int ci = 0; ci < n; ++ci) {
      const auto& t = d.x[ci];
      if (mask >> ci & 1) {
        ++nb;
        parent[find(t[1])] = find(t[2]);
        parent[find(t[3])] = find(t[0]);
      } else {
        parent[find(t[0])] = find(t[1]);
        parent[find(t[2])] = find(t[3]);
      }
    }
    int circles = d.loops;
    const int tick = static_cast<int>(hi);
    for (const auto& t : d.x)
      for (int e : t) {
        int r = find(e);
        if (stamp[r] != tick) {
          stamp[r] = tick;
          ++circles;
        }
      }
    ++cnt[nb][circles];
  }
}

}  // namespace

Laurent1 kauffman_bracket(const PD& d, int cap, int threads) {
  check_cap(d, cap);
  const int n = static_cast<int>(d.x.size());
  if (n == 0) return pow(kDeltaBracket, d.loops);
  int maxe = 0;
  for (const auto& t : d.x) maxe = std::max({maxe, t[0], t[1], t[2], t[3]});
  const int maxc = maxe + 1 + d.loops;
  // The split depth depends only on the diagram so that every thread count
  // tallies the same tasks; counts merge commutatively.
  const int k = std::min(n, 6);
  const int ntask = 1 << k;
  const int nthreads = std::max(1, std::min(threads, ntask));
  StateCounts cnt(n + 1, std::vector<long long>(maxc + 1, 0));
  if (nthreads == 1) {
    for (int t = 0; t < ntask; ++t) bracket_range(d, t, k, maxe, cnt);
  } else {
    std::vector<StateCounts> part(
        nthreads, StateCounts(n + 1, std::vector<long long>(maxc + 1, 0)));
    std::vector<std::thread> pool;
    for (int id = 0; id < nthreads; ++id)
      pool.emplace_back([&, id]() {
        for (int t = id; t < ntask; t += nthreads)
          bracket_range(d, t, k, maxe, part[id]);
      });
    for (auto& th : pool) th.join();
    for (const StateCounts& p : part)
      for (int b = 0; b <= n; ++b)
        for (int c = 0; c <= maxc; ++c) cnt[b][c] += p[b][c];
  }
  std::vector<Laurent1> delta_pow(maxc + 1);
  delta_pow[0] = Laurent1::mono(0);
  for (int c = 1; c <= maxc; ++c) delta_pow[c] = delta_pow[c - 1] * kDeltaBracket;
  Laurent1 total;
  for (int b = 0; b <= n; ++b)
    for (int c = 0; c <= maxc; ++c)
      if (cnt[b][c])
        total = total + Laurent1::mono(n - 2 * b, cnt[b][c]) * delta_pow[c];
  return total;
}

Laurent1 jones(const PD& d, int cap, std::optional<int> writhe, int threads) {
  if (d.x.empty() && d.loops == 0)
    throw DomainError("jones of the empty diagram is undefined");
  const int w = writhe ? *writhe : pd_writhe(d);
  Laurent1 br = kauffman_bracket(d, cap, threads);
  Laurent1 pre = Laurent1::mono(-3 * w, (w % 2 == 0) ? 1 : -1);
  return divide_exact(pre * br, kDeltaBracket);
}

namespace {

using Tuples = std::vector<std::array<int, 4>>;

// Removes crossing ci and joins the listed slot pairs; counts circles that
// close up entirely inside the removed crossing.
std::pair<Tuples, int> splice(const Tuples& tuples, int ci,
                              const std::array<std::pair<int, int>, 2>& pairs,
                              int npairs) {
  Tuples rest;
  rest.reserve(tuples.size() - 1);
  for (int j = 0; j < static_cast<int>(tuples.size()); ++j)
    if (j != ci) rest.push_back(tuples[j]);
  const auto& t = tuples[ci];
  std::vector<std::pair<int, int>> pend;
  for (int k = 0; k < npairs; ++k)
    pend.push_back({t[pairs[k].first], t[pairs[k].second]});
  int loops = 0;
  for (size_t k = 0; k < pend.size(); ++k) {
    auto [x, y] = pend[k];
    if (x == y) {
      ++loops;
      continue;
    }
    for (auto& tt : rest)
      for (int& e : tt)
        if (e == y) e = x;
    for (size_t k2 = k + 1; k2 < pend.size(); ++k2) {
      if (pend[k2].first == y) pend[k2].first = x;
      if (pend[k2].second == y) pend[k2].second = x;
    }
  }
  return {std::move(rest), loops};
}

std::pair<int, int> other_end(const std::map<int, std::vector<std::pair<int, int>>>& occ,
                              int edge, int ci, int s) {
  const auto& v = occ.at(edge);
  if (v[0] == std::make_pair(ci, s)) return v[1];
  return v[0];
}

std::map<int, std::vector<std::pair<int, int>>> occ_map(const Tuples& tuples) {
  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (int ci = 0; ci < static_cast<int>(tuples.size()); ++ci)
    for (int s = 0; s < 4; ++s) occ[tuples[ci][s]].push_back({ci, s});
  return occ;
}

// One deterministic traversal of every strand passage.  Returns the
// crossings first reached along their under-line (in visit order) and the
// number of closed components among the crossings.
std::pair<std::vector<int>, int> walk(const Tuples& tuples) {
  auto occ = occ_map(tuples);
  std::set<std::pair<int, int>> visited;  // (crossing, line), line = slot % 2
  std::map<int, int> first_line;
  std::vector<int> bad;
  int ncomp = 0;
  for (int ci0 = 0; ci0 < static_cast<int>(tuples.size()); ++ci0)
    for (int s0 = 0; s0 < 4; ++s0) {
      if (visited.count({ci0, s0 % 2})) continue;
      ++ncomp;
      int ci = ci0, s = s0;
      while (!visited.count({ci, s % 2})) {
        visited.insert({ci, s % 2});
        if (!first_line.count(ci)) {
          first_line[ci] = s % 2;
          if (s % 2 == 0) bad.push_back(ci);
        }
        const int out = (s + 2) % 4;
        auto [c2, s2] = other_end(occ, tuples[ci][out], ci, out);
        ci = c2;
        s = s2;
      }
    }
  return {std::move(bad), ncomp};
}

// Value of a descending diagram: a^{self-writhe} times a circle factor per
// extra component.  The self-writhe reads each crossing's sign off the slot
// through which the strand leaving the under-out slot first returns.
Laurent2 descending_value(const Tuples& tuples, int ncomp,
                          const Laurent2& delta) {
  auto occ = occ_map(tuples);
  int w = 0;
  for (int ci = 0; ci < static_cast<int>(tuples.size()); ++ci) {
    auto [cj, s] = other_end(occ, tuples[ci][2], ci, 2);
    while (cj != ci) {
      const int out = (s + 2) % 4;
      auto nx = other_end(occ, tuples[cj][out], cj, out);
      cj = nx.first;
      s = nx.second;
    }
    if (s == 3)
      ++w;
    else if (s == 1)
      --w;
    // s == 0: the crossing involves two components; no self contribution.
  }
  return Laurent2::mono(w, 0) * pow(delta, ncomp - 1);
}

std::array<int, 4> switch_tuple(const std::array<int, 4>& t) {
  return {t[1], t[2], t[3], t[0]};
}

std::string memo_key(const Tuples& tuples) {
  PD d;
  d.x = tuples;
  return serialize_pd(canonical_relabel(d));
}

Laurent2 dub_rec(const Tuples& tuples, int free_loops,
                 std::map<std::string, Laurent2>& memo, int ncross_parent);

Laurent2 dub_core(const Tuples& tuples,
                  std::map<std::string, Laurent2>& memo) {
  const std::string key = memo_key(tuples);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Laurent2 result;
  bool stripped = false;
  for (int ci = 0; ci < static_cast<int>(tuples.size()) && !stripped; ++ci) {
    const auto& t = tuples[ci];
    int a_exp = 0;
    std::array<std::pair<int, int>, 2> join{};
    if (t[0] == t[1]) {
      a_exp = 1;
      join[0] = {2, 3};
    } else if (t[2] == t[3]) {
      a_exp = 1;
      join[0] = {0, 1};
    } else if (t[1] == t[2]) {
      a_exp = -1;
      join[0] = {3, 0};
    } else if (t[3] == t[0]) {
      a_exp = -1;
      join[0] = {1, 2};
    } else {
      continue;
    }
    auto [rest, loops] = splice(tuples, ci, join, 1);
    result = Laurent2::mono(a_exp, 0) *
             dub_rec(rest, loops, memo, static_cast<int>(tuples.size()));
    stripped = true;
  }
  if (!stripped) {
    auto [bad, ncomp] = walk(tuples);
    Tuples cur = tuples;
    Laurent2 corrections;
    for (int cj : bad) {
      auto [ta, la] = splice(cur, cj, {{{0, 1}, {2, 3}}}, 2);
      auto [tb, lb] = splice(cur, cj, {{{1, 2}, {3, 0}}}, 2);
      corrections = corrections +
                    dub_rec(ta, la, memo, static_cast<int>(tuples.size())) -
                    dub_rec(tb, lb, memo, static_cast<int>(tuples.size()));
      cur[cj] = switch_tuple(cur[cj]);
    }
    result = descending_value(cur, ncomp, kDeltaDub) +
             Laurent2::mono(0, 1) * corrections;
  }
  memo[key] = result;
  return result;
}

Laurent2 dub_rec(const Tuples& tuples, int free_loops,
                 std::map<std::string, Laurent2>& memo, int ncross_parent) {
  if (static_cast<int>(tuples.size()) >= ncross_parent)
    throw NonterminationGuard("crossing count did not decrease");
  if (tuples.empty()) {
    if (free_loops == 0)
      throw DomainError("dubrovnik of the empty diagram is undefined");
    return pow(kDeltaDub, free_loops - 1);
  }
  if (free_loops > 0)
    return dub_core(tuples, memo) * pow(kDeltaDub, free_loops);
  return dub_core(tuples, memo);
}

}  // namespace

Laurent2 dubrovnik(const PD& d, int cap) {
  check_cap(d, cap);
  validate_pd(d);
  std::map<std::string, Laurent2> memo;
  return dub_rec(d.x, d.loops, memo, static_cast<int>(d.x.size()) + 1);
}

Laurent2 f_poly(const PD& d, int cap, std::optional<int> writhe) {
  const int w = writhe ? *writhe : pd_writhe(d);
  return Laurent2::mono(-w, 0) * dubrovnik(d, cap);
}

int tb_upper_bound(const PD& d, int cap, std::optional<int> writhe) {
  return -max_a_degree(f_poly(d, cap, writhe)) - 1;
}

}  // namespace legcob
