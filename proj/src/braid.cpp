#include "legcob/braid.hpp"

#include <numeric>
#include <sstream>

namespace legcob {

namespace {

int parse_strand_header(std::istringstream& is) {
  std::string head;
  while (is >> head) {
    if (head[0] == '#') {
      std::string rest;
      std::getline(is, rest);
      continue;
    }
    break;
  }
  if (head.size() < 2 || head[0] != 'B')
    throw SyntaxError("expected strand count 'B<n>'");
  int n = 0;
  for (size_t i = 1; i < head.size(); ++i) {
    if (head[i] < '0' || head[i] > '9')
      throw SyntaxError("expected strand count 'B<n>'");
    n = n * 10 + (head[i] - '0');
  }
  if (n < 1) throw SyntaxError("strand count must be positive");
  return n;
}

std::string strip_comments(const std::string& text) {
  std::istringstream is(text);
  std::string line, out;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    out += line + "\n";
  }
  return out;
}

}  // namespace

BraidWord parse_braid(const std::string& text) {
  std::istringstream is(strip_comments(text));
  BraidWord b;
  b.n = parse_strand_header(is);
  int g;
  while (is >> g) b.letters.push_back(g);
  if (!is.eof()) throw SyntaxError("bad braid letter");
  validate_braid(b);
  return b;
}

std::string serialize_braid(const BraidWord& b) {
  std::ostringstream os;
  os << 'B' << b.n << '\n';
  for (size_t i = 0; i < b.letters.size(); ++i)
    os << b.letters[i] << (i + 1 == b.letters.size() ? "\n" : " ");
  return os.str();
}

void validate_braid(const BraidWord& b) {
  if (b.n < 1) throw ValidationError("strand count must be positive");
  for (int g : b.letters)
    if (g == 0 || std::abs(g) >= b.n)
      throw ValidationError("letter " + std::to_string(g) +
                            " out of range for B" + std::to_string(b.n));
}

PD braid_closure_pd(const BraidWord& b) {
  validate_braid(b);
  struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) {
      while (p[a] != a) a = p[a] = p[p[a]];
      return a;
    }
    void join(int a, int b) { p[find(a)] = find(b); }
  };
  const int maxids = b.n + 2 * static_cast<int>(b.letters.size());
  UF uf(maxids);
  int nids = 0;
  std::vector<int> init(b.n), cur(b.n);
  for (int r = 0; r < b.n; ++r) init[r] = cur[r] = nids++;
  std::vector<std::array<int, 4>> tuples;
  for (int g : b.letters) {
    const int a = std::abs(g) - 1;  // 0-based upper row of the crossing
    const int n_top = nids++, n_bot = nids++;
    if (g > 0)
      tuples.push_back({cur[a + 1], n_bot, n_top, cur[a]});
    else
      tuples.push_back({cur[a], cur[a + 1], n_bot, n_top});
    cur[a] = n_top;
    cur[a + 1] = n_bot;
  }
  for (int r = 0; r < b.n; ++r) uf.join(cur[r], init[r]);

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
    for (int& e : t) ++e;
  return canonical_relabel(d);
}

std::vector<int> closure_permutation(const BraidWord& b) {
  std::vector<int> p(b.n);
  std::iota(p.begin(), p.end(), 0);
  for (int g : b.letters) {
    const int a = std::abs(g) - 1;
    std::swap(p[a], p[a + 1]);
  }
  return p;
}

int closure_components(const BraidWord& b) {
  std::vector<int> p = closure_permutation(b);
  std::vector<bool> seen(b.n, false);
  int cycles = 0;
  for (int r = 0; r < b.n; ++r) {
    if (seen[r]) continue;
    ++cycles;
    for (int s = r; !seen[s]; s = p[s]) seen[s] = true;
  }
  return cycles;
}

QPFactorization parse_qp(const std::string& text) {
  std::istringstream is(strip_comments(text));
  std::string line;
  QPFactorization q;
  bool have_n = false;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (!have_n) {
      if (head.size() < 2 || head[0] != 'B')
        throw SyntaxError("expected strand count 'B<n>'");
      q.n = std::stoi(head.substr(1));
      if (q.n < 1) throw SyntaxError("strand count must be positive");
      have_n = true;
      continue;
    }
    if (head != "W") throw SyntaxError("expected 'W <word> ; I <gen>'");
    BandFactor f;
    std::string tok;
    bool semi = false;
    while (ls >> tok) {
      if (tok == ";") {
        semi = true;
        break;
      }
      f.conj.push_back(std::stoi(tok));
    }
    if (!semi || !(ls >> tok) || tok != "I" || !(ls >> f.gen))
      throw SyntaxError("expected 'W <word> ; I <gen>'");
    if (f.gen < 1 || f.gen >= q.n)
      throw ValidationError("factor generator out of range");
    for (int g : f.conj)
      if (g == 0 || std::abs(g) >= q.n)
        throw ValidationError("conjugating letter out of range");
    q.factors.push_back(std::move(f));
  }
  if (!have_n) throw SyntaxError("expected strand count 'B<n>'");
  return q;
}

BraidWord qp_expand(const QPFactorization& q) {
  BraidWord b;
  b.n = q.n;
  for (const BandFactor& f : q.factors) {
    for (int g : f.conj) b.letters.push_back(g);
    b.letters.push_back(f.gen);
    for (auto it = f.conj.rbegin(); it != f.conj.rend(); ++it)
      b.letters.push_back(-*it);
  }
  validate_braid(b);
  return b;
}

SurfaceData surface_data(const QPFactorization& q) {
  SurfaceData s;
  s.strands = q.n;
  s.bands = static_cast<int>(q.factors.size());
  s.chi = s.strands - s.bands;
  BraidWord b = qp_expand(q);
  for (int g : b.letters) s.exponent_sum += g > 0 ? 1 : -1;
  s.self_linking = s.exponent_sum - s.strands;
  s.components = closure_components(b);
  s.is_knot = s.components == 1;
  s.is_disk = s.is_knot && s.chi == 1;
  if (s.is_knot) s.slice_genus = (1 - s.chi) / 2;
  return s;
}

}  // namespace legcob
