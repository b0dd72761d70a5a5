#include "legcob/laurent.hpp"

#include <sstream>

namespace legcob {

Laurent1 Laurent1::mono(int exp, long long coeff) {
  Laurent1 p;
  if (coeff != 0) p.c[exp] = coeff;
  return p;
}

Laurent1 operator+(const Laurent1& a, const Laurent1& b) {
  Laurent1 r = a;
  for (const auto& [e, v] : b.c) {
    long long nv = (r.c.count(e) ? r.c[e] : 0) + v;
    if (nv == 0)
      r.c.erase(e);
    else
      r.c[e] = nv;
  }
  return r;
}

Laurent1 operator-(const Laurent1& a, const Laurent1& b) {
  return a + scale(b, -1);
}

Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
  Laurent1 r;
  for (const auto& [ea, va] : a.c)
    for (const auto& [eb, vb] : b.c) {
      long long nv = (r.c.count(ea + eb) ? r.c[ea + eb] : 0) + va * vb;
      if (nv == 0)
        r.c.erase(ea + eb);
      else
        r.c[ea + eb] = nv;
    }
  return r;
}

Laurent1 scale(const Laurent1& a, long long k) {
  Laurent1 r;
  if (k == 0) return r;
  for (const auto& [e, v] : a.c) r.c[e] = v * k;
  return r;
}

Laurent1 pow(const Laurent1& a, int n) {
  Laurent1 r = Laurent1::mono(0);
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

Laurent1 invert_var(const Laurent1& a) {
  Laurent1 r;
  for (const auto& [e, v] : a.c) r.c[-e] = v;
  return r;
}

Laurent1 divide_exact(const Laurent1& num, const Laurent1& den) {
  if (den.is_zero()) throw DomainError("division by zero polynomial");
  if (num.is_zero()) return {};
  // Shift so both operands become ordinary polynomials; then division from
  // the top terminates (the remainder's degree strictly decreases) and a
  // remainder below the divisor's degree certifies inexactness.
  const int nmin = num.c.begin()->first;
  const int dmin = den.c.begin()->first;
  const int dlead = std::prev(den.c.end())->first;
  const long long dlc = std::prev(den.c.end())->second;
  Laurent1 rem = num;
  Laurent1 quot;
  while (!rem.is_zero()) {
    const auto top = std::prev(rem.c.end());
    const int qexp = top->first - dlead;
    if (qexp < nmin - dmin || top->second % dlc != 0)
      throw DomainError("inexact polynomial division");
    Laurent1 t = Laurent1::mono(qexp, top->second / dlc);
    quot = quot + t;
    rem = rem - t * den;
  }
  return quot;
}

std::string to_string(const Laurent1& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : a.c) {
    if (!first) os << ' ';
    first = false;
    os << e << ':' << v;
  }
  if (first) os << "0:0";
  return os.str();
}

Laurent2 Laurent2::mono(int ea, int ez, long long coeff) {
  Laurent2 p;
  if (coeff != 0) p.c[{ea, ez}] = coeff;
  return p;
}

Laurent2 operator+(const Laurent2& a, const Laurent2& b) {
  Laurent2 r = a;
  for (const auto& [e, v] : b.c) {
    long long nv = (r.c.count(e) ? r.c[e] : 0) + v;
    if (nv == 0)
      r.c.erase(e);
    else
      r.c[e] = nv;
  }
  return r;
}

Laurent2 operator-(const Laurent2& a, const Laurent2& b) {
  return a + scale(b, -1);
}

Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
  Laurent2 r;
  for (const auto& [ea, va] : a.c)
    for (const auto& [eb, vb] : b.c) {
      std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
      long long nv = (r.c.count(e) ? r.c[e] : 0) + va * vb;
      if (nv == 0)
        r.c.erase(e);
      else
        r.c[e] = nv;
    }
  return r;
}

Laurent2 scale(const Laurent2& a, long long k) {
  Laurent2 r;
  if (k == 0) return r;
  for (const auto& [e, v] : a.c) r.c[e] = v * k;
  return r;
}

Laurent2 pow(const Laurent2& a, int n) {
  Laurent2 r = Laurent2::mono(0, 0);
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

int max_a_degree(const Laurent2& a) {
  if (a.is_zero()) throw DomainError("degree of zero polynomial");
  int best = a.c.begin()->first.first;
  for (const auto& [e, v] : a.c) best = std::max(best, e.first);
  return best;
}

std::string to_string(const Laurent2& a) {
  std::ostringstream os;
  for (const auto& [e, v] : a.c)
    os << e.first << ' ' << e.second << ' ' << v << '\n';
  return os.str();
}

}  // namespace legcob
