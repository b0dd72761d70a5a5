#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "legcob/errors.hpp"

namespace legcob {

// Exact Laurent polynomials with integer coefficients.  Coefficient maps are
// ordered so that serialization and iteration are deterministic; zero
// coefficients are never stored.

struct Laurent1 {
  std::map<int, long long> c;

  static Laurent1 zero() { return {}; }
  static Laurent1 mono(int exp, long long coeff = 1);

  bool is_zero() const { return c.empty(); }
  bool operator==(const Laurent1&) const = default;
};

Laurent1 operator+(const Laurent1& a, const Laurent1& b);
Laurent1 operator-(const Laurent1& a, const Laurent1& b);
Laurent1 operator*(const Laurent1& a, const Laurent1& b);
Laurent1 scale(const Laurent1& a, long long k);
Laurent1 pow(const Laurent1& a, int n);
// Substitutes A -> A^-1 (mirror images of links swap these).
Laurent1 invert_var(const Laurent1& a);
// Exact division; throws DomainError when the remainder is nonzero.
Laurent1 divide_exact(const Laurent1& num, const Laurent1& den);
// Sorted "exponent:coefficient" pairs separated by single spaces.
std::string to_string(const Laurent1& a);

// Two-variable version (variables a and z), exponents stored as (a, z).
struct Laurent2 {
  std::map<std::pair<int, int>, long long> c;

  static Laurent2 zero() { return {}; }
  static Laurent2 mono(int ea, int ez, long long coeff = 1);

  bool is_zero() const { return c.empty(); }
  bool operator==(const Laurent2&) const = default;
};

Laurent2 operator+(const Laurent2& a, const Laurent2& b);
Laurent2 operator-(const Laurent2& a, const Laurent2& b);
Laurent2 operator*(const Laurent2& a, const Laurent2& b);
Laurent2 scale(const Laurent2& a, long long k);
Laurent2 pow(const Laurent2& a, int n);
// Highest exponent of the first variable; DomainError on the zero polynomial.
int max_a_degree(const Laurent2& a);
// Sorted "a-exp z-exp coeff" triples, one per line.
std::string to_string(const Laurent2& a);

}  // namespace legcob
