#pragma once

#include <string>
#include <vector>

#include "legcob/planar.hpp"

namespace legcob {

// A braid word on n strands: nonzero integers, g > 0 for the positive
// generator crossing strands g, g+1 and -g for its inverse.
struct BraidWord {
  int n = 0;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

// Text form: first non-comment line "B<n>", then whitespace-separated
// signed generator indices.
BraidWord parse_braid(const std::string& text);
std::string serialize_braid(const BraidWord& b);
void validate_braid(const BraidWord& b);

// Planar diagram of the trace closure (strand ends joined around the back).
PD braid_closure_pd(const BraidWord& b);

// Permutation of strand starting positions induced by the word (signs
// ignored), plus the number of closure components (its cycle count).
std::vector<int> closure_permutation(const BraidWord& b);
int closure_components(const BraidWord& b);

// One band of a quasipositive factorization: the conjugate w sigma_i w^-1.
struct BandFactor {
  std::vector<int> conj;
  int gen = 0;
};

// Text form: first line "B<n>", then one "W <letters> ; I <gen>" line per
// factor (the letters may be empty).
struct QPFactorization {
  int n = 0;
  std::vector<BandFactor> factors;
};

QPFactorization parse_qp(const std::string& text);
// Concatenated expansion of all bands.
BraidWord qp_expand(const QPFactorization& q);

// Bookkeeping of the Bennequin surface of a quasipositive braid closure:
// n disks joined by one band per factor.
struct SurfaceData {
  int strands = 0;
  int bands = 0;
  int chi = 0;             // n - k
  int exponent_sum = 0;    // of the expanded word
  int self_linking = 0;    // e - n
  int components = 0;
  bool is_knot = false;
  bool is_disk = false;    // chi == 1 and a knot
  int slice_genus = 0;     // (1 - chi)/2, knots only
};

SurfaceData surface_data(const QPFactorization& q);

}  // namespace legcob
