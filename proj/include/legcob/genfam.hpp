#pragma once

#include <array>
#include <vector>

namespace legcob {

// Monotone cutoff profile: rho is -1 up to delta, +1 from 1 - delta on,
// and a smooth increasing interpolant between the collars.
struct CutoffProfile {
  double delta = 0.1;
};

double rho(double s, const CutoffProfile& profile = {});

// The one-parameter family F(s,t,eta) = s(eta^3/3 - (3/2)(rho(s) - t^2) eta)
// whose fiberwise critical values sweep out the birth of an eye-shaped
// front as s crosses the middle of the profile.
double genfam_value(double s, double t, double eta,
                    const CutoffProfile& profile = {});

struct SlicePoint {
  double t = 0;
  double z = 0;
  char branch = '+';  // sign of the critical eta
};

struct GridSpec {
  int points = 201;
  double t_min = -1.5;
  double t_max = 1.5;
};

struct FrontSlice {
  double s = 0;
  std::vector<SlicePoint> points;
  std::vector<double> cusp_ts;  // -sqrt(rho), +sqrt(rho) when rho > 0
  bool birth_moment = false;    // rho(s) == 0: degenerate single point
};

// Samples the critical locus of eta -> F(s,t,eta) over the t grid.  The
// slice is empty when rho(s) <= 0 and a closed two-branch front when
// rho(s) > 0.
FrontSlice front_slice(double s, const CutoffProfile& profile = {},
                       const GridSpec& grid = {});

using Sample4 = std::array<double, 4>;  // (q1, p1, q2, p2), q1 > 0

using MapComponent = double (*)(double q1, double p1, double q2, double p2);
using Map4 = std::array<MapComponent, 4>;

// The coordinate components (q2, q1 p2, ln q1, p1) to test against the
// symplectisation form d(e^t (dz - y dx)).
Map4 symplecto_map();

struct SympCheckResult {
  double deviation = 0;  // min over orderings of the max entry error
  // ordering[role] = component index assigned to that role, roles being
  // (x, y, z, t) in order.
  std::array<int, 4> ordering{0, 1, 2, 3};
};

// Compares the finite-difference pullback of d(e^t(dz - y dx)) with the
// canonical form dq1^dp1 + dq2^dp2 under all 24 role assignments of the
// map components, returning the best.  DegenerateSample when some q1 <= h.
SympCheckResult symplecto_check_map(const std::vector<Sample4>& samples,
                                    double h, const Map4& comps);
SympCheckResult symplecto_check(const std::vector<Sample4>& samples,
                                double h);

// Deterministic sample generator: uniform in [0.5, 2]^4.
std::vector<Sample4> symplecto_samples(int n, unsigned seed);

}  // namespace legcob
