#include "legcob/genfam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "legcob/errors.hpp"

namespace legcob {

double rho(double s, const CutoffProfile& profile) {
  const double d = profile.delta;
  if (!(d > 0.0 && d < 0.5))
    throw DomainError("cutoff delta must lie in (0, 1/2)");
  if (s <= d) return -1.0;
  if (s >= 1.0 - d) return 1.0;
  const double u = (s - d) / (1.0 - 2.0 * d);
  const double smooth = ((6.0 * u - 15.0) * u + 10.0) * u * u * u;
  return 2.0 * smooth - 1.0;
}

double genfam_value(double s, double t, double eta,
                    const CutoffProfile& profile) {
  if (s <= 0.0) throw DomainError("generating family needs s > 0");
  return s * (eta * eta * eta / 3.0 - 1.5 * (rho(s, profile) - t * t) * eta);
}

FrontSlice front_slice(double s, const CutoffProfile& profile,
                       const GridSpec& grid) {
  if (s <= 0.0) throw DomainError("generating family needs s > 0");
  FrontSlice slice;
  slice.s = s;
  const double r = rho(s, profile);
  if (r == 0.0) slice.birth_moment = true;
  if (r <= 0.0) return slice;
  slice.cusp_ts = {-std::sqrt(r), std::sqrt(r)};
  const int n = std::max(grid.points, 2);
  for (int i = 0; i < n; ++i) {
    const double t =
        grid.t_min + (grid.t_max - grid.t_min) * i / double(n - 1);
    const double disc = r - t * t;
    if (disc <= 0.0) continue;
    const double eta = std::sqrt(1.5 * disc);
    const double z = -(2.0 / 3.0) * s * eta * eta * eta;
    slice.points.push_back({t, z, '+'});
    slice.points.push_back({t, -z, '-'});
  }
  return slice;
}

namespace {

double comp_x(double, double, double q2, double) { return q2; }
double comp_y(double q1, double, double, double p2) { return q1 * p2; }
double comp_z(double q1, double, double, double) { return std::log(q1); }
double comp_t(double, double p1, double, double) { return p1; }

}  // namespace

Map4 symplecto_map() { return {comp_x, comp_y, comp_z, comp_t}; }

SympCheckResult symplecto_check_map(const std::vector<Sample4>& samples,
                                    double h, const Map4& comps) {
  if (h <= 0.0) throw DomainError("step size must be positive");
  for (const Sample4& u : samples)
    if (u[0] <= h)
      throw DegenerateSample("sample with q1 <= h cannot be differenced");

  SympCheckResult best;
  best.deviation = std::numeric_limits<double>::infinity();
  std::array<int, 4> perm = {0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    double worst = 0.0;
    for (const Sample4& u : samples) {
      double vals[4];
      for (int i = 0; i < 4; ++i)
        vals[i] = comps[perm[i]](u[0], u[1], u[2], u[3]);
      double J[4][4];
      for (int j = 0; j < 4; ++j) {
        Sample4 up = u, um = u;
        up[j] += h;
        um[j] -= h;
        for (int i = 0; i < 4; ++i)
          J[i][j] = (comps[perm[i]](up[0], up[1], up[2], up[3]) -
                     comps[perm[i]](um[0], um[1], um[2], um[3])) /
                    (2.0 * h);
      }
      const double y = vals[1], t = vals[3];
      const double et = std::exp(t);
      double M[4][4] = {};
      M[0][1] = et;
      M[1][0] = -et;
      M[0][3] = y * et;
      M[3][0] = -y * et;
      M[2][3] = -et;
      M[3][2] = et;
      double C[4][4] = {};
      C[0][1] = 1.0;
      C[1][0] = -1.0;
      C[2][3] = 1.0;
      C[3][2] = -1.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          double pab = 0.0;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) pab += J[i][a] * M[i][j] * J[j][b];
          worst = std::max(worst, std::abs(pab - C[a][b]));
        }
      if (worst >= best.deviation) break;
    }
    if (worst < best.deviation) {
      best.deviation = worst;
      best.ordering = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SympCheckResult symplecto_check(const std::vector<Sample4>& samples,
                                double h) {
  return symplecto_check_map(samples, h, symplecto_map());
}

std::vector<Sample4> symplecto_samples(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> uni(0.5, 2.0);
  std::vector<Sample4> out;
  out.reserve(static_cast<size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    Sample4 u;
    for (double& v : u) v = uni(gen);
    out.push_back(u);
  }
  return out;
}

}  // namespace legcob
