#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "legcob/errors.hpp"
#include "legcob/genfam.hpp"

using namespace legcob;

namespace {

double corr_y(double q1, double, double, double p2) { return p2 / q1; }
double corr_x(double, double, double q2, double) { return q2; }
double corr_z(double q1, double, double, double) { return std::log(q1); }
double corr_t(double, double p1, double, double) { return p1; }

}  // namespace

TEST_CASE("cutoff profile matches its collars and stays monotone") {
  CHECK(rho(0.05) == -1.0);
  CHECK(rho(0.95) == 1.0);
  CHECK(std::abs(rho(0.5)) < 1e-15);
  for (int i = 1; i < 100; ++i)
    CHECK(rho(0.01 * i) <= rho(0.01 * (i + 1)) + 1e-15);
  CHECK_THROWS_AS(rho(0.5, {0.6}), DomainError);
  CHECK_THROWS_AS(rho(0.5, {0.0}), DomainError);
  // With a dyadic delta the middle of the ramp is exactly zero.
  CHECK(rho(0.5, {0.25}) == 0.0);
}

TEST_CASE("family values are odd in eta and vanish at zero") {
  CHECK(genfam_value(0.7, 0.3, 0.0) == 0.0);
  for (double t : {0.0, 0.3})
    for (double e : {0.2, 1.1})
      CHECK(std::abs(genfam_value(0.7, t, e) + genfam_value(0.7, t, -e)) <
            1e-15);
  CHECK_THROWS_AS(genfam_value(0.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(genfam_value(-1.0, 0.0, 1.0), DomainError);
}

TEST_CASE("critical points satisfy the closed forms") {
  const double s = 0.95;
  const double r = rho(s);
  double worst_d = 0.0, worst_z = 0.0;
  const double h = 1e-5;
  for (int i = -150; i <= 150; ++i) {
    const double t = 0.01 * i;
    const double disc = r - t * t;
    if (disc <= 0.0) continue;
    const double eta = std::sqrt(1.5 * disc);
    const double d =
        (genfam_value(s, t, eta + h) - genfam_value(s, t, eta - h)) /
        (2.0 * h);
    worst_d = std::max(worst_d, std::abs(d));
    const double z = genfam_value(s, t, eta);
    worst_z =
        std::max(worst_z, std::abs(z - (-(2.0 / 3.0) * s * eta * eta * eta)));
  }
  CHECK(worst_d < 1e-9);
  CHECK(worst_z < 1e-12);
}

TEST_CASE("slices are empty before the birth and eye-shaped after") {
  const FrontSlice none = front_slice(0.05);
  CHECK(none.points.empty());
  CHECK(none.cusp_ts.empty());
  CHECK_FALSE(none.birth_moment);
  CHECK(front_slice(0.3).points.empty());

  const FrontSlice moment = front_slice(0.5, {0.25});
  CHECK(moment.points.empty());
  CHECK(moment.birth_moment);

  const FrontSlice eye = front_slice(0.95);
  CHECK(eye.points.size() == 266);
  REQUIRE(eye.cusp_ts.size() == 2);
  CHECK(eye.cusp_ts[0] == -1.0);
  CHECK(eye.cusp_ts[1] == 1.0);
  for (size_t i = 0; i + 1 < eye.points.size(); i += 2) {
    const SlicePoint& plus = eye.points[i];
    const SlicePoint& minus = eye.points[i + 1];
    CHECK(plus.branch == '+');
    CHECK(minus.branch == '-');
    CHECK(plus.t == minus.t);
    CHECK(plus.z == -minus.z);
    CHECK(plus.z < 0.0);
    CHECK(std::abs(plus.t) < 1.0);
  }
  CHECK_THROWS_AS(front_slice(0.0), DomainError);
}

TEST_CASE("coordinate check measures the symplectisation pullback") {
  const std::vector<Sample4> samples = symplecto_samples(100, 20240817u);
  REQUIRE(samples.size() == 100);
  for (const Sample4& u : samples)
    for (double v : u) {
      CHECK(v >= 0.5);
      CHECK(v <= 2.0);
    }

  // The published components miss the form by an O(1) margin under every
  // role assignment.
  const SympCheckResult pub = symplecto_check(samples, 1e-5);
  CHECK(pub.deviation > 1e-2);

  // Replacing the second component by p2/q1 produces a true
  // symplectomorphism, recognized in the (x, y, z, t) = (c0, c1, c3, c2)
  // role ordering with central-difference accuracy.
  const Map4 corrected = {corr_x, corr_y, corr_z, corr_t};
  const SympCheckResult fine = symplecto_check_map(samples, 1e-5, corrected);
  CHECK(fine.deviation < 1e-6);
  CHECK(fine.ordering == std::array<int, 4>{0, 1, 3, 2});
  const SympCheckResult finer =
      symplecto_check_map(samples, 0.5e-5, corrected);
  const double ratio = fine.deviation / finer.deviation;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);

  std::vector<Sample4> bad = samples;
  bad[7][0] = 1e-6;
  CHECK_THROWS_AS(symplecto_check(bad, 1e-5), DegenerateSample);
  CHECK_THROWS_AS(symplecto_check(samples, 0.0), DomainError);
}
