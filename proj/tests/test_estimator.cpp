#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "skde/estimator.hpp"
#include "skde/geometry.hpp"
#include "skde/rng.hpp"
#include "testutil.hpp"

using namespace skde;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<UnitVector3> random_points(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<UnitVector3> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back(testutil::random_unit(rng));
  return pts;
}
}  // namespace

TEST_CASE("bandwidth rule") {
  CHECK(bandwidth(1, BandwidthPolicy(0.7, 2)) == 1.0);
  CHECK(bandwidth(1024, BandwidthPolicy(1.0, 2)) ==
        doctest::Approx(0.17677669529663687).epsilon(1e-15));
  CHECK(bandwidth(100, BandwidthPolicy(0.5, 2)) ==
        doctest::Approx(std::pow(100.0, -1.0 / 3.0)).epsilon(1e-15));

  // h decreasing, n h^d diverging.
  double prev_h = 2.0, prev_nhd = 0.0;
  for (std::size_t n = 10; n <= 1000000; n *= 10) {
    const double h = bandwidth(n, BandwidthPolicy(1.0, 2));
    CHECK(h < prev_h);
    const double nhd = static_cast<double>(n) * h * h;
    CHECK(nhd > prev_nhd);
    prev_h = h;
    prev_nhd = nhd;
  }
}

TEST_CASE("rectify") {
  CHECK(rectify(-0.2) == 1e-3);
  CHECK(rectify(0.5) == 0.5);
  CHECK(rectify(1e-3) == 1e-3);
  CHECK(rectify(-5.0, 0.25) == 0.25);
  CHECK_THROWS_AS(rectify(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("single-point fit with N = 0 is the uniform density") {
  const auto est = fit({UnitVector3(0, 0, 1)}, g_sigma(6), 0.5, 0);
  SplitMix64 rng(41);
  for (int i = 0; i < 20; ++i)
    CHECK(est.evaluate(testutil::random_unit(rng)) ==
          doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-15));
}

TEST_CASE("fit rejects empty samples") {
  CHECK_THROWS_AS(fit(std::vector<UnitVector3>{}, g_sigma(6), 0.5, 10),
                  std::invalid_argument);
}

TEST_CASE("evaluation is invariant under sample permutation, bit for bit") {
  auto pts = random_points(64, 42);
  auto shuffled = pts;
  SplitMix64 rng(43);
  for (std::size_t i = 0; i + 1 < shuffled.size(); ++i) {
    const auto j = i + rng.next_below(shuffled.size() - i);
    std::swap(shuffled[i], shuffled[j]);
  }
  const auto a = fit(pts, g_sigma(6), 0.2, 80);
  const auto b = fit(shuffled, g_sigma(6), 0.2, 80);
  for (int i = 0; i < 30; ++i) {
    const auto x = testutil::random_unit(rng);
    CHECK(a.evaluate(x) == b.evaluate(x));
  }
}

TEST_CASE("duplicated point behaves like a single point") {
  const UnitVector3 p(0.6, -0.8, 0.0);
  const auto one = fit({p}, g_sigma(6), 0.3, 30);
  const auto two = fit({p, p}, g_sigma(6), 0.3, 30);
  const auto x = UnitVector3(0.0, 0.6, 0.8);
  CHECK(one.evaluate(x) == doctest::Approx(two.evaluate(x)).epsilon(1e-15));
}

TEST_CASE("estimate peaks at the training point, not its antipode") {
  const UnitVector3 p(1, 0, 0);
  const auto est = fit({p}, g_sigma(6), 0.1, 50);
  CHECK(est.evaluate(p) > est.evaluate(UnitVector3(-1, 0, 0)));
}

TEST_CASE("evaluate matches a brute-force double sum") {
  const auto pts = random_points(5, 44);
  const auto est = fit(pts, g_sigma(6), 0.4, 8);
  const auto kernel = build_sphere_kernel(g_sigma(6), 0.4, 8);
  SplitMix64 rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = testutil::random_unit(rng);
    double expected = 0.0;
    for (const auto& p : pts) {
      const double t = std::clamp(dot(p, x), -1.0, 1.0);
      for (int nu = 0; nu <= 8; ++nu)
        expected += kernel.coeffs[nu] * testutil::legendre_explicit(nu, t);
    }
    expected /= static_cast<double>(pts.size());
    CHECK(std::abs(est.evaluate(x) - expected) <= 1e-12);
  }
}

TEST_CASE("unrectified estimator integrates to 1 over the sphere") {
  const auto quad = sphere_quadrature(64, 128);
  const auto pts = random_points(150, 46);
  for (const auto& [symbol, h, trunc] :
       {std::tuple{g_sigma(6), 0.08, 100}, std::tuple{gauss_symbol(), 0.3, 60}}) {
    const auto est = fit(pts, symbol, h, trunc);
    const double integral =
        quad.integrate([&](const UnitVector3& x) { return est.evaluate(x); });
    CHECK(std::abs(integral - 1.0) <= 1e-10);
    // Quadrature mean is the uniform density.
    CHECK(std::abs(integral / (4.0 * kPi) - 1.0 / (4.0 * kPi)) <= 1e-10);
  }
}

TEST_CASE("evaluate rejects domain mismatches") {
  const auto est = fit(random_points(4, 47), g_sigma(6), 0.5, 5);
  CHECK_THROWS_AS(est.evaluate(BallPoint(0.1, 0.1, 0.1)), std::invalid_argument);
  CHECK_THROWS_AS(est.evaluate(EuclidPoint({0.5})), std::invalid_argument);
}

TEST_CASE("ball estimator averages the ball kernel") {
  const std::vector<BallPoint> pts = {BallPoint(0.2, 0.0, -0.1),
                                      BallPoint(-0.4, 0.3, 0.2),
                                      BallPoint(0.0, -0.5, 0.35)};
  const auto est = fit(pts, g_sigma(6), 0.4, 12);
  const auto kernel = build_ball_kernel(g_sigma(6), 0.4, 12);
  const BallPoint x(0.15, 0.22, -0.3);
  double expected = 0.0;
  for (const auto& p : pts) expected += eval_ball_kernel(kernel, p, x);
  expected /= 3.0;
  CHECK(est.evaluate(x) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("euclid estimator averages the closed-form heat kernel") {
  const std::vector<EuclidPoint> pts = {EuclidPoint({0.0, 1.0}),
                                        EuclidPoint({2.0, -1.0})};
  const auto est = fit(pts, 0.8);
  const EuclidPoint x({0.5, 0.5});
  const double expected = 0.5 * (eval_euclid_gauss_kernel(0.8, pts[0], x) +
                                 eval_euclid_gauss_kernel(0.8, pts[1], x));
  CHECK(est.evaluate(x) == doctest::Approx(expected).epsilon(1e-15));
  CHECK_THROWS_AS(fit({EuclidPoint({1.0}), EuclidPoint({1.0, 2.0})}, 0.5),
                  std::invalid_argument);
}

TEST_CASE("grid of a single-point N = 0 fit is flat") {
  const auto est = fit({UnitVector3(0, 0, 1)}, g_sigma(6), 0.5, 0);
  const auto field = evaluate_grid(est, 6, 8, /*rectified=*/false);
  REQUIRE(field.density.size() == 48);
  for (std::size_t c = 0; c < field.density.size(); ++c) {
    CHECK(field.density[c] == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-15));
    CHECK(field.log_density[c] ==
          doctest::Approx(-std::log(4.0 * kPi)).epsilon(1e-14));
  }
  CHECK(field.lat.front() == doctest::Approx(-75.0));
  CHECK(field.lat.back() == doctest::Approx(75.0));
  CHECK(field.lon.front() == doctest::Approx(-157.5));
}

TEST_CASE("rectified grid never dips below the floor") {
  const auto est = fit(random_points(20, 48), g_sigma(6), 0.05, 90);
  const auto field = evaluate_grid(est, 18, 36, /*rectified=*/true);
  double raw_min = 1e300;
  const auto raw = evaluate_grid(est, 18, 36, /*rectified=*/false);
  for (std::size_t c = 0; c < field.density.size(); ++c) {
    CHECK(field.density[c] >= 1e-3);
    raw_min = std::min(raw_min, raw.density[c]);
    if (raw.density[c] >= 1e-3) CHECK(raw.density[c] == field.density[c]);
  }
  CHECK(raw_min < 1e-3);  // the fixture does produce sub-floor values
}

TEST_CASE("grid results do not depend on the thread count") {
  const auto est = fit(random_points(40, 49), g_sigma(6), 0.15, 40);
  const auto f1 = evaluate_grid(est, 12, 24, true, 1e-3, 1);
  const auto f4 = evaluate_grid(est, 12, 24, true, 1e-3, 4);
  const auto f8 = evaluate_grid(est, 12, 24, true, 1e-3, 8);
  CHECK(f1.density == f4.density);
  CHECK(f1.density == f8.density);
  CHECK(f1.log_density == f8.log_density);
}

TEST_CASE("grid is equivariant under whole-cell longitude rotation") {
  std::vector<GeoCoord> geos = {{10.0, 5.0}, {-25.0, 60.0}, {40.0, -120.0},
                                {5.0, 175.0}, {-60.0, -11.0}};
  std::vector<UnitVector3> base, rotated;
  const double shift = 10.0;  // exactly one cell at n_lon = 36
  for (const auto& g : geos) {
    base.push_back(geo_to_unit(g));
    double lon = g.lon + shift;
    if (lon > 180.0) lon -= 360.0;
    rotated.push_back(geo_to_unit(GeoCoord(g.lat, lon)));
  }
  const auto est_base = fit(base, g_sigma(6), 0.2, 40);
  const auto est_rot = fit(rotated, g_sigma(6), 0.2, 40);
  const auto f_base = evaluate_grid(est_base, 18, 36, false);
  const auto f_rot = evaluate_grid(est_rot, 18, 36, false);
  for (int i = 0; i < 18; ++i)
    for (int j = 0; j < 36; ++j)
      CHECK(f_base.at(i, j) == doctest::Approx(f_rot.at(i, (j + 1) % 36)).epsilon(1e-9));
}

TEST_CASE("density field CSV layout") {
  const auto est = fit({UnitVector3(1, 0, 0)}, g_sigma(6), 0.5, 0);
  const auto field = evaluate_grid(est, 2, 3);
  std::ostringstream out;
  write_density_field_csv(field, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "lat,lon,density,log_density");
  std::size_t rows = 0;
  double first_lat = 0.0;
  while (std::getline(in, line)) {
    if (rows == 0) first_lat = std::stod(line.substr(0, line.find(',')));
    ++rows;
  }
  CHECK(rows == 6);
  CHECK(first_lat == doctest::Approx(-45.0));  // southmost row first
}
