#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "skde/geometry.hpp"
#include "skde/poly.hpp"
#include "skde/rng.hpp"
#include "testutil.hpp"

using namespace skde;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("geo_to_unit axis cases") {
  auto v = geo_to_unit(GeoCoord(0.0, 0.0));
  CHECK(v.x == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(v.y) < 1e-15);
  CHECK(std::abs(v.z) < 1e-15);

  v = geo_to_unit(GeoCoord(90.0, 0.0));
  CHECK(std::abs(v.x) < 1e-12);
  CHECK(std::abs(v.y) < 1e-12);
  CHECK(v.z == doctest::Approx(1.0).epsilon(1e-15));

  v = geo_to_unit(GeoCoord(0.0, 90.0));
  CHECK(std::abs(v.x) < 1e-12);
  CHECK(v.y == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(v.z) < 1e-12);
}

TEST_CASE("GeoCoord rejects out-of-range values and names the field") {
  CHECK_THROWS_WITH_AS(GeoCoord(90.5, 0.0),
                       doctest::Contains("latitude"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(GeoCoord(0.0, -180.5),
                       doctest::Contains("longitude"), std::invalid_argument);
  CHECK_NOTHROW(GeoCoord(90.0, 180.0));
  CHECK_NOTHROW(GeoCoord(-90.0, -180.0));
}

TEST_CASE("UnitVector3 normalizes on construction") {
  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const double scale = 0.1 + 10.0 * rng.next_double();
    const auto raw = testutil::random_unit(rng);
    const UnitVector3 v(scale * raw.x, scale * raw.y, scale * raw.z);
    const double norm = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    CHECK(std::abs(norm - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(UnitVector3(0.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("angular_distance identity, antipodes, orthogonal axes") {
  const UnitVector3 ex(1, 0, 0), ey(0, 1, 0);
  CHECK(angular_distance(ex, ex) == 0.0);
  CHECK(angular_distance(ex, UnitVector3(-1, 0, 0)) == doctest::Approx(kPi));
  CHECK(angular_distance(ex, ey) == doctest::Approx(kPi / 2));
}

TEST_CASE("angular_distance is symmetric and satisfies the triangle inequality") {
  SplitMix64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const auto a = testutil::random_unit(rng);
    const auto b = testutil::random_unit(rng);
    const auto c = testutil::random_unit(rng);
    CHECK(angular_distance(a, b) == angular_distance(b, a));
    CHECK(angular_distance(a, c) <=
          angular_distance(a, b) + angular_distance(b, c) + 1e-12);
  }
}

TEST_CASE("ball_distance") {
  const BallPoint origin(0, 0, 0);
  const BallPoint p(0.3, -0.2, 0.1);
  CHECK(ball_distance(p, p) == 0.0);
  CHECK(ball_distance(origin, origin) == 0.0);

  // acos(-0.81 + sqrt(0.19)*sqrt(0.19)) = acos(-0.62)
  const BallPoint a(0.9, 0, 0), b(-0.9, 0, 0);
  CHECK(ball_distance(a, b) == doctest::Approx(2.2395390299972684).epsilon(1e-14));

  SplitMix64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto du = testutil::random_unit(rng);
    const auto dv = testutil::random_unit(rng);
    const double ru = 0.95 * rng.next_double();
    const double rv = 0.95 * rng.next_double();
    const BallPoint u(ru * du.x, ru * du.y, ru * du.z);
    const BallPoint v(rv * dv.x, rv * dv.y, rv * dv.z);
    CHECK(ball_distance(u, v) == ball_distance(v, u));  // exactly
  }
}

TEST_CASE("BallPoint rejects boundary and exterior points") {
  CHECK_THROWS_AS(BallPoint(1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(BallPoint(0.8, 0.8, 0.8), std::invalid_argument);
  CHECK_NOTHROW(BallPoint(0.0, 0.0, 0.999999));
}

TEST_CASE("EuclidPoint validates entries") {
  CHECK_THROWS_AS(EuclidPoint({}), std::invalid_argument);
  CHECK_THROWS_AS(EuclidPoint({1.0, std::nan("")}), std::invalid_argument);
  CHECK(EuclidPoint({1.0, 2.0, 3.0}).dim() == 3);
}

TEST_CASE("gauss_legendre matches published low-order tables") {
  const auto r2 = gauss_legendre(2);
  CHECK(r2.nodes[1] == doctest::Approx(0.5773502691896258).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

  const auto r3 = gauss_legendre(3);
  CHECK(r3.nodes[2] == doctest::Approx(0.7745966692414834).epsilon(1e-15));
  CHECK(r3.nodes[1] == doctest::Approx(0.0));
  CHECK(r3.weights[0] == doctest::Approx(0.5555555555555557).epsilon(1e-14));
  CHECK(r3.weights[1] == doctest::Approx(0.8888888888888889).epsilon(1e-14));

  const auto r5 = gauss_legendre(5);
  CHECK(r5.nodes[4] == doctest::Approx(0.906179845938664).epsilon(1e-14));
  CHECK(r5.nodes[3] == doctest::Approx(0.5384693101056831).epsilon(1e-14));
  CHECK(r5.weights[2] == doctest::Approx(0.5688888888888889).epsilon(1e-14));

  // Exactness: degree-9 monomial under the 5-point rule.
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) sum += r5.weights[i] * std::pow(r5.nodes[i], 8);
  CHECK(sum == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("sphere quadrature weight normalization and low-order exactness") {
  const auto quad = sphere_quadrature(2, 4);
  double total = 0.0;
  for (double w : quad.weights) total += w;
  CHECK(total == doctest::Approx(4.0 * kPi).epsilon(1e-13));
  CHECK(quad.order == 3);

  // Odd polynomial about the polar axis integrates to zero.
  const double p1 = quad.integrate([](const UnitVector3& v) { return v.z; });
  CHECK(std::abs(p1) < 1e-12);
}

TEST_CASE("sphere quadrature kills P_nu for nu = 1..100 at the test resolution") {
  const auto quad = sphere_quadrature(64, 128);
  SplitMix64 rng(21);
  const auto p = testutil::random_unit(rng);
  for (int nu = 1; nu <= 100; ++nu) {
    const double integral = quad.integrate([&](const UnitVector3& v) {
      const auto seq = legendre_all(std::clamp(dot(v, p), -1.0, 1.0), nu);
      return seq[nu];
    });
    CHECK(std::abs(integral) < 1e-10);
  }
}

TEST_CASE("quadrature cross-check at two resolutions") {
  const auto coarse = sphere_quadrature(64, 128);
  const auto fine = sphere_quadrature(96, 192);
  const auto f = [](const UnitVector3& v) {
    return std::exp(v.x) * (1.0 + 0.5 * v.y * v.z);
  };
  CHECK(coarse.integrate(f) == doctest::Approx(fine.integrate(f)).epsilon(1e-13));
}
