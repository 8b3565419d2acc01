#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "skde/geometry.hpp"
#include "skde/poly.hpp"
#include "testutil.hpp"

using namespace skde;

TEST_CASE("legendre_all endpoint values") {
  const auto at_one = legendre_all(1.0, 12);
  for (double v : at_one) CHECK(v == 1.0);

  const auto at_minus_one = legendre_all(-1.0, 5);
  for (int nu = 0; nu <= 5; ++nu)
    CHECK(at_minus_one[nu] == (nu % 2 == 0 ? 1.0 : -1.0));

  const auto at_half = legendre_all(0.5, 2);
  CHECK(at_half[0] == 1.0);
  CHECK(at_half[1] == 0.5);
  CHECK(at_half[2] == doctest::Approx(-0.125).epsilon(1e-15));
}

TEST_CASE("legendre_all matches the explicit P_0..P_10 forms") {
  for (int i = 0; i <= 1000; ++i) {
    const double u = -1.0 + 2.0 * i / 1000.0;
    const auto seq = legendre_all(u, 10);
    for (int nu = 0; nu <= 10; ++nu)
      CHECK(std::abs(seq[nu] - testutil::legendre_explicit(nu, u)) <= 1e-12);
  }
}

TEST_CASE("legendre values stay within [-1, 1] up to order 500") {
  for (int i = 0; i <= 400; ++i) {
    const double u = -1.0 + 2.0 * i / 400.0;
    const auto seq = legendre_all(u, 500);
    for (double v : seq) CHECK(std::abs(v) <= 1.0 + 1e-12);
  }
}

TEST_CASE("legendre orthogonality under 64-node Gauss-Legendre") {
  const auto rule = gauss_legendre(64);
  for (int m = 0; m <= 50; m += 7) {
    for (int n = m; n <= 50; n += 9) {
      double integral = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const auto seq = legendre_all(rule.nodes[i], std::max(m, n));
        integral += rule.weights[i] * seq[m] * seq[n];
      }
      const double expected = m == n ? 2.0 / (2.0 * n + 1.0) : 0.0;
      CHECK(std::abs(integral - expected) <= 1e-10);
    }
  }
}

TEST_CASE("gegenbauer1_all endpoint and zero values") {
  const auto at_one = gegenbauer1_all(1.0, 4);
  for (int nu = 0; nu <= 4; ++nu) CHECK(at_one[nu] == doctest::Approx(nu + 1.0));

  const auto at_zero = gegenbauer1_all(0.0, 4);
  CHECK(at_zero[0] == 1.0);
  CHECK(at_zero[1] == 0.0);
  CHECK(at_zero[2] == -1.0);
  CHECK(at_zero[3] == 0.0);
  CHECK(at_zero[4] == 1.0);
}

TEST_CASE("gegenbauer1_all matches sin((nu+1)theta)/sin(theta)") {
  constexpr double kPi = std::numbers::pi;
  for (int i = 0; i <= 64; ++i) {
    const double theta = 0.01 + i * (kPi - 0.02) / 64.0;
    const auto seq = gegenbauer1_all(std::cos(theta), 200);
    for (int nu = 0; nu <= 200; ++nu) {
      const double expected = std::sin((nu + 1.0) * theta) / std::sin(theta);
      CHECK(std::abs(seq[nu] - expected) <= 1e-10);
    }
  }
}

TEST_CASE("polynomial evaluators reject |u| > 1") {
  CHECK_THROWS_AS(legendre_all(1.0000001, 3), std::invalid_argument);
  CHECK_THROWS_AS(gegenbauer1_all(-1.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(legendre_all(0.5, -1), std::invalid_argument);
}
