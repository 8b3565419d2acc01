#include "skde/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace skde {

namespace {

constexpr double kPi = std::numbers::pi;

//! Kahan accumulator; keeps series sums accurate at large truncation orders.
struct Kahan {
  double sum = 0.0;
  double comp = 0.0;

  void add(double value) {
    const double term = value - comp;
    const double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
};

void check_build(double h, int trunc, const char* what) {
  if (!(h > 0.0)) throw std::invalid_argument(std::string(what) + ": h must be > 0");
  if (trunc < 0)
    throw std::invalid_argument(std::string(what) + ": truncation order must be >= 0");
}

}  // namespace

TruncatedKernel build_sphere_kernel(const Symbol& symbol, double h, int trunc) {
  check_build(h, trunc, "build_sphere_kernel");
  TruncatedKernel kernel{Domain::sphere, symbol, h, trunc, {}};
  kernel.coeffs.resize(static_cast<std::size_t>(trunc) + 1);
  for (int nu = 0; nu <= trunc; ++nu) {
    const double lambda = h * std::sqrt(static_cast<double>(nu) * (nu + 1.0));
    kernel.coeffs[nu] = (1.0 + 2.0 * nu) / (4.0 * kPi) * symbol.eval(lambda);
  }
  return kernel;
}

double eval_sphere_kernel(const TruncatedKernel& kernel, double t) {
  if (kernel.domain != Domain::sphere)
    throw std::invalid_argument("eval_sphere_kernel: kernel domain is not sphere");
  if (!(std::abs(t) <= 1.0))
    throw std::invalid_argument("eval_sphere_kernel: |t| must be <= 1, got " +
                                std::to_string(t));

  const auto& c = kernel.coeffs;
  Kahan acc;
  acc.add(c[0]);  // P_0 = 1
  if (kernel.trunc == 0) return acc.sum;

  double p_prev = 1.0;
  double p = t;  // P_1
  acc.add(c[1] * p);
  for (int nu = 1; nu < kernel.trunc; ++nu) {
    const double p_next = ((2.0 * nu + 1.0) * t * p - nu * p_prev) / (nu + 1.0);
    p_prev = p;
    p = p_next;
    acc.add(c[nu + 1] * p);
  }
  return acc.sum;
}

TruncatedKernel build_ball_kernel(const Symbol& symbol, double h, int trunc) {
  check_build(h, trunc, "build_ball_kernel");
  TruncatedKernel kernel{Domain::ball, symbol, h, trunc, {}};
  kernel.coeffs.resize(static_cast<std::size_t>(trunc) + 1);
  for (int nu = 0; nu <= trunc; ++nu) {
    const double lambda = h * std::sqrt(static_cast<double>(nu) * (nu + 2.0));
    kernel.coeffs[nu] = (1.0 + nu) / (2.0 * kPi * kPi) * symbol.eval(lambda);
  }
  return kernel;
}

double eval_ball_kernel(const TruncatedKernel& kernel, const BallPoint& x,
                        const BallPoint& y) {
  if (kernel.domain != Domain::ball)
    throw std::invalid_argument("eval_ball_kernel: kernel domain is not ball");

  const double cross = std::sqrt(1.0 - x.norm_sq()) * std::sqrt(1.0 - y.norm_sq());
  const double u_plus = std::clamp(dot(x, y) + cross, -1.0, 1.0);
  const double u_minus = std::clamp(dot(x, y) - cross, -1.0, 1.0);

  const auto& c = kernel.coeffs;
  Kahan acc;
  acc.add(c[0] * 2.0);  // C_0(u+) + C_0(u-) = 2
  if (kernel.trunc == 0) return acc.sum;

  double gp_prev = 1.0, gm_prev = 1.0;
  double gp = 2.0 * u_plus, gm = 2.0 * u_minus;  // C_1 = 2u
  acc.add(c[1] * (gp + gm));
  for (int nu = 2; nu <= kernel.trunc; ++nu) {
    const double gp_next = 2.0 * u_plus * gp - gp_prev;
    const double gm_next = 2.0 * u_minus * gm - gm_prev;
    gp_prev = gp;
    gm_prev = gm;
    gp = gp_next;
    gm = gm_next;
    acc.add(c[nu] * (gp + gm));
  }
  return acc.sum;
}

double eval_euclid_gauss_kernel(double h, const EuclidPoint& x,
                                const EuclidPoint& y) {
  if (!(h > 0.0))
    throw std::invalid_argument("eval_euclid_gauss_kernel: h must be > 0");
  if (x.dim() != y.dim())
    throw std::invalid_argument("eval_euclid_gauss_kernel: dimension mismatch: " +
                                std::to_string(x.dim()) + " vs " +
                                std::to_string(y.dim()));
  double dist_sq = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double diff = x.coords[i] - y.coords[i];
    dist_sq += diff * diff;
  }
  const double d = static_cast<double>(x.dim());
  return std::pow(4.0 * kPi * h * h, -0.5 * d) * std::exp(-dist_sq / (4.0 * h * h));
}

TruncatedKernel build_euclid_gauss_kernel(double h) {
  if (!(h > 0.0))
    throw std::invalid_argument("build_euclid_gauss_kernel: h must be > 0");
  return TruncatedKernel{Domain::euclid, gauss_symbol(), h, 0, {}};
}

double truncation_error_bound(double h, double r, int trunc) {
  if (!(h > 0.0)) throw std::invalid_argument("truncation_error_bound: h must be > 0");
  if (!(r > 2.0))
    throw std::invalid_argument(
        "truncation_error_bound: requires decay order r > 2 (the tail integral "
        "x^{-r+1} only converges for r > 2)");
  if (trunc < 24)
    throw std::invalid_argument(
        "truncation_error_bound: requires N >= 24 (the coefficient bound "
        "(1+2nu)/(4pi) <= 0.51 nu/pi only holds from nu = 25 on)");
  return 0.51 * std::pow(h, -r) * std::pow(static_cast<double>(trunc), -(r - 2.0)) /
         (kPi * (r - 2.0));
}

double truncation_error_bound_n(long long n, double s, int trunc) {
  if (n < 1) throw std::invalid_argument("truncation_error_bound_n: n must be >= 1");
  if (!(s > 0.0 && s <= 1.0))
    throw std::invalid_argument(
        "truncation_error_bound_n: s must lie in (0, 1], the range where the "
        "decay order 6 applies");
  if (trunc < 24)
    throw std::invalid_argument("truncation_error_bound_n: requires N >= 24");
  return 0.51 * std::pow(static_cast<double>(n), 3.0 / (s + 1.0)) *
         std::pow(static_cast<double>(trunc), -4.0) / (4.0 * kPi);
}

}  // namespace skde
