#pragma once

#include <vector>

#include "skde/geometry.hpp"
#include "skde/symbols.hpp"

namespace skde {

enum class Domain { sphere, ball, euclid };

//! Precomputed coefficients of a truncated spectral-series kernel for one
//! (domain, symbol, bandwidth, truncation) choice.
//!
//! sphere: coeffs[nu] = (1+2nu)/(4pi) * k(h sqrt(nu(nu+1)))
//! ball:   coeffs[nu] = (1+nu)/(2pi^2) * k(h sqrt(nu(nu+2)))
//! euclid: closed-form Gaussian, no series (coeffs empty, trunc ignored)
//!
//! The series may take negative values; rectification is the estimator's
//! concern, not the kernel's.
struct TruncatedKernel {
  Domain domain;
  Symbol symbol;
  double h;
  int trunc;
  std::vector<double> coeffs;
};

TruncatedKernel build_sphere_kernel(const Symbol& symbol, double h, int trunc);

//! Series value at t = <xi, eta>, |t| <= 1. Evaluated by fusing the
//! Legendre recurrence with a compensated dot product, O(N) time and O(1)
//! space per call.
double eval_sphere_kernel(const TruncatedKernel& kernel, double t);

TruncatedKernel build_ball_kernel(const Symbol& symbol, double h, int trunc);

//! Series value at (x, y) in B^3. Each term pairs the Gegenbauer values at
//! u+ and u-, where u+- = <x,y> +- sqrt(1-|x|^2) sqrt(1-|y|^2), clamped.
double eval_ball_kernel(const TruncatedKernel& kernel, const BallPoint& x,
                        const BallPoint& y);

//! Heat kernel on R^d at bandwidth h:
//! (4 pi h^2)^{-d/2} exp(-|x-y|^2 / (4 h^2)).
double eval_euclid_gauss_kernel(double h, const EuclidPoint& x,
                                const EuclidPoint& y);

//! Euclidean kernel wrapper so estimators can carry a uniform kernel type.
TruncatedKernel build_euclid_gauss_kernel(double h);

//! Upper bound on the sup-norm error committed by cutting the sphere series
//! at order N: 0.51 h^{-r} N^{-(r-2)} / (pi (r-2)).
//! Valid for N >= 24 and decay order r > 2.
double truncation_error_bound(double h, double r, int trunc);

//! Same bound specialized to r = 6 and h = n^{-1/(2(s+1))}, s in (0,1]:
//! 0.51 n^{3/(s+1)} N^{-4} / (4 pi).
double truncation_error_bound_n(long long n, double s, int trunc);

}  // namespace skde
