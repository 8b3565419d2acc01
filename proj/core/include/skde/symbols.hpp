#pragma once

#include <functional>
#include <string>

namespace skde {

//! Scalar generating function k: R+ -> R with k(0) = 1, carried together
//! with its decay and smoothness metadata. Kernel builders only ever need
//! pointwise evaluation, so the function is stored as an opaque callable.
struct Symbol {
  std::function<double(double)> eval;
  double decay_order;       // r: |k(lambda)| decays like lambda^{-r}
  double smoothness_order;  // tau: continuous derivatives available
  std::string name;
};

//! Rational symbol g^sigma(lambda) = 1 / (1 + lambda^sigma), sigma >= 2.
//! Decay order sigma, smoothness order sigma - 1.
Symbol g_sigma(int sigma);

//! Heat symbol exp(-lambda^2); decay and smoothness are unbounded.
Symbol gauss_symbol();

//! Decay exponent matched to a smoothness level: 5 + ceil_strict(s),
//! where ceil_strict(s) is the smallest integer strictly greater than s.
int sigma_for_smoothness(double s);

}  // namespace skde
