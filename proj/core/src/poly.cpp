#include "skde/poly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace skde {

namespace {

void check_args(double u, int trunc, const char* what) {
  if (trunc < 0)
    throw std::invalid_argument(std::string(what) + ": order must be >= 0");
  if (!(std::abs(u) <= 1.0))
    throw std::invalid_argument(std::string(what) + ": |u| must be <= 1, got " +
                                std::to_string(u));
}

}  // namespace

PolySequence legendre_all(double u, int trunc) {
  check_args(u, trunc, "legendre_all");
  PolySequence p(static_cast<std::size_t>(trunc) + 1);
  p[0] = 1.0;
  if (trunc == 0) return p;
  p[1] = u;
  for (int nu = 1; nu < trunc; ++nu)
    p[nu + 1] = ((2.0 * nu + 1.0) * u * p[nu] - nu * p[nu - 1]) / (nu + 1.0);
  return p;
}

PolySequence gegenbauer1_all(double u, int trunc) {
  check_args(u, trunc, "gegenbauer1_all");
  PolySequence c(static_cast<std::size_t>(trunc) + 1);
  c[0] = 1.0;
  if (trunc == 0) return c;
  c[1] = 2.0 * u;
  for (int nu = 2; nu <= trunc; ++nu) c[nu] = 2.0 * u * c[nu - 1] - c[nu - 2];
  return c;
}

}  // namespace skde
