#include "skde/symbols.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace skde {

namespace {

Symbol checked(Symbol s) {
  if (std::abs(s.eval(0.0) - 1.0) > 1e-15)
    throw std::logic_error("Symbol '" + s.name + "': eval(0) must be 1");
  return s;
}

}  // namespace

Symbol g_sigma(int sigma) {
  if (sigma < 2)
    throw std::invalid_argument("g_sigma: sigma must be >= 2, got " +
                                std::to_string(sigma));
  Symbol s;
  s.eval = [sigma](double lambda) {
    return 1.0 / (1.0 + std::pow(lambda, static_cast<double>(sigma)));
  };
  s.decay_order = static_cast<double>(sigma);
  s.smoothness_order = static_cast<double>(sigma - 1);
  s.name = "g" + std::to_string(sigma);
  return checked(std::move(s));
}

Symbol gauss_symbol() {
  Symbol s;
  s.eval = [](double lambda) { return std::exp(-lambda * lambda); };
  s.decay_order = std::numeric_limits<double>::infinity();
  s.smoothness_order = std::numeric_limits<double>::infinity();
  s.name = "gauss";
  return checked(std::move(s));
}

int sigma_for_smoothness(double s) {
  if (!(s > 0.0)) throw std::invalid_argument("sigma_for_smoothness: s must be > 0");
  // Smallest integer strictly greater than s.
  const int ceil_strict = static_cast<int>(std::floor(s)) + 1;
  return 5 + ceil_strict;
}

}  // namespace skde
