#include "skde/raster.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace skde {

std::vector<std::uint8_t> grayscale_pixels(const DensityField& field) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : field.log_density) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const bool degenerate = !(hi > lo);

  std::vector<std::uint8_t> pixels;
  pixels.reserve(field.log_density.size());
  // Flip rows: grid latitudes ascend south to north, raster row 0 is north.
  for (int i = field.n_lat - 1; i >= 0; --i) {
    for (int j = 0; j < field.n_lon; ++j) {
      const double v = field.log_density[static_cast<std::size_t>(i) * field.n_lon + j];
      if (!std::isfinite(v)) {
        pixels.push_back(0);
      } else if (degenerate) {
        pixels.push_back(128);
      } else {
        const double scaled = 255.0 * (v - lo) / (hi - lo);
        pixels.push_back(static_cast<std::uint8_t>(
            std::min(255.0, std::max(0.0, std::round(scaled)))));
      }
    }
  }
  return pixels;
}

void write_p6(const DensityField& field, std::ostream& out) {
  const auto pixels = grayscale_pixels(field);
  out << "P6\n" << field.n_lon << ' ' << field.n_lat << "\n255\n";
  for (std::uint8_t p : pixels) {
    const char c = static_cast<char>(p);
    out.write(&c, 1);
    out.write(&c, 1);
    out.write(&c, 1);
  }
}

}  // namespace skde
