#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "skde/estimator.hpp"

namespace skde {

//! Grayscale byte per grid cell from the field's log-density:
//! round(255 * (logf - min) / (max - min)) over finite values; a constant
//! (or all-non-finite) field maps to mid-gray 128, and non-finite cells to 0.
//! Row 0 is the northernmost row, equirectangular layout.
std::vector<std::uint8_t> grayscale_pixels(const DensityField& field);

//! Binary portable pixmap (P6), n_lon x n_lat, the grayscale value written
//! to all three channels.
void write_p6(const DensityField& field, std::ostream& out);

}  // namespace skde
