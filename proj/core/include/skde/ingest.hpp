#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skde/geometry.hpp"

namespace skde {

struct CatalogEvent {
  std::string time;  // UTC timestamp text, e.g. 2021-08-12T18:32:52Z
  GeoCoord geo;
  double mag;
  std::optional<double> depth_km;
};

//! Earthquake catalog. Bad data rows never abort a parse; they are skipped
//! and counted (header problems do abort).
struct Catalog {
  std::vector<CatalogEvent> events;
  std::string source_path;
  std::size_t skipped = 0;
};

//! Parse a USGS-style catalog CSV. The header row must contain columns
//! named time, latitude, longitude and mag (case-insensitive); depth is
//! optional. Rows with empty or non-numeric latitude/longitude/mag, or
//! coordinates out of range, are skipped and counted.
Catalog parse_catalog(const std::string& path);
Catalog parse_catalog_stream(std::istream& in, const std::string& source_path);

//! Keep events with mag >= min_mag and year(time) in [start_year, end_year];
//! the year is the leading 4 digits of the timestamp. Events with malformed
//! timestamps are skipped and counted in the result.
Catalog filter_catalog(const Catalog& catalog, double min_mag, int start_year,
                       int end_year);

//! Unit vectors of the event locations, catalog order preserved.
std::vector<UnitVector3> catalog_points(const Catalog& catalog);

//! Normalized catalog CSV: header time,latitude,longitude,mag, floats at 17
//! significant digits. parse_catalog reads this format back verbatim.
void write_catalog(const Catalog& catalog, std::ostream& out);

}  // namespace skde
