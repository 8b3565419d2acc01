#include "skde/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "skde/csv.hpp"

namespace skde {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::optional<double> parse_number(const std::string& field) {
  if (field.empty()) return std::nullopt;
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::size_t require_column(const std::vector<std::string>& header,
                           const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (lower(header[i]) == name) return i;
  throw std::runtime_error("catalog header is missing required column '" + name +
                           "'");
}

std::optional<std::size_t> find_column(const std::vector<std::string>& header,
                                       const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (lower(header[i]) == name) return i;
  return std::nullopt;
}

std::optional<int> parse_year(const std::string& time) {
  if (time.size() < 4) return std::nullopt;
  for (int i = 0; i < 4; ++i)
    if (!std::isdigit(static_cast<unsigned char>(time[i]))) return std::nullopt;
  return (time[0] - '0') * 1000 + (time[1] - '0') * 100 + (time[2] - '0') * 10 +
         (time[3] - '0');
}

}  // namespace

Catalog parse_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  return parse_catalog_stream(in, path);
}

Catalog parse_catalog_stream(std::istream& in, const std::string& source_path) {
  CsvReader reader(in);
  const auto header = reader.next_record();
  if (!header) throw std::runtime_error("catalog is empty (no header row): " +
                                        source_path);

  const std::size_t col_time = require_column(*header, "time");
  const std::size_t col_lat = require_column(*header, "latitude");
  const std::size_t col_lon = require_column(*header, "longitude");
  const std::size_t col_mag = require_column(*header, "mag");
  const auto col_depth = find_column(*header, "depth");

  Catalog catalog;
  catalog.source_path = source_path;

  while (auto record = reader.next_record()) {
    const auto& row = *record;
    if (row.size() == 1 && row[0].empty()) continue;  // trailing blank line
    const std::size_t needed = std::max({col_time, col_lat, col_lon, col_mag});
    if (row.size() <= needed) {
      ++catalog.skipped;
      continue;
    }
    const auto lat = parse_number(row[col_lat]);
    const auto lon = parse_number(row[col_lon]);
    const auto mag = parse_number(row[col_mag]);
    if (!lat || !lon || !mag) {
      ++catalog.skipped;
      continue;
    }
    std::optional<double> depth;
    if (col_depth && *col_depth < row.size()) depth = parse_number(row[*col_depth]);
    try {
      catalog.events.push_back(
          CatalogEvent{row[col_time], GeoCoord(*lat, *lon), *mag, depth});
    } catch (const std::invalid_argument&) {
      ++catalog.skipped;  // out-of-range coordinates
    }
  }
  return catalog;
}

Catalog filter_catalog(const Catalog& catalog, double min_mag, int start_year,
                       int end_year) {
  if (start_year > end_year)
    throw std::invalid_argument("filter_catalog: start_year must be <= end_year");
  Catalog out;
  out.source_path = catalog.source_path;
  for (const auto& event : catalog.events) {
    const auto year = parse_year(event.time);
    if (!year) {
      ++out.skipped;
      continue;
    }
    if (event.mag >= min_mag && *year >= start_year && *year <= end_year)
      out.events.push_back(event);
  }
  return out;
}

std::vector<UnitVector3> catalog_points(const Catalog& catalog) {
  std::vector<UnitVector3> points;
  points.reserve(catalog.events.size());
  for (const auto& event : catalog.events) points.push_back(geo_to_unit(event.geo));
  return points;
}

void write_catalog(const Catalog& catalog, std::ostream& out) {
  out << "time,latitude,longitude,mag\n";
  for (const auto& event : catalog.events)
    out << event.time << ',' << format_double(event.geo.lat) << ','
        << format_double(event.geo.lon) << ',' << format_double(event.mag) << '\n';
}

}  // namespace skde
