#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace skde {

//! Shortest decimal form that is still read back exactly (17 significant
//! digits); the common formatter for every CSV this project writes.
std::string format_double(double value);

//! RFC-4180 record reader: comma separation, double-quote quoting with ""
//! escapes, quoted fields may contain commas and newlines, CRLF tolerated.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  //! Next record, or nullopt at end of input.
  std::optional<std::vector<std::string>> next_record();

 private:
  std::istream& in_;
};

}  // namespace skde
