#include "skde/csv.hpp"

#include <cstdio>
#include <istream>

namespace skde {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::optional<std::vector<std::string>> CsvReader::next_record() {
  int c = in_.get();
  if (c == std::istream::traits_type::eof()) return std::nullopt;

  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;

  while (true) {
    if (c == std::istream::traits_type::eof()) {
      fields.push_back(std::move(field));
      return fields;
    }
    const char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        if (in_.peek() == '"') {
          field.push_back('"');
          in_.get();
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"' && field.empty()) {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      fields.push_back(std::move(field));
      return fields;
    } else {
      field.push_back(ch);
    }
    c = in_.get();
  }
}

}  // namespace skde
