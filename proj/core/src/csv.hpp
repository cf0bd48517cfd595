#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace charprime::detail {

// RFC 4180 field quoting.
inline std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) line.push_back(',');
    line += csv_field(fields[i]);
  }
  line += "\r\n";
  return line;
}

}  // namespace charprime::detail
