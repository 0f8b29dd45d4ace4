#include "hypercc/format.hpp"

#include <fmt/format.h>

namespace hypercc {

std::string format_real(double x) {
  if (x == 0.0) return "0";  // folds -0
  return fmt::format("{}", x);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace hypercc
