#pragma once

#include <string>
#include <string_view>

namespace hypercc {

// Shortest decimal string that round-trips to the same double.
std::string format_real(double x);

// Quotes a CSV field when it holds a comma, quote, or line break.
std::string csv_field(std::string_view s);

}  // namespace hypercc
