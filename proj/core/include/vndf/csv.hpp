#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace vndf {

/// Shortest decimal text that parses back to the same value.
std::string format_number(double v);
std::string format_number(float v);

/// Comma-separated line terminated by a single LF.
void write_csv_line(std::ostream& out, std::initializer_list<std::string_view> fields);

}  // namespace vndf
