#include "vndf/csv.hpp"

#include <charconv>
#include <system_error>

namespace vndf {
namespace {

template <class T>
std::string shortest(T v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

}  // namespace

std::string format_number(double v) {
    return shortest(v);
}

std::string format_number(float v) {
    return shortest(v);
}

void write_csv_line(std::ostream& out, std::initializer_list<std::string_view> fields) {
    bool first = true;
    for (std::string_view f : fields) {
        if (!first) out << ',';
        out << f;
        first = false;
    }
    out << '\n';
}

}  // namespace vndf
