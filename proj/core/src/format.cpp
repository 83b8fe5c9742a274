#include "ocsplit/format.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace ocsplit {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end) {
        throw std::invalid_argument("parse_double: not a number: '" + text + "'");
    }
    return value;
}

}  // namespace ocsplit
