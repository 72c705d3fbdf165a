#include "critline/format.hpp"

#include <charconv>
#include <cmath>

namespace critline {

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[48];
    std::to_chars_result r{};
    if (x != 0.0 && std::abs(x) < 1e-4) {
        r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 14);
    } else {
        r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 15);
    }
    return std::string(buf, r.ptr);
}

double parse_real(const std::string& text) {
    double out = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        throw DomainError("parse_real: not a real number: '" + text + "'");
    return out;
}

long parse_long(const std::string& text) {
    long out = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        throw DomainError("parse_long: not an integer: '" + text + "'");
    return out;
}

}  // namespace critline
