#pragma once

#include <string>

#include "critline/errors.hpp"

namespace critline {

// Locale-independent rendering of a double: 15 significant digits, '.' as
// the decimal separator, scientific notation when 0 < |x| < 1e-4. The
// mapping is a fixed point under parse_real + format_real, so files written
// by this formatter survive a read/write cycle byte for byte.
std::string format_real(double x);

// Strict reverse of the above (accepts any decimal or scientific literal).
// Throws DomainError when the text is not a bare real number.
double parse_real(const std::string& text);

long parse_long(const std::string& text);

}  // namespace critline
