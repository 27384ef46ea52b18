#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wrt {

using Rational = boost::multiprecision::cpp_rational;

// Parses a decimal literal ("2", "0.5", "1.25e-3") into an exact rational.
// Throws std::invalid_argument on malformed input.
Rational parse_decimal_rational(const std::string& text);

}  // namespace wrt
