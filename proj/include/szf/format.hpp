#pragma once

#include <stdexcept>
#include <string>

#include "szf/int_poly.hpp"
#include "szf/rational_series.hpp"

namespace szf {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "t + 30t^2 - 442t^3"; "0" for the zero polynomial.
std::string to_plain(const IntPoly& p);

/// "(2t^2 + 24t^3)/((1+2t)(1+3t)(1+4t))", with repeated factors grouped as
/// "(1+6t)^2". Re-parses through parse_zeta.
std::string to_plain(const RationalSeries& f);

std::string to_latex(const IntPoly& p);
std::string to_latex(const RationalSeries& f);

/// Parses the whitespace-insensitive grammar POLY [ '/' '(' FACTORS ')' ]
/// where FACTORS is a product of "(1+Kt)" and "(1+Kt)^E" terms (K omitted
/// means 1); the numerator may be parenthesized.
RationalSeries parse_zeta(const std::string& text);

/// Signed integer-coefficient polynomial in t: "3t^2+8t^3", "1 - t", "42".
IntPoly parse_poly(const std::string& text);

}  // namespace szf
