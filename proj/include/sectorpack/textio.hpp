#pragma once

#include <string>

#include "sectorpack/poly.hpp"
#include "sectorpack/sector.hpp"

namespace sectorpack {

/// "p", "-p/q" -> rational.  Throws parse_error.
Rational parse_rational(const std::string& text);

/// Slope grammar: "p/q" | "inf" | "a+b*sqrt(d)" (rational a, b).
SectorSlope parse_slope(const std::string& text);

/// Polynomial grammar: sextuple "A B C D E F", or a closed form such as
/// "x^2+y^2", "1/2*x^2+x*y+1/2*y^2+3/2*x+1/2*y" with rational coefficients.
/// Closed forms must be integer-valued (not_integer_valued_error otherwise).
IVQuadratic parse_poly(const std::string& text);

} // namespace sectorpack
