#pragma once

#include <vector>

#include "sectorpack/numeric.hpp"

namespace sectorpack {

/// A real root of a rational quadratic, flagged rational when the
/// discriminant is a perfect rational square.
struct RealRoot {
    QuadVal value;
    bool rational = false;
};

struct QuadraticRoots {
    // roots in increasing order; empty when none are real
    std::vector<RealRoot> roots;
    bool linear = false; // leading coefficient was zero
};

/// Real roots of a*t^2 + b*t + c with exact rational detection.
/// Rejects the all-zero input.
QuadraticRoots rat_quadratic_roots(const Rational& a, const Rational& b, const Rational& c);

} // namespace sectorpack
