#pragma once

#include <array>
#include <string>

#include "sectorpack/numeric.hpp"

namespace sectorpack {

/// Integer-valued quadratic in the integral basis
///   P(x,y) = a*x(x-1)/2 + b*xy + c*y(y-1)/2 + d*x + e*y + f
/// with integer coefficients.  Every such polynomial takes integer values
/// on integer lattice points; no sign constraints are imposed here.
struct IVQuadratic {
    Int a{0}, b{0}, c{0}, d{0}, e{0}, f{0};

    friend bool operator==(const IVQuadratic& p, const IVQuadratic& q) {
        return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d && p.e == q.e && p.f == q.f;
    }
    friend bool operator<(const IVQuadratic& p, const IVQuadratic& q) {
        auto tp = std::array<const Int*, 6>{&p.a, &p.b, &p.c, &p.d, &p.e, &p.f};
        auto tq = std::array<const Int*, 6>{&q.a, &q.b, &q.c, &q.d, &q.e, &q.f};
        for (int i = 0; i < 6; ++i) {
            int c = cmp(*tp[i], *tq[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
    std::string str() const; // "a b c d e f"
};

/// D' = d - a/2, E' = e - c/2 (the closed-form linear coefficients) and
/// the discriminant b^2 - ac.
struct DerivedCoefficients {
    Rational dp;
    Rational ep;
    Int delta;
};

/// Restriction of P to the lattice line with primitive direction (r,s)
/// and index i (the line r*y = s*x + i).  For r != 0 the restriction is a
/// polynomial in x; for r == 0 the roles of x and y are transposed and it
/// is a polynomial in y.
struct LineRestriction {
    Int r, s, i;
    Rational q2, q1, q0;
    bool in_y = false;

    Rational eval(const Rational& t) const { return (q2 * t + q1) * t + q0; }
};

struct SymmetryData {
    Int r, s;
    Rational denom;          // a*r^2 + 2*b*r*s + c*s^2
    RatPoint center;         // requires delta != 0
    bool slope_vertical;     // b*r + c*s == 0
    Rational slope;          // -(a*r + b*s)/(b*r + c*s) when not vertical
};

Int eval(const IVQuadratic& p, const LatticePoint& pt);
/// Same formula over the rationals (centers and symmetry points are rational).
Rational eval_rational(const IVQuadratic& p, const RatPoint& pt);

Int discriminant(const IVQuadratic& p);
DerivedCoefficients derived(const IVQuadratic& p);

/// Value of the homogeneous quadratic part on a nonzero integer direction.
Rational homogeneous_value(const IVQuadratic& p, const Int& u, const Int& v);

/// Center of the level curves; requires a nonzero discriminant.
RatPoint center(const IVQuadratic& p);

struct CenteredForm {
    RatPoint center;
    Rational constant;           // P evaluated at the center
    Rational shorthand_constant; // (D'/2)*x0 + (E'/2)*y0 + f
    bool identity_verified;      // re-expansion equals P coefficient-by-coefficient
    bool shorthand_matches;      // shorthand_constant == constant
};

/// P written as its homogeneous part centered at (x0, y0) plus a constant.
/// The constant is fixed by re-expansion; the compact shorthand form of the
/// same constant is computed independently and compared.
CenteredForm centered_form(const IVQuadratic& p);

/// Closed-form coefficients (ax^2 + bxy + cy^2 + dx + ey + f) of P.
std::array<Rational, 6> closed_form(const IVQuadratic& p);

/// Builds the sextuple from closed-form rational coefficients; throws
/// not_integer_valued_error naming the violated integrality condition.
IVQuadratic from_closed_form(const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d, const Rational& e, const Rational& f);

LineRestriction restrict_to_line(const IVQuadratic& p, const Int& r, const Int& s, const Int& i);

/// Axis point (x_i, y_i) of the restriction along direction (r,s) at line
/// index i; P(x_i + r, y_i + s) == P(x_i - r, y_i - s) holds exactly.
RatPoint symmetry_point(const IVQuadratic& p, const Int& r, const Int& s, const Int& i);

SymmetryData symmetry_data(const IVQuadratic& p, const Int& r, const Int& s);

} // namespace sectorpack
