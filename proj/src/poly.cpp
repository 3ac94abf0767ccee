#include "sectorpack/poly.hpp"

#include <sstream>

namespace sectorpack {

std::string IVQuadratic::str() const {
    std::ostringstream os;
    os << a << ' ' << b << ' ' << c << ' ' << d << ' ' << e << ' ' << f;
    return os.str();
}

Int eval(const IVQuadratic& p, const LatticePoint& pt) {
    // x(x-1) and y(y-1) are even, so the halving is exact in the integers.
    Int tx = pt.x * (pt.x - 1) / 2;
    Int ty = pt.y * (pt.y - 1) / 2;
    return p.a * tx + p.b * pt.x * pt.y + p.c * ty + p.d * pt.x + p.e * pt.y + p.f;
}

Rational eval_rational(const IVQuadratic& p, const RatPoint& pt) {
    Rational half(1, 2);
    Rational tx = pt.x * (pt.x - Rational(1)) * half;
    Rational ty = pt.y * (pt.y - Rational(1)) * half;
    return Rational(p.a) * tx + Rational(p.b) * pt.x * pt.y + Rational(p.c) * ty +
           Rational(p.d) * pt.x + Rational(p.e) * pt.y + Rational(p.f);
}

Int discriminant(const IVQuadratic& p) { return p.b * p.b - p.a * p.c; }

DerivedCoefficients derived(const IVQuadratic& p) {
    Rational half(1, 2);
    return {Rational(p.d) - Rational(p.a) * half, Rational(p.e) - Rational(p.c) * half,
            discriminant(p)};
}

Rational homogeneous_value(const IVQuadratic& p, const Int& u, const Int& v) {
    if (sgn(u) == 0 && sgn(v) == 0)
        throw std::domain_error("homogeneous_value: zero direction");
    return Rational(p.a * u * u + 2 * p.b * u * v + p.c * v * v, Int(2));
}

RatPoint center(const IVQuadratic& p) {
    DerivedCoefficients dc = derived(p);
    if (sgn(dc.delta) == 0) throw zero_discriminant_error();
    Rational delta(dc.delta);
    return {(Rational(p.c) * dc.dp - Rational(p.b) * dc.ep) / delta,
            (Rational(p.a) * dc.ep - Rational(p.b) * dc.dp) / delta};
}

std::array<Rational, 6> closed_form(const IVQuadratic& p) {
    Rational half(1, 2);
    DerivedCoefficients dc = derived(p);
    return {Rational(p.a) * half, Rational(p.b), Rational(p.c) * half,
            dc.dp,               dc.ep,          Rational(p.f)};
}

IVQuadratic from_closed_form(const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d, const Rational& e, const Rational& f) {
    auto require_integer = [](const Rational& v, const char* what) -> Int {
        if (!v.is_integer())
            throw not_integer_valued_error(std::string("not integer-valued: ") + what + " = " +
                                           v.str() + " is not an integer");
        return v.num();
    };
    IVQuadratic p;
    p.a = require_integer(Rational(2) * a, "2a");
    p.b = require_integer(b, "b");
    p.c = require_integer(Rational(2) * c, "2c");
    p.d = require_integer(d + a, "d+a");
    p.e = require_integer(e + c, "e+c");
    p.f = require_integer(f, "f");
    return p;
}

CenteredForm centered_form(const IVQuadratic& p) {
    RatPoint c0 = center(p); // throws on zero discriminant
    CenteredForm out;
    out.center = c0;
    out.constant = eval_rational(p, c0);

    // Re-expansion check: (a/2)(x-x0)^2 + b(x-x0)(y-y0) + (c/2)(y-y0)^2 + k
    // must reproduce the closed form of P coefficient by coefficient.
    Rational half(1, 2);
    Rational ha = Rational(p.a) * half, hb(p.b), hc = Rational(p.c) * half;
    Rational x0 = c0.x, y0 = c0.y;
    Rational lin_x = Rational(-2) * ha * x0 - hb * y0;
    Rational lin_y = Rational(-2) * hc * y0 - hb * x0;
    Rational const_term = ha * x0 * x0 + hb * x0 * y0 + hc * y0 * y0 + out.constant;
    auto cf = closed_form(p);
    out.identity_verified = (lin_x == cf[3]) && (lin_y == cf[4]) && (const_term == cf[5]);

    DerivedCoefficients dc = derived(p);
    out.shorthand_constant = dc.dp * half * x0 + dc.ep * half * y0 + Rational(p.f);
    out.shorthand_matches = (out.shorthand_constant == out.constant);
    return out;
}

LineRestriction restrict_to_line(const IVQuadratic& p, const Int& r, const Int& s, const Int& i) {
    if (sgn(r) == 0 && sgn(s) == 0)
        throw std::domain_error("restrict_to_line: zero direction");
    if (gcd(r, s) != 1)
        throw std::domain_error("restrict_to_line: direction not primitive");
    DerivedCoefficients dc = derived(p);
    LineRestriction out;
    out.r = r;
    out.s = s;
    out.i = i;
    if (sgn(r) != 0) {
        Rational r2(r * r);
        out.q2 = Rational(p.a * r * r + 2 * p.b * r * s + p.c * s * s, 2 * r * r);
        out.q1 = (Rational(p.b * r + p.c * s) * Rational(i) + Rational(r) * (dc.dp * Rational(r) + dc.ep * Rational(s))) / r2;
        out.q0 = eval_rational(p, {Rational(0), Rational(i, r)});
        out.in_y = false;
    } else {
        // Vertical family: lines x = -i*s, restriction is a polynomial in y.
        Int xc = -i * s;
        out.q2 = Rational(p.c, Int(2));
        out.q1 = Rational(p.b * xc) + dc.ep;
        out.q0 = eval_rational(p, {Rational(xc), Rational(0)});
        out.in_y = true;
    }
    return out;
}

RatPoint symmetry_point(const IVQuadratic& p, const Int& r, const Int& s, const Int& i) {
    Int denom = p.a * r * r + 2 * p.b * r * s + p.c * s * s;
    if (sgn(denom) == 0)
        throw degenerate_direction_error("symmetry_point: quadratic form vanishes on (r,s)");
    DerivedCoefficients dc = derived(p);
    Rational dlin = dc.dp * Rational(r) + dc.ep * Rational(s);
    Rational den(denom);
    Rational xi = -(Rational(p.b * r + p.c * s) * Rational(i) + Rational(r) * dlin) / den;
    Rational yi = (Rational(p.a * r + p.b * s) * Rational(i) - Rational(s) * dlin) / den;
    return {xi, yi};
}

SymmetryData symmetry_data(const IVQuadratic& p, const Int& r, const Int& s) {
    Int denom = p.a * r * r + 2 * p.b * r * s + p.c * s * s;
    if (sgn(denom) == 0)
        throw degenerate_direction_error("symmetry_data: quadratic form vanishes on (r,s)");
    SymmetryData out;
    out.r = r;
    out.s = s;
    out.denom = Rational(denom);
    out.center = center(p); // throws on zero discriminant
    Int sl_den = p.b * r + p.c * s;
    out.slope_vertical = (sgn(sl_den) == 0);
    if (!out.slope_vertical) out.slope = Rational(-(p.a * r + p.b * s), sl_den);
    return out;
}

} // namespace sectorpack
