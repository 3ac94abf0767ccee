#include "sectorpack/roots.hpp"

namespace sectorpack {

QuadraticRoots rat_quadratic_roots(const Rational& a, const Rational& b, const Rational& c) {
    QuadraticRoots out;
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw std::domain_error("rat_quadratic_roots: all coefficients zero");
    if (a.is_zero()) {
        out.linear = true;
        if (!b.is_zero()) out.roots.push_back({QuadVal(-c / b), true});
        return out; // constant nonzero: no roots
    }
    Rational disc = b * b - Rational(4) * a * c;
    int ds = disc.sign();
    if (ds < 0) return out;
    if (ds == 0) {
        out.roots.push_back({QuadVal(-b / (Rational(2) * a)), true});
        return out;
    }
    // sqrt(p/q) = sqrt(p*q)/q; rational exactly when p*q is a perfect square.
    Int pq = disc.num() * disc.den();
    Rational half = Rational(-b) / (Rational(2) * a);
    if (is_perfect_square(pq)) {
        Rational root = Rational(floor_sqrt(pq), disc.den()) / (Rational(2) * a);
        RealRoot r1{QuadVal(half - rat_abs(root)), true};
        RealRoot r2{QuadVal(half + rat_abs(root)), true};
        out.roots.push_back(r1);
        out.roots.push_back(r2);
        return out;
    }
    Rational spread = Rational(Int(1), disc.den()) / (Rational(2) * a);
    QuadVal lo(half, -rat_abs(spread), pq);
    QuadVal hi(half, rat_abs(spread), pq);
    out.roots.push_back({lo, false});
    out.roots.push_back({hi, false});
    return out;
}

} // namespace sectorpack
