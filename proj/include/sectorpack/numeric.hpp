#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "sectorpack/errors.hpp"

namespace sectorpack {

/// Arbitrary-precision integer.
using Int = mpz_class;

inline int sign_of(const Int& v) { return sgn(v); }
Int floor_div(const Int& a, const Int& b);
/// Largest k with k*k <= v.  Requires v >= 0.
Int floor_sqrt(const Int& v);
bool is_perfect_square(const Int& v);

enum class Ordering { Less, Equal, Greater };

inline Ordering ordering_from_sign(int s) {
    return s < 0 ? Ordering::Less : s > 0 ? Ordering::Greater : Ordering::Equal;
}

/// Exact rational number, always stored in lowest terms with positive
/// denominator.  Equality is structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : v_(n) {} // NOLINT(google-explicit-constructor)
    template <class U> // absorbs GMP integer expression templates
    Rational(const __gmp_expr<mpz_t, U>& e) : v_(mpz_class(e)) {} // NOLINT
    Rational(const Int& num, const Int& den);
    Rational(long num, long den);

    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Int floor() const;
    Int ceil() const;
    double to_double() const { return v_.get_d(); }
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return ::cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return ::cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_; // canonical at all times
};

Rational rat_abs(const Rational& r);
Rational rat_min(const Rational& a, const Rational& b);
Rational rat_max(const Rational& a, const Rational& b);

/// Element of a real quadratic field: rat + coef * sqrt(rad).
///
/// Normal form: rad >= 0; coef == 0 implies rad == 0; rad is never a
/// perfect square (square radicands fold into the rational part), so the
/// value is rational exactly when coef == 0.  Sign, comparison, and floor
/// are decided with integer arithmetic only.
class QuadVal {
public:
    QuadVal() = default;
    QuadVal(const Rational& r) : rat_(r) {} // NOLINT(google-explicit-constructor)
    QuadVal(long n) : rat_(n) {}            // NOLINT(google-explicit-constructor)
    QuadVal(Rational rational_part, Rational radical_coef, Int radicand);

    const Rational& rat() const { return rat_; }
    const Rational& coef() const { return coef_; }
    const Int& rad() const { return rad_; }

    bool is_rational() const { return coef_.is_zero(); }
    /// Requires is_rational().
    const Rational& as_rational() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    Int floor() const;
    double to_double() const;
    std::string str() const;

    QuadVal operator-() const;
    QuadVal& operator+=(const QuadVal& o);
    QuadVal& operator-=(const QuadVal& o);
    QuadVal& operator*=(const QuadVal& o);
    QuadVal& operator/=(const QuadVal& o);

    friend QuadVal operator+(QuadVal a, const QuadVal& b) { return a += b; }
    friend QuadVal operator-(QuadVal a, const QuadVal& b) { return a -= b; }
    friend QuadVal operator*(QuadVal a, const QuadVal& b) { return a *= b; }
    friend QuadVal operator/(QuadVal a, const QuadVal& b) { return a /= b; }

    friend bool operator==(const QuadVal& a, const QuadVal& b) {
        return a.rat_ == b.rat_ && a.coef_ == b.coef_ && a.rad_ == b.rad_;
    }
    friend bool operator!=(const QuadVal& a, const QuadVal& b) { return !(a == b); }

private:
    void normalize();
    // Merges radicands for a binary op; throws if both irrational parts
    // carry different radicands (values then live in different fields).
    static Int merged_radicand(const QuadVal& a, const QuadVal& b);

    Rational rat_{0};
    Rational coef_{0};
    Int rad_{0};
};

/// Sign of e + u*sqrt(rad), rad >= 0, via integer comparisons.
int sign_with_radical(const Rational& e, const Rational& u, const Int& rad);

/// Exact comparison of two quadratic-field values that may live in
/// different fields (different radicands).
int compare_quadvals(const QuadVal& a, const QuadVal& b);

/// Rational lower/upper bounds (crude, exact) used for stopping certificates.
Rational rational_lower_bound(const QuadVal& v);
Rational rational_upper_bound(const QuadVal& v);

struct LatticePoint {
    Int x{0};
    Int y{0};

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
        int c = cmp(a.x, b.x);
        return c != 0 ? c < 0 : cmp(a.y, b.y) < 0;
    }
    std::string str() const;
};

struct RatPoint {
    Rational x{0};
    Rational y{0};

    friend bool operator==(const RatPoint& a, const RatPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

/// Exact sector slope: positive rational, positive quadratic irrational,
/// or infinity (the first quadrant).
class SectorSlope {
public:
    enum class Kind { Rational, QuadIrrational, Infinity };

    SectorSlope() = default; // defaults to the infinite slope

    static SectorSlope rational(const Rational& value);
    /// a + b*sqrt(d).  Folds to the rational kind when d turns out square.
    static SectorSlope quad_irrational(const Rational& a, const Rational& b, const Int& d);
    static SectorSlope infinity();

    Kind kind() const;
    bool is_infinite() const { return infinite_; }
    /// Requires a finite slope.
    const QuadVal& value() const;
    double to_double() const;
    std::string str() const;

    friend bool operator==(const SectorSlope& a, const SectorSlope& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator!=(const SectorSlope& a, const SectorSlope& b) { return !(a == b); }

private:
    QuadVal value_;
    bool infinite_ = true;
};

/// Orders y against alpha*x, exactly.  For the infinite slope the product
/// is taken as +inf whenever x != 0, so Greater can only arise at x == 0
/// with y > 0 (compared against 0).
Ordering slope_compare(const LatticePoint& p, const SectorSlope& alpha);

/// floor(alpha * x) for a finite slope; exact also for quadratic irrationals.
Int floor_slope_times(const SectorSlope& alpha, const Int& x);

} // namespace sectorpack
