#include "sectorpack/numeric.hpp"

#include <ostream>
#include <sstream>

namespace sectorpack {

Int floor_div(const Int& a, const Int& b) {
    if (sgn(b) == 0) throw std::domain_error("floor_div: division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floor_sqrt(const Int& v) {
    if (sgn(v) < 0) throw std::domain_error("floor_sqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& v) {
    if (sgn(v) < 0) return false;
    return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Int Rational::ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_.get_num();
    if (v_.get_den() != 1) os << '/' << v_.get_den();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rat_abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// ---------------------------------------------------------------------------
// QuadVal

QuadVal::QuadVal(Rational rational_part, Rational radical_coef, Int radicand)
    : rat_(std::move(rational_part)), coef_(std::move(radical_coef)), rad_(std::move(radicand)) {
    if (sgn(rad_) < 0) throw std::domain_error("QuadVal: negative radicand");
    normalize();
}

void QuadVal::normalize() {
    if (coef_.is_zero() || rad_ == 0) {
        coef_ = Rational(0);
        rad_ = 0;
        return;
    }
    if (rad_ == 1) {
        rat_ += coef_;
        coef_ = Rational(0);
        rad_ = 0;
        return;
    }
    if (is_perfect_square(rad_)) {
        rat_ += coef_ * Rational(floor_sqrt(rad_));
        coef_ = Rational(0);
        rad_ = 0;
    }
}

const Rational& QuadVal::as_rational() const {
    if (!is_rational()) throw std::domain_error("QuadVal: value is irrational");
    return rat_;
}

int sign_with_radical(const Rational& e, const Rational& u, const Int& rad) {
    if (u.is_zero() || sgn(rad) == 0) return e.sign();
    if (e.is_zero()) return u.sign();
    int se = e.sign(), su = u.sign();
    if (se == su) return se;
    // Opposite signs: the value's sign follows whichever square dominates.
    // e + u*sqrt(rad) with e > 0 > u: positive iff e^2 > u^2*rad.
    Rational e2 = e * e;
    Rational u2r = u * u * Rational(rad);
    if (e2 == u2r) return 0;
    return (e2 > u2r) ? se : su;
}

int QuadVal::sign() const { return sign_with_radical(rat_, coef_, rad_); }

int compare_quadvals(const QuadVal& a, const QuadVal& b) {
    if (a.rad() == b.rad() || a.is_rational() || b.is_rational()) {
        Int rad = a.is_rational() ? b.rad() : a.rad();
        return sign_with_radical(a.rat() - b.rat(), a.coef() - b.coef(), rad);
    }
    // Different radicands: sign of A + B with A = (ra - rb) + ca*sqrt(da),
    // B = -cb*sqrt(db).  When the parts have opposite signs, compare the
    // squares; A^2 - B^2 again has a single radical.
    Rational e = a.rat() - b.rat();
    int sa = sign_with_radical(e, a.coef(), a.rad());
    int sb = -b.coef().sign();
    if (sa == 0) return sb;
    if (sb == 0 || sa == sb) return sa;
    Rational diff_rat = e * e + a.coef() * a.coef() * Rational(a.rad()) -
                        b.coef() * b.coef() * Rational(b.rad());
    int s3 = sign_with_radical(diff_rat, Rational(2) * e * a.coef(), a.rad());
    return sa * s3;
}

Int QuadVal::floor() const {
    if (is_rational()) return rat_.floor();
    // Put the value over one denominator: (U + V*sqrt(rad)) / W, W > 0.
    Int w = rat_.den() * coef_.den() / gcd(rat_.den(), coef_.den());
    Int u = rat_.num() * (w / rat_.den());
    Int v = coef_.num() * (w / coef_.den());
    Int m; // floor(V*sqrt(rad))
    if (sgn(v) >= 0) {
        m = floor_sqrt(v * v * rad_);
    } else {
        Int t = v * v * rad_;
        m = -floor_sqrt(t);
        if (!is_perfect_square(t)) m -= 1;
    }
    Int k = floor_div(u + m, w);
    // Fix up against the exact value; at most a couple of steps.
    auto value_at_least = [&](const Int& cand) {
        // cand <= (u + v*sqrt(rad)) / w  <=>  cand*w - u <= v*sqrt(rad)
        return sign_with_radical(Rational(cand * w - u), -Rational(v), rad_) <= 0;
    };
    while (value_at_least(k + 1)) k += 1;
    while (!value_at_least(k)) k -= 1;
    return k;
}

double QuadVal::to_double() const {
    double r = rat_.to_double();
    if (!coef_.is_zero()) {
        mpf_class root(0, 128);
        mpf_sqrt(root.get_mpf_t(), mpf_class(rad_, 128).get_mpf_t());
        r += coef_.to_double() * root.get_d();
    }
    return r;
}

std::string QuadVal::str() const {
    if (is_rational()) return rat_.str();
    std::ostringstream os;
    os << rat_.str() << (coef_.sign() < 0 ? "-" : "+") << rat_abs(coef_).str() << "*sqrt(" << rad_
       << ")";
    return os.str();
}

QuadVal QuadVal::operator-() const {
    QuadVal r = *this;
    r.rat_ = -r.rat_;
    r.coef_ = -r.coef_;
    return r;
}

Int QuadVal::merged_radicand(const QuadVal& a, const QuadVal& b) {
    if (a.is_rational()) return b.rad_;
    if (b.is_rational()) return a.rad_;
    if (a.rad_ != b.rad_)
        throw std::domain_error("QuadVal: mixed radicands in field arithmetic");
    return a.rad_;
}

QuadVal& QuadVal::operator+=(const QuadVal& o) {
    Int rad = merged_radicand(*this, o);
    rat_ += o.rat_;
    coef_ += o.coef_;
    rad_ = rad;
    normalize();
    return *this;
}

QuadVal& QuadVal::operator-=(const QuadVal& o) {
    Int rad = merged_radicand(*this, o);
    rat_ -= o.rat_;
    coef_ -= o.coef_;
    rad_ = rad;
    normalize();
    return *this;
}

QuadVal& QuadVal::operator*=(const QuadVal& o) {
    Int rad = merged_radicand(*this, o);
    Rational nr = rat_ * o.rat_ + coef_ * o.coef_ * Rational(rad);
    Rational nc = rat_ * o.coef_ + coef_ * o.rat_;
    rat_ = nr;
    coef_ = nc;
    rad_ = rad;
    normalize();
    return *this;
}

QuadVal& QuadVal::operator/=(const QuadVal& o) {
    if (o.sign() == 0) throw std::domain_error("QuadVal: division by zero");
    merged_radicand(*this, o); // reject mixed fields up front
    // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d)
    Rational norm = o.rat_ * o.rat_ - o.coef_ * o.coef_ * Rational(o.rad_);
    QuadVal inv(o.rat_ / norm, -o.coef_ / norm, o.rad_);
    return *this *= inv;
}

Rational rational_lower_bound(const QuadVal& v) {
    if (v.is_rational()) return v.rat();
    Int s = floor_sqrt(v.rad());
    // s <= sqrt(rad) <= s+1
    Rational root(v.coef().sign() >= 0 ? s : s + 1);
    return v.rat() + v.coef() * root;
}

Rational rational_upper_bound(const QuadVal& v) {
    if (v.is_rational()) return v.rat();
    Int s = floor_sqrt(v.rad());
    Rational root(v.coef().sign() >= 0 ? s + 1 : s);
    return v.rat() + v.coef() * root;
}

std::string LatticePoint::str() const {
    std::ostringstream os;
    os << '(' << x << ", " << y << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// SectorSlope

SectorSlope SectorSlope::rational(const Rational& value) {
    if (value.sign() <= 0) throw std::domain_error("sector slope must be positive");
    SectorSlope s;
    s.value_ = QuadVal(value);
    s.infinite_ = false;
    return s;
}

SectorSlope SectorSlope::quad_irrational(const Rational& a, const Rational& b, const Int& d) {
    if (sgn(d) <= 0) throw std::domain_error("sector slope radicand must be positive");
    QuadVal v(a, b, d);
    if (v.is_rational()) return rational(v.as_rational());
    if (v.sign() <= 0) throw std::domain_error("sector slope must be positive");
    SectorSlope s;
    s.value_ = v;
    s.infinite_ = false;
    return s;
}

SectorSlope SectorSlope::infinity() {
    SectorSlope s;
    s.infinite_ = true;
    return s;
}

SectorSlope::Kind SectorSlope::kind() const {
    if (infinite_) return Kind::Infinity;
    return value_.is_rational() ? Kind::Rational : Kind::QuadIrrational;
}

const QuadVal& SectorSlope::value() const {
    if (infinite_) throw std::domain_error("infinite slope has no value");
    return value_;
}

double SectorSlope::to_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_.to_double();
}

std::string SectorSlope::str() const { return infinite_ ? "inf" : value_.str(); }

Ordering slope_compare(const LatticePoint& p, const SectorSlope& alpha) {
    if (alpha.is_infinite()) {
        if (sgn(p.x) != 0) return Ordering::Less;
        return ordering_from_sign(sign_of(p.y));
    }
    const QuadVal& a = alpha.value();
    // sign of y - alpha*x
    Rational e = Rational(p.y) - a.rat() * Rational(p.x);
    Rational u = -(a.coef() * Rational(p.x));
    return ordering_from_sign(sign_with_radical(e, u, a.rad()));
}

Int floor_slope_times(const SectorSlope& alpha, const Int& x) {
    const QuadVal& a = alpha.value();
    QuadVal prod(a.rat() * Rational(x), a.coef() * Rational(x), a.rad());
    return prod.floor();
}

} // namespace sectorpack
