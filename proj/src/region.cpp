#include "sectorpack/region.hpp"

#include <algorithm>
#include <cmath>

#include "sectorpack/roots.hpp"

namespace sectorpack {

namespace {

// ---------------------------------------------------------------------------
// Exact integer solution sets of quadratic inequalities.

struct ZInterval {
    bool has_lo = false, has_hi = false;
    Int lo{0}, hi{0};

    bool empty() const { return has_lo && has_hi && lo > hi; }
    bool bounded() const { return has_lo && has_hi; }
};

using ZSet = std::vector<ZInterval>; // at most two disjoint pieces, ascending

ZSet z_all() { return {ZInterval{}}; }
ZSet z_empty() { return {}; }
ZSet z_up_to(Int hi) {
    ZInterval iv;
    iv.has_hi = true;
    iv.hi = std::move(hi);
    return {iv};
}
ZSet z_from(Int lo) {
    ZInterval iv;
    iv.has_lo = true;
    iv.lo = std::move(lo);
    return {iv};
}
ZSet z_between(Int lo, Int hi) {
    if (lo > hi) return {};
    ZInterval iv;
    iv.has_lo = iv.has_hi = true;
    iv.lo = std::move(lo);
    iv.hi = std::move(hi);
    return {iv};
}

ZSet z_intersect(const ZSet& a, const ZSet& b) {
    ZSet out;
    for (const auto& p : a)
        for (const auto& q : b) {
            ZInterval r;
            if (p.has_lo && q.has_lo) { r.has_lo = true; r.lo = std::max(p.lo, q.lo); }
            else if (p.has_lo) { r.has_lo = true; r.lo = p.lo; }
            else if (q.has_lo) { r.has_lo = true; r.lo = q.lo; }
            if (p.has_hi && q.has_hi) { r.has_hi = true; r.hi = std::min(p.hi, q.hi); }
            else if (p.has_hi) { r.has_hi = true; r.hi = p.hi; }
            else if (q.has_hi) { r.has_hi = true; r.hi = q.hi; }
            if (!r.empty()) out.push_back(std::move(r));
        }
    std::sort(out.begin(), out.end(), [](const ZInterval& x, const ZInterval& y) {
        if (x.has_lo != y.has_lo) return !x.has_lo;
        return x.has_lo && x.lo < y.lo;
    });
    return out;
}

// Exact floor of (p + sign*sqrt(disc)) / q with q > 0, disc >= 0.
Int floor_root(const Int& p, int sign, const Int& disc, const Int& q) {
    Int s = floor_sqrt(disc);
    Int m = sign > 0 ? s : (is_perfect_square(disc) ? Int(-s) : Int(-s - 1));
    Int f = floor_div(p + m, q);
    // k <= (p + sign*sqrt(disc))/q  <=>  sign*sqrt(disc) >= k*q - p
    auto at_most_value = [&](const Int& k) {
        Int t = k * q - p;
        if (sign > 0) return sgn(t) <= 0 || t * t <= disc;
        return sgn(t) <= 0 && t * t >= disc;
    };
    while (at_most_value(f + 1)) f += 1;
    while (!at_most_value(f)) f -= 1;
    return f;
}

Int ceil_root(const Int& p, int sign, const Int& disc, const Int& q) {
    return -floor_root(-p, -sign, disc, q);
}

// {y in Z : qa*y^2 + qb*y + qc <= 0}
ZSet solve_quad_le(const Int& qa, const Int& qb, const Int& qc) {
    if (sgn(qa) == 0) {
        if (sgn(qb) == 0) return sgn(qc) <= 0 ? z_all() : z_empty();
        Rational bound(-qc, qb);
        return sgn(qb) > 0 ? z_up_to(bound.floor()) : z_from(bound.ceil());
    }
    Int disc = qb * qb - 4 * qa * qc;
    if (sgn(qa) > 0) {
        if (sgn(disc) < 0) return z_empty();
        Int lo = ceil_root(-qb, -1, disc, 2 * qa);
        Int hi = floor_root(-qb, +1, disc, 2 * qa);
        return z_between(lo, hi);
    }
    // Concave: solution is the complement of the open interval between the
    // roots of the negated (convex) polynomial; the roots themselves satisfy
    // the inequality.
    if (sgn(disc) <= 0) return z_all();
    Int lead = -2 * qa;
    Int lo_hi = floor_root(qb, -1, disc, lead); // floor of smaller root
    Int hi_lo = ceil_root(qb, +1, disc, lead);  // ceil of larger root
    ZSet out = z_up_to(lo_hi);
    ZSet right = z_from(hi_lo);
    out.push_back(right.front());
    return out;
}

// ---------------------------------------------------------------------------
// Homogeneous-part analysis.  Everything is phrased through
// q(t) = c*t^2 + 2*b*t + a, twice the value of the form along (1, t).

Rational q_of(const IVQuadratic& p, const Rational& t) {
    return (Rational(p.c) * t + Rational(2 * p.b)) * t + Rational(p.a);
}

QuadVal q_of(const IVQuadratic& p, const QuadVal& t) {
    return (QuadVal(Rational(p.c)) * t + QuadVal(Rational(2 * p.b))) * t + QuadVal(Rational(p.a));
}

std::pair<Int, Int> primitive_direction(const Rational& t) {
    return {t.den(), t.num()}; // canonical form is already primitive
}

// Exact test t <= alpha for a rational slope value t >= 0.
bool le_alpha(const Rational& t, const SectorSlope& alpha) {
    if (alpha.is_infinite()) return true;
    return slope_compare({t.den(), t.num()}, alpha) != Ordering::Greater;
}

bool lt_alpha(const Rational& t, const SectorSlope& alpha) {
    if (alpha.is_infinite()) return true;
    return slope_compare({t.den(), t.num()}, alpha) == Ordering::Less;
}

// Searches a rational t in [0, alpha] with q(t) < 0 by scanning grids k/D
// with doubling D over a rational window; acceptance is exact.
std::optional<Rational> grid_search_negative(const IVQuadratic& p, const SectorSlope& alpha,
                                             const Rational& win_lo, const Rational& win_hi) {
    Rational lo = rat_max(Rational(0), win_lo);
    for (Int den = 1; den <= Int(1) << 48; den *= 2) {
        Int k0 = (lo * Rational(den)).ceil();
        Int k1 = (win_hi * Rational(den)).floor();
        for (Int k = k0; k <= k1; ++k) {
            Rational t(k, den);
            if (!le_alpha(t, alpha)) break;
            if (q_of(p, t).sign() < 0) return t;
        }
    }
    return std::nullopt;
}

SectorFormAnalysis analyze_impl(const IVQuadratic& p, const Sector& sector) {
    const SectorSlope& alpha = sector.alpha;
    const Int &a = p.a, &b = p.b, &c = p.c;

    int status = +1;
    std::optional<std::pair<Int, Int>> witness;
    auto note = [&](int s, std::optional<std::pair<Int, Int>> w) {
        if (s < status) status = s;
        if (w && (!witness || s < 0)) witness = std::move(w);
    };

    int s0 = sign_of(a); // direction (1, 0), in every sector
    if (s0 <= 0) note(s0 == 0 ? 0 : -1, {{Int(1), Int(0)}});

    if (alpha.is_infinite()) {
        int s1 = sign_of(c); // direction (0, 1)
        if (s1 <= 0) note(s1 == 0 ? 0 : -1, {{Int(0), Int(1)}});
    } else {
        int s1 = q_of(p, alpha.value()).sign();
        if (s1 <= 0) {
            if (alpha.kind() == SectorSlope::Kind::Rational)
                note(s1 == 0 ? 0 : -1, {primitive_direction(alpha.value().as_rational())});
            else
                // A zero on an irrational boundary touches no lattice ray; a
                // strict negative still has rational directions nearby.
                note(s1 == 0 ? 0 : -1, std::nullopt);
        }
    }

    // Interior dip: only a convex q can fall below its endpoint values,
    // and then the dip bottom -b/c is rational.
    if (sgn(c) > 0) {
        Rational tv(-b, c);
        if (tv.sign() > 0 && lt_alpha(tv, alpha)) {
            int sv = q_of(p, tv).sign();
            if (sv <= 0) note(sv == 0 ? 0 : -1, {primitive_direction(tv)});
        }
    }

    // Strict negative without a rational witness yet (irrational boundary):
    // scan the negative window of q with exact acceptance.
    if (status < 0 && !witness) {
        QuadraticRoots roots = rat_quadratic_roots(Rational(c), Rational(2 * b), Rational(a));
        std::optional<std::pair<Rational, Rational>> window;
        if (roots.roots.size() == 2) {
            if (sgn(c) > 0) {
                window = {{rational_lower_bound(roots.roots[0].value),
                           rational_upper_bound(roots.roots[1].value)}};
            } else {
                Rational base = rational_upper_bound(roots.roots[1].value);
                window = {{rational_lower_bound(roots.roots[1].value), base + Rational(2)}};
            }
        } else if (roots.linear && roots.roots.size() == 1) {
            Rational base = rational_upper_bound(roots.roots[0].value);
            window = {{rational_lower_bound(roots.roots[0].value), base + Rational(2)}};
        }
        if (window) {
            Rational hi = window->second;
            if (!alpha.is_infinite())
                hi = rat_min(hi, rational_upper_bound(alpha.value()) + Rational(1));
            if (auto t = grid_search_negative(p, alpha, window->first, hi))
                witness = {primitive_direction(*t)};
        }
    }

    return {status, witness};
}

// ---------------------------------------------------------------------------
// mu search for the radius certificate.

bool mu_admissible(const IVQuadratic& p, const SectorSlope& alpha, const Rational& mu) {
    // q_mu(t) = (c-2mu) t^2 + 2b t + (a-2mu) must be >= 0 on the sector.
    Rational lead = Rational(p.c) - Rational(2) * mu;
    Rational tail = Rational(p.a) - Rational(2) * mu;
    if (tail.sign() < 0) return false;
    if (alpha.is_infinite()) {
        if (lead.sign() < 0) return false;
        if (lead.sign() == 0) return sign_of(p.b) >= 0;
    } else {
        const QuadVal& av = alpha.value();
        QuadVal end = (QuadVal(lead) * av + QuadVal(Rational(2 * p.b))) * av + QuadVal(tail);
        if (end.sign() < 0) return false;
    }
    if (lead.sign() > 0) {
        Rational tv = -Rational(p.b) / lead;
        bool inside = tv.sign() > 0 && (alpha.is_infinite() || lt_alpha(tv, alpha));
        if (inside) {
            Rational val = (lead * tv + Rational(2 * p.b)) * tv + tail;
            if (val.sign() < 0) return false;
        }
    }
    return true;
}

Rational find_mu(const IVQuadratic& p, const SectorSlope& alpha) {
    Rational cap(p.a, Int(4));
    if (alpha.is_infinite()) cap = rat_min(cap, Rational(p.c, Int(4)));
    Rational mu = cap;
    for (int i = 0; i < 100000; ++i) {
        if (mu_admissible(p, alpha, mu)) return mu;
        mu = mu * Rational(1, 2);
    }
    throw std::logic_error("find_mu: no admissible bound found for a strictly positive form");
}

// Upper bound for sqrt of a nonnegative rational.
Rational sqrt_upper_bound(const Rational& v) {
    if (v.sign() <= 0) return Rational(0);
    Int pq = v.num() * v.den();
    return Rational(floor_sqrt(pq) + 1, v.den());
}

// ---------------------------------------------------------------------------
// Column-bound fallback: exact escape levels for quadratic tails with
// coefficients in a quadratic field.

Rational positive_rational_lb(const QuadVal& v) {
    if (v.is_rational()) return v.rat();
    for (int k = 0;; ++k) {
        Int scale = Int(1) << k;
        Int s = floor_sqrt(v.rad() * scale * scale);
        Rational root = v.coef().sign() >= 0 ? Rational(s, scale) : Rational(s + 1, scale);
        Rational lb = v.rat() + v.coef() * root;
        if (lb.sign() > 0) return lb;
        if (k > 512) throw std::logic_error("positive_rational_lb: value not positive");
    }
}

QuadVal quad_abs(const QuadVal& v) { return v.sign() < 0 ? -v : v; }

// Smallest X with A2*x^2 + A1*x + A0 > n for all real x >= X; throws
// unbounded_region_error when the tail cannot escape the level.
Int tail_escape(const QuadVal& a2, const QuadVal& a1, const QuadVal& a0, const Int& n) {
    int s2 = a2.sign();
    if (s2 > 0) {
        Rational lead_lb = positive_rational_lb(a2);
        Rational bound = (rational_upper_bound(quad_abs(a1)) +
                          rational_upper_bound(quad_abs(a0 - QuadVal(Rational(n))))) /
                         lead_lb;
        Int x = bound.floor() + 2;
        return sgn(x) > 0 ? x : Int(1);
    }
    if (s2 == 0) {
        int s1 = a1.sign();
        if (s1 > 0) {
            Rational lin_lb = positive_rational_lb(a1);
            Rational gap = rational_upper_bound(QuadVal(Rational(n)) - a0);
            if (gap.sign() < 0) gap = Rational(0);
            Int x = (gap / lin_lb).floor() + 2;
            return sgn(x) > 0 ? x : Int(0);
        }
        if (s1 == 0 && (a0 - QuadVal(Rational(n))).sign() > 0) return Int(0);
        throw unbounded_region_error("region extends along a direction where P stops growing");
    }
    throw unbounded_region_error("region tail has negative quadratic growth");
}

struct ClosedFormCoeffs {
    Rational ha, hb, hc; // a/2, b, c/2
    Rational dp, ep, f;
};

ClosedFormCoeffs closed_coeffs(const IVQuadratic& p) {
    DerivedCoefficients dc = derived(p);
    return {Rational(p.a, Int(2)), Rational(p.b), Rational(p.c, Int(2)), dc.dp, dc.ep,
            Rational(p.f)};
}

// P restricted to the boundary ray y = alpha*x, as a polynomial in x with
// coefficients in the slope's field: (q(alpha)/2) x^2 + (dp + ep*alpha) x + f.
void boundary_tail(const IVQuadratic& p, const SectorSlope& alpha, QuadVal& lead, QuadVal& lin,
                   QuadVal& cst) {
    ClosedFormCoeffs cc = closed_coeffs(p);
    const QuadVal& av = alpha.value();
    lead = q_of(p, av) * QuadVal(Rational(1, 2));
    lin = QuadVal(cc.dp) + QuadVal(cc.ep) * av;
    cst = QuadVal(cc.f);
}

Int column_scan_bound(const IVQuadratic& p, const Sector& sector, const Int& n) {
    const SectorSlope& alpha = sector.alpha;
    ClosedFormCoeffs cc = closed_coeffs(p);
    const Int &a = p.a, &b = p.b, &c = p.c;
    Int delta = discriminant(p);

    // Growth along every vanishing sector direction must be positive.
    auto require_growth = [&](const QuadVal& g, const char* where) {
        if (g.sign() <= 0)
            throw unbounded_region_error(std::string("P does not grow along the vanishing ray (") +
                                         where + ")");
    };
    if (sgn(a) == 0) require_growth(QuadVal(cc.dp), "x-axis");
    if (alpha.is_infinite()) {
        if (sgn(c) == 0) require_growth(QuadVal(cc.ep), "y-axis");
    } else {
        if (q_of(p, alpha.value()).sign() == 0) {
            QuadVal g = QuadVal(cc.dp) + QuadVal(cc.ep) * alpha.value();
            require_growth(g, "upper boundary");
        }
    }
    if (sgn(c) > 0 && sgn(delta) == 0) {
        Rational tv(-b, c);
        if (tv.sign() >= 0 && (alpha.is_infinite() || le_alpha(tv, alpha)))
            require_growth(QuadVal((Rational(c) * cc.dp - Rational(b) * cc.ep) / Rational(c)),
                           "interior vanishing line");
    }
    if (sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0) {
        // Degenerate linear polynomial: growth needed across the whole fan;
        // positivity at the boundary directions bounds the linear ell(t).
        if (alpha.is_infinite()) require_growth(QuadVal(cc.ep), "y-axis");
        else require_growth(QuadVal(cc.dp) + QuadVal(cc.ep) * alpha.value(), "upper boundary");
    }

    Int x_bound(0);
    auto cover = [&](const Int& v) { if (v > x_bound) x_bound = v; };

    QuadVal m0_lead{Rational(p.a, Int(2))}, m0_lin{cc.dp}, m0_cst{cc.f};

    if (sgn(c) > 0) {
        if (sgn(delta) <= 0) {
            // Vertex value is a global lower bound for every column.
            Rational lead = Rational(-delta, 2 * c);
            Rational lin = (Rational(c) * cc.dp - Rational(b) * cc.ep) / Rational(c);
            Rational cst = cc.f - cc.ep * cc.ep / (Rational(2) * Rational(c));
            cover(tail_escape(QuadVal(lead), QuadVal(lin), QuadVal(cst), n));
        } else {
            Rational tv(-b, c);
            if (tv.sign() <= 0) {
                // Vertex line below the sector: the column minimum sits at y = 0.
                if (sgn(b) > 0) {
                    Rational cross = -cc.ep / Rational(b);
                    cover(rat_max(cross, Rational(0)).ceil() + 1);
                }
                cover(tail_escape(m0_lead, m0_lin, m0_cst, n));
            } else if (!alpha.is_infinite()) {
                // Vertex line above the sector: the minimum sits on the boundary.
                if (lt_alpha(tv, alpha))
                    throw std::logic_error("column_scan_bound: indefinite form slipped through");
                QuadVal denom = QuadVal(Rational(b)) + QuadVal(Rational(c)) * alpha.value();
                if (denom.sign() < 0) {
                    QuadVal cross = QuadVal(-cc.ep) / denom;
                    Rational cu = rational_upper_bound(cross);
                    cover(rat_max(cu, Rational(0)).ceil() + 1);
                }
                QuadVal lead, lin, cst;
                boundary_tail(p, alpha, lead, lin, cst);
                cover(tail_escape(lead, lin, cst, n));
            } else {
                throw unbounded_region_error("form is indefinite inside the sector");
            }
        }
    } else if (sgn(c) == 0) {
        if (sgn(b) > 0) {
            Rational cross = -cc.ep / Rational(b);
            cover(rat_max(cross, Rational(0)).ceil() + 1);
            cover(tail_escape(m0_lead, m0_lin, m0_cst, n));
        } else if (sgn(b) == 0) {
            int se = cc.ep.sign();
            if (se >= 0) {
                cover(tail_escape(m0_lead, m0_lin, m0_cst, n));
            } else {
                if (alpha.is_infinite())
                    throw unbounded_region_error("P unbounded below along columns");
                QuadVal lead, lin, cst;
                boundary_tail(p, alpha, lead, lin, cst);
                cover(tail_escape(lead, lin, cst, n));
            }
        } else { // b < 0
            if (alpha.is_infinite())
                throw unbounded_region_error("form negative deep inside the quadrant");
            Rational cross = cc.ep / Rational(-b);
            cover(rat_max(cross, Rational(0)).ceil() + 1);
            QuadVal lead, lin, cst;
            boundary_tail(p, alpha, lead, lin, cst);
            cover(tail_escape(lead, lin, cst, n));
        }
    } else { // c < 0: concave columns, minimum at one of the endpoints
        if (alpha.is_infinite())
            throw unbounded_region_error("form negative along the vertical boundary");
        cover(tail_escape(m0_lead, m0_lin, m0_cst, n));
        QuadVal lead, lin, cst;
        boundary_tail(p, alpha, lead, lin, cst);
        cover(tail_escape(lead, lin, cst, n));
    }
    return x_bound;
}

} // namespace

SectorFormAnalysis analyze_homogeneous_on_sector(const IVQuadratic& p, const Sector& sector) {
    return analyze_impl(p, sector);
}

BoundednessCertificate boundedness_certificate(const IVQuadratic& p, const Sector& sector,
                                               const Int& level) {
    SectorFormAnalysis fa = analyze_impl(p, sector);
    Int n = sgn(level) < 0 ? Int(0) : level;
    if (fa.status < 0)
        throw unbounded_region_error("homogeneous part negative on a sector direction");
    if (fa.status > 0) {
        Rational mu = find_mu(p, sector.alpha);
        ClosedFormCoeffs cc = closed_coeffs(p);
        Rational lin_bound = rat_abs(cc.dp) + rat_abs(cc.ep);
        Rational radicand = lin_bound * lin_bound +
                            Rational(4) * mu * (Rational(n) + rat_abs(Rational(p.f)));
        Rational radius = (lin_bound + sqrt_upper_bound(radicand)) / (Rational(2) * mu);
        BoundednessCertificate cert;
        cert.kind = BoundednessCertificate::Kind::RadiusBound;
        cert.radius = radius;
        cert.mu = mu;
        cert.x_max = sgn(level) < 0 ? Int(-1) : radius.floor();
        return cert;
    }
    BoundednessCertificate cert;
    cert.kind = BoundednessCertificate::Kind::ColumnBound;
    cert.mu = Rational(0);
    cert.x_max = sgn(level) < 0 ? Int(-1) : column_scan_bound(p, sector, n);
    return cert;
}

RegionScan scan_region(const Region& region) {
    const IVQuadratic& p = region.poly;
    BoundednessCertificate cert = boundedness_certificate(p, region.sector, region.level);
    RegionScan out;
    if (sgn(region.level) < 0) return out;

    const Int &a = p.a, &b = p.b, &c = p.c, &d = p.d, &e = p.e, &f = p.f;
    bool finite = !region.sector.alpha.is_infinite();
    Int two_n = 2 * region.level;

    for (Int x = 0; x <= cert.x_max; ++x) {
        // 2*P(x, y) = c y^2 + (2bx + 2e - c) y + (a x^2 + (2d - a) x + 2f)
        Int qb = 2 * b * x + 2 * e - c;
        Int qc = a * x * x + (2 * d - a) * x + 2 * f;

        ZSet le_n = solve_quad_le(c, qb, qc - two_n);
        ZSet ge_0 = solve_quad_le(-c, -qb, -qc);
        ZSet sector_range = finite ? z_between(Int(0), floor_slope_times(region.sector.alpha, x))
                                   : z_from(Int(0));

        ZSet qual = z_intersect(z_intersect(le_n, ge_0), sector_range);
        for (const auto& iv : qual) {
            if (!iv.bounded())
                throw unbounded_region_error("column carries infinitely many region points");
            for (Int y = iv.lo; y <= iv.hi; ++y) out.points.push_back({x, y});
        }

        if (!out.negative_point) {
            ZSet neg = z_intersect(solve_quad_le(c, qb, qc + 2), sector_range);
            if (!neg.empty()) {
                const ZInterval& iv = neg.front();
                // clamped to the sector, so a finite representative exists
                Int y = iv.has_lo ? iv.lo : iv.hi;
                out.negative_point = LatticePoint{x, y};
            }
        }
    }
    return out;
}

std::vector<LatticePoint> region_points(const Region& region) {
    return scan_region(region).points;
}

// ---------------------------------------------------------------------------
// Polar-area quadrature.

namespace {

struct RadialInterval {
    double lo, hi;
};

// Real solutions of p2 r^2 + p1 r + k <= 0 intersected with r >= 0,
// written into iv; returns false when empty.  Numerically stable root
// forms; switches to the linear branch when p2 underflows.
bool radial_sublevel(double p2, double p1, double k, RadialInterval& iv) {
    constexpr double kEps = 1e-13;
    double scale = std::abs(p1) + std::abs(k) + 1.0;
    if (std::abs(p2) <= kEps * scale) {
        if (std::abs(p1) <= kEps * scale) {
            if (k <= 0) { iv = {0.0, std::numeric_limits<double>::infinity()}; return true; }
            return false;
        }
        if (p1 > 0) {
            double hi = -k / p1;
            if (hi < 0) return false;
            iv = {0.0, hi};
            return true;
        }
        double lo = std::max(0.0, -k / p1);
        iv = {lo, std::numeric_limits<double>::infinity()};
        return true;
    }
    double disc = p1 * p1 - 4.0 * p2 * k;
    if (p2 > 0) {
        if (disc < 0) return false;
        double sq = std::sqrt(disc);
        double qf = -(p1 + (p1 >= 0 ? sq : -sq)) / 2.0;
        double r1, r2;
        if (p1 >= 0) { r1 = qf / p2; r2 = (qf != 0.0) ? k / qf : 0.0; }
        else { r1 = (qf != 0.0) ? k / qf : 0.0; r2 = qf / p2; }
        if (r1 > r2) std::swap(r1, r2);
        if (r2 < 0) return false;
        iv = {std::max(r1, 0.0), r2};
        return true;
    }
    // p2 < 0: complement of the open interval between the roots
    if (disc < 0) { iv = {0.0, std::numeric_limits<double>::infinity()}; return true; }
    double sq = std::sqrt(disc);
    double r1 = (-p1 - sq) / (2.0 * p2);
    double r2 = (-p1 + sq) / (2.0 * p2);
    if (r1 > r2) std::swap(r1, r2);
    // keep the bounded lower piece [0, r1] when it exists; the upper ray is
    // irrelevant for certified-bounded regions
    if (r1 >= 0) { iv = {0.0, r1}; return true; }
    iv = {std::max(r2, 0.0), std::numeric_limits<double>::infinity()};
    return true;
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol, int depth, double whole,
                        double fa, double fm, double fb) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, tol / 2.0, depth - 1, left, fa, flm, fm) +
           adaptive_simpson(f, m, b, tol / 2.0, depth - 1, right, fm, frm, fb);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, tol, 56, whole, fa, fm, fb);
}

} // namespace

double region_area(const Region& region, double tol) {
    const IVQuadratic& p = region.poly;
    boundedness_certificate(p, region.sector, region.level); // throws when unbounded
    if (sgn(region.level) < 0) return 0.0;

    DerivedCoefficients dc = derived(p);
    double ha = p.a.get_d() / 2.0, hb = p.b.get_d(), hc = p.c.get_d() / 2.0;
    double dp = dc.dp.to_double(), ep = dc.ep.to_double(), f0 = p.f.get_d();
    double n = region.level.get_d();
    double theta_hi = region.sector.alpha.is_infinite()
                          ? std::acos(0.0)
                          : std::atan(region.sector.alpha.to_double());

    auto integrand = [&](double theta) -> double {
        double ct = std::cos(theta), st = std::sin(theta);
        double p2 = ha * ct * ct + hb * ct * st + hc * st * st;
        double p1 = dp * ct + ep * st;
        RadialInterval outer;
        if (!radial_sublevel(p2, p1, f0 - n, outer)) return 0.0;
        if (!std::isfinite(outer.hi)) return 0.0; // excluded by the certificate
        RadialInterval pocket;
        bool has_pocket = radial_sublevel(p2, p1, f0, pocket) && pocket.hi > pocket.lo;
        double lo = outer.lo, hi = outer.hi;
        double acc = 0.0;
        if (has_pocket) {
            double b1 = std::min(hi, std::max(lo, pocket.lo));
            double b2 = std::min(hi, std::max(lo, std::isfinite(pocket.hi) ? pocket.hi : hi));
            acc += 0.5 * (b1 * b1 - lo * lo);
            acc += 0.5 * (hi * hi - b2 * b2);
        } else {
            acc += 0.5 * (hi * hi - lo * lo);
        }
        return std::max(acc, 0.0);
    };
    return integrate(integrand, 0.0, theta_hi, tol);
}

} // namespace sectorpack
