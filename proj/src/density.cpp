#include "sectorpack/density.hpp"

#include <cmath>
#include <thread>

namespace sectorpack {

DensityValue closed_form_density(const Int& A, const Int& B, const Int& C,
                                 const SectorSlope& alpha) {
    if (B * B != A * C) throw nonzero_discriminant_error();
    if (sgn(A) <= 0) throw std::domain_error("closed_form_density: A must be positive");

    DensityValue out;
    if (sgn(B) == 0 && sgn(C) == 0) {
        // constant integrand 1/A
        if (alpha.is_infinite()) {
            out.infinite = true;
            return out;
        }
        out.value = alpha.value() * QuadVal(Rational(Int(1), A));
        return out;
    }
    // With B^2 = AC and A > 0 the form is C*(t + B/C)^2, C > 0; the only
    // possible pole sits at t* = -B/C.
    Rational pole(-B, C);
    bool pole_inside;
    if (alpha.is_infinite()) {
        pole_inside = pole.sign() >= 0;
    } else {
        // pole in [0, alpha]: t* >= 0 and t* <= alpha
        pole_inside = pole.sign() >= 0 &&
                      compare_quadvals(QuadVal(pole), alpha.value()) <= 0;
    }
    if (pole_inside)
        throw divergent_integral_error("A + 2Bt + Ct^2 vanishes inside [0, alpha]");

    QuadVal one_over_b(Rational(Int(1), B));
    if (alpha.is_infinite()) {
        out.value = one_over_b;
        return out;
    }
    QuadVal tail = QuadVal(Rational(1)) / (alpha.value() * QuadVal(Rational(C)) + QuadVal(Rational(B)));
    out.value = one_over_b - tail;
    return out;
}

std::optional<SectorSlope> alpha_from_coefficients(const IVQuadratic& p) {
    if (p.b == 1) {
        if (p.a == p.c) return SectorSlope::infinity();
        return std::nullopt;
    }
    Rational alpha(p.a, Int(1) - p.b);
    if (alpha.sign() <= 0) return std::nullopt;
    return SectorSlope::rational(alpha);
}

DensityReport empirical_density(const IVQuadratic& p, const Sector& sector,
                                const std::vector<Int>& levels, int threads) {
    DensityReport out;
    Int delta = discriminant(p);
    if (sgn(delta) == 0 && sgn(p.a) > 0) {
        try {
            out.closed_form = closed_form_density(p.a, p.b, p.c, sector.alpha);
            out.has_closed_form = true;
        } catch (const divergent_integral_error&) {
            // leading form vanishes inside the sector; no finite density
        }
    }

    out.rows.resize(levels.size());
    auto run = [&](std::size_t idx) {
        const Int& n = levels[idx];
        Region region{p, sector, n};
        Int count(region_points(region).size());
        double nn = n.get_d();
        double tol = 1e-7 * (nn + 1.0);
        double area = region_area(region, tol);
        DensityReport::Row row;
        row.level = n;
        row.count = count;
        row.count_over_n = nn > 0 ? count.get_d() / nn : count.get_d();
        row.area = area;
        row.davenport_gap = nn > 0 ? std::abs(area - count.get_d()) / std::sqrt(nn) : 0.0;
        out.rows[idx] = row;
    };

    if (threads <= 1 || levels.size() <= 1) {
        for (std::size_t i = 0; i < levels.size(); ++i) run(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t stride = std::size_t(threads);
        for (std::size_t t = 0; t < stride; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < levels.size(); i += stride) run(i);
            });
        for (auto& th : pool) th.join();
    }
    return out;
}

namespace {

template <typename F>
double simpson_rec(const F& f, double a, double b, double tol, int depth, double whole, double fa,
                   double fm, double fb) {
    double m = 0.5 * (a + b);
    double flm = f(0.5 * (a + m)), frm = f(0.5 * (m + b));
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, m, tol / 2.0, depth - 1, left, fa, flm, fm) +
           simpson_rec(f, m, b, tol / 2.0, depth - 1, right, fm, frm, fb);
}

} // namespace

double density_quadrature(const Int& A, const Int& B, const Int& C, const SectorSlope& alpha,
                          double tol) {
    double a = A.get_d(), b = B.get_d(), c = C.get_d();
    double hi = alpha.is_infinite() ? std::acos(0.0) : std::atan(alpha.to_double());
    auto f = [&](double th) {
        double ct = std::cos(th), st = std::sin(th);
        double two_p2 = a * ct * ct + 2.0 * b * ct * st + c * st * st;
        return 1.0 / two_p2;
    };
    double fa = f(0.0), fb = f(hi), fm = f(0.5 * hi);
    double whole = hi / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, 0.0, hi, tol, 52, whole, fa, fm, fb);
}

} // namespace sectorpack
