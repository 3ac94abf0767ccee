#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "sectorpack/region.hpp"

using namespace sectorpack;

namespace {

const IVQuadratic kCantorF{1, 1, 1, 2, 1, 0};
const IVQuadratic kCantorG{1, 1, 1, 1, 2, 0};
const IVQuadratic kSumSquares{2, 0, 2, 1, 1, 0};

Sector quadrant() { return {SectorSlope::infinity()}; }
Sector rational_sector(long p, long q) { return {SectorSlope::rational(Rational(p, q))}; }

// Independent oracle: double loop over the certificate box, membership via
// slope_compare and direct evaluation only.
std::vector<LatticePoint> brute_force_region(const IVQuadratic& p, const Sector& sector,
                                             const Int& n) {
    BoundednessCertificate cert = boundedness_certificate(p, sector, n);
    Int x_hi = cert.x_max;
    Int y_hi;
    if (cert.kind == BoundednessCertificate::Kind::RadiusBound) {
        y_hi = cert.radius.ceil();
    } else {
        REQUIRE_FALSE(sector.alpha.is_infinite()); // corpus keeps oracle boxes finite
        y_hi = floor_slope_times(sector.alpha, x_hi < 0 ? Int(0) : x_hi);
    }
    std::vector<LatticePoint> out;
    for (Int x = 0; x <= x_hi; ++x)
        for (Int y = 0; y <= y_hi; ++y) {
            LatticePoint pt{x, y};
            if (!sector_contains(sector, pt)) continue;
            Int v = eval(p, pt);
            if (sgn(v) >= 0 && v <= n) out.push_back(pt);
        }
    return out;
}

} // namespace

TEST_CASE("boundedness certificates on the worked examples") {
    // Cantor F: the form (x+y)^2/2 vanishes only on x + y = 0, outside the
    // quadrant; strictly positive on the closed sector.
    BoundednessCertificate cf = boundedness_certificate(kCantorF, quadrant(), Int(100));
    CHECK(cf.kind == BoundednessCertificate::Kind::RadiusBound);
    CHECK(cf.mu.sign() > 0);

    // x^2 on the quadrant: constant zero along the vertical boundary ray.
    CHECK_THROWS_AS(boundedness_certificate({2, 0, 0, 1, 0, 0}, quadrant(), Int(5)),
                    unbounded_region_error);

    // (4,-2,1,...): vanishing line y = 2x lies outside S(4/3).
    BoundednessCertificate cb =
        boundedness_certificate({4, -2, 1, 1, 1, 0}, rational_sector(4, 3), Int(50));
    CHECK(cb.kind == BoundednessCertificate::Kind::RadiusBound);

    // x^2 - y^2 on the quadrant: form negative above the diagonal.
    CHECK_THROWS_AS(boundedness_certificate({2, 0, -2, 1, -1, 0}, quadrant(), Int(5)),
                    unbounded_region_error);

    // form (x-y)^2 on S(2): vanishing direction inside the sector, but the
    // polynomial still grows along it -> column-bound certificate.
    BoundednessCertificate col =
        boundedness_certificate({2, -2, 2, 2, 1, 0}, rational_sector(2, 1), Int(50));
    CHECK(col.kind == BoundednessCertificate::Kind::ColumnBound);

    // same form but non-growing along the vanishing ray -> unbounded.
    CHECK_THROWS_AS(boundedness_certificate({2, -2, 2, 1, 1, 0}, rational_sector(2, 1), Int(50)),
                    unbounded_region_error);
}

TEST_CASE("homogeneous-part sector analysis") {
    SectorFormAnalysis a1 = analyze_homogeneous_on_sector(kCantorF, quadrant());
    CHECK(a1.status == 1);
    CHECK_FALSE(a1.violating_direction.has_value());

    SectorFormAnalysis a2 = analyze_homogeneous_on_sector({2, 0, -2, 1, -1, 0}, quadrant());
    CHECK(a2.status == -1);
    REQUIRE(a2.violating_direction.has_value());
    auto [u, v] = *a2.violating_direction;
    CHECK(homogeneous_value({2, 0, -2, 1, -1, 0}, u, v).sign() <= 0);
    CHECK(sector_contains(quadrant(), {u, v}));

    // vanishing only at the irrational boundary: Lemma-1 style witness absent
    IVQuadratic touch{2, -2, 1, 1, 1, 0}; // q(t) = (t - 2)^2 + ... check below
    // q(t) = c t^2 + 2b t + a = t^2 - 4t + 2, roots 2 +- sqrt(2)
    Sector s{SectorSlope::quad_irrational(Rational(2), Rational(-1), Int(2))}; // alpha = 2 - sqrt 2
    SectorFormAnalysis a3 = analyze_homogeneous_on_sector(touch, s);
    CHECK(a3.status == 0);
    CHECK_FALSE(a3.violating_direction.has_value());

    // negative dip inside a wider irrational sector yields a rational witness
    Sector wide{SectorSlope::quad_irrational(Rational(0), Rational(2), Int(2))}; // 2*sqrt(2)
    SectorFormAnalysis a4 = analyze_homogeneous_on_sector(touch, wide);
    CHECK(a4.status == -1);
    REQUIRE(a4.violating_direction.has_value());
    CHECK(homogeneous_value(touch, a4.violating_direction->first,
                            a4.violating_direction->second)
              .sign() <= 0);

    // strict negative only near the irrational boundary: the grid search
    // must still find an in-sector rational ray
    Sector rt2{SectorSlope::quad_irrational(Rational(0), Rational(1), Int(2))};
    for (const IVQuadratic& p :
         {IVQuadratic{2, -1, 0, 0, 0, 0}, IVQuadratic{4, -3, 1, 0, 0, 0}}) {
        SectorFormAnalysis fa = analyze_homogeneous_on_sector(p, rt2);
        CHECK(fa.status == -1);
        REQUIRE(fa.violating_direction.has_value());
        auto [du, dv] = *fa.violating_direction;
        CHECK(homogeneous_value(p, du, dv).sign() <= 0);
        CHECK(sector_contains(rt2, {du, dv}));
    }
}

TEST_CASE("region points on the worked examples") {
    CHECK(region_points({kCantorF, quadrant(), Int(2)}) ==
          std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(region_points({kCantorF, quadrant(), Int(0)}) == std::vector<LatticePoint>{{0, 0}});
    CHECK(region_points({kSumSquares, quadrant(), Int(25)}).size() == 26);
    CHECK(region_points({kCantorF, quadrant(), Int(-3)}).empty());
}

TEST_CASE("region points match the brute-force oracle over the corpus") {
    struct Entry {
        IVQuadratic poly;
        Sector sector;
    };
    std::vector<Entry> corpus{
        {kCantorF, quadrant()},
        {kCantorG, quadrant()},
        {kSumSquares, quadrant()},
        {kCantorF, rational_sector(1, 1)},
        {{3, 0, 0, 1, 1, 0}, rational_sector(3, 1)},
        {{3, 0, 0, -2, 3, 2}, rational_sector(3, 1)},
        {{2, -2, 2, 2, 1, 0}, rational_sector(2, 1)},   // column-bound certificate
        {{4, -2, 1, 1, 1, 0}, rational_sector(4, 3)},
        {{2, 0, 2, 1, 1, 5}, quadrant()},               // empty at low levels
        {{1, 1, 1, 2, 1, 0}, {SectorSlope::quad_irrational(Rational(0), Rational(1), Int(2))}},
    };
    for (const auto& entry : corpus)
        for (long n : {0L, 1L, 7L, 100L, 1000L}) {
            auto got = region_points({entry.poly, entry.sector, Int(n)});
            auto expect = brute_force_region(entry.poly, entry.sector, Int(n));
            CHECK(got == expect);
        }
}

TEST_CASE("radius certificate is sound on the annulus") {
    std::mt19937 rng(77);
    struct Entry {
        IVQuadratic poly;
        Sector sector;
    };
    for (const auto& e : {Entry{kCantorF, quadrant()}, Entry{kSumSquares, quadrant()},
                          Entry{{4, -2, 1, 1, 1, 0}, rational_sector(4, 3)}}) {
        Int n(500);
        BoundednessCertificate cert = boundedness_certificate(e.poly, e.sector, n);
        REQUIRE(cert.kind == BoundednessCertificate::Kind::RadiusBound);
        Int r_hi = cert.radius.ceil();
        long hi = mpz_get_si(r_hi.get_mpz_t());
        std::uniform_int_distribution<long> u(0, 2 * hi);
        int sampled = 0;
        while (sampled < 2000) {
            LatticePoint pt{Int(u(rng)), Int(u(rng))};
            Int norm2 = pt.x * pt.x + pt.y * pt.y;
            if (Rational(norm2) <= cert.radius * cert.radius) continue; // inside the bound
            if (!sector_contains(e.sector, pt)) continue;
            ++sampled;
            CHECK(eval(e.poly, pt) > n);
        }
    }
}

TEST_CASE("scan detects negative values inside the box") {
    IVQuadratic shifted{1, 1, 1, 2, 1, -5}; // Cantor F minus 5
    RegionScan scan = scan_region({shifted, quadrant(), Int(10)});
    REQUIRE(scan.negative_point.has_value());
    CHECK(eval(shifted, *scan.negative_point) < 0);
    CHECK(sector_contains(quadrant(), *scan.negative_point));

    RegionScan clean = scan_region({kCantorF, quadrant(), Int(10)});
    CHECK_FALSE(clean.negative_point.has_value());
}

TEST_CASE("packing polynomial regions carry n+1 points") {
    for (long n = 0; n <= 120; ++n) {
        CHECK(region_points({kCantorF, quadrant(), Int(n)}).size() == std::size_t(n) + 1);
        CHECK(region_points({kCantorG, quadrant(), Int(n)}).size() == std::size_t(n) + 1);
    }
}

TEST_CASE("region area against the quarter-circle closed form") {
    double area = region_area({kSumSquares, quadrant(), Int(100)}, 1e-8);
    CHECK(std::abs(area - 25.0 * std::acos(-1.0)) < 1e-6);
    // empty region
    CHECK(region_area({{2, 0, 2, 1, 1, 5}, quadrant(), Int(3)}, 1e-9) == doctest::Approx(0.0));
}

TEST_CASE("region area of Cantor F approaches n") {
    for (long n : {1000L, 10000L}) {
        double area = region_area({kCantorF, quadrant(), Int(n)}, 1e-6);
        CHECK(std::abs(area / n - 1.0) < 3.0 / std::sqrt(double(n)));
    }
}

TEST_CASE("area ratio converges at the sqrt rate") {
    for (long n : {100L, 400L, 1600L}) {
        double a1 = region_area({kCantorF, quadrant(), Int(n)}, 1e-7);
        double a2 = region_area({kCantorF, quadrant(), Int(4 * n)}, 1e-7);
        CHECK(std::abs(a1 / n - a2 / (4 * n)) <= 3.0 / std::sqrt(double(n)));
    }
}
