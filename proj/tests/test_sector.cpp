#include <doctest.h>

#include "sectorpack/sector.hpp"

using namespace sectorpack;

TEST_CASE("sector membership") {
    Sector half{SectorSlope::rational(Rational(1, 2))};
    CHECK(sector_contains(half, {2, 1}));
    CHECK_FALSE(sector_contains(half, {1, 1}));
    CHECK(sector_contains(half, {0, 0}));
    CHECK_FALSE(sector_contains(half, {-2, 1}));
    CHECK_FALSE(sector_contains(half, {2, -1}));

    Sector rt2{SectorSlope::quad_irrational(Rational(0), Rational(1), Int(2))};
    CHECK(sector_contains(rt2, {1, 1}));
    CHECK_FALSE(sector_contains(rt2, {1, 2}));
    CHECK(sector_contains(rt2, {0, 0}));

    Sector quadrant{SectorSlope::infinity()};
    CHECK(sector_contains(quadrant, {0, 5}));
    CHECK(sector_contains(quadrant, {7, 0}));
    CHECK_FALSE(sector_contains(quadrant, {-1, 3}));
    CHECK_FALSE(sector_contains(quadrant, {3, -1}));
}

TEST_CASE("cone membership") {
    AffineCone first({Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                     {Rational(0), Rational(1)});
    CHECK(cone_contains(first, LatticePoint{3, 4}));
    CHECK_FALSE(cone_contains(first, LatticePoint{-1, 2}));

    AffineCone shifted({Rational(1), Rational(1)}, {Rational(1), Rational(0)},
                       {Rational(1), Rational(1)});
    CHECK(cone_contains(shifted, LatticePoint{1, 1})); // apex of the closed cone

    AffineCone skew({Rational(0), Rational(0)}, {Rational(2), Rational(1)},
                    {Rational(1), Rational(2)});
    CHECK(cone_contains(skew, LatticePoint{1, 1})); // u = v = 1/3
    CHECK_FALSE(cone_contains(skew, LatticePoint{1, 0}));

    CHECK_THROWS_AS(AffineCone({Rational(0), Rational(0)}, {Rational(1), Rational(2)},
                               {Rational(2), Rational(4)}),
                    std::domain_error);
}

TEST_CASE("truncated enumeration") {
    Sector one{SectorSlope::rational(Rational(1))};
    auto pts = enumerate_truncated(one, Int(2));
    std::vector<LatticePoint> expect{{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};
    CHECK(pts == expect);

    Sector rt2{SectorSlope::quad_irrational(Rational(0), Rational(1), Int(2))};
    CHECK(enumerate_truncated(rt2, Int(2)) == expect); // floor(sqrt(2)) = 1, floor(2 sqrt(2)) = 2

    CHECK(enumerate_truncated(one, Int(0)) == std::vector<LatticePoint>{{0, 0}});
    CHECK(enumerate_truncated(rt2, Int(0)) == std::vector<LatticePoint>{{0, 0}});

    CHECK_THROWS_AS(enumerate_truncated(Sector{SectorSlope::infinity()}, Int(2)),
                    std::domain_error);
    CHECK_THROWS_AS(enumerate_truncated(one, Int(-1)), std::domain_error);
}
