#include <doctest.h>

#include <algorithm>

#include "sectorpack/search.hpp"

using namespace sectorpack;

namespace {

const IVQuadratic kCantorF{1, 1, 1, 2, 1, 0};
const IVQuadratic kCantorG{1, 1, 1, 1, 2, 0};

Sector quadrant() { return {SectorSlope::infinity()}; }

std::vector<IVQuadratic> polys_of(const std::vector<SearchHit>& hits) {
    std::vector<IVQuadratic> out;
    for (const auto& h : hits) out.push_back(h.poly);
    return out;
}

} // namespace

TEST_CASE("leading-coefficient grids") {
    auto grid = delta_pruned_leading(3);
    for (const auto& abc : grid) {
        CHECK(abc[0] >= 1);
        CHECK(abc[1] * abc[1] == abc[0] * abc[2]);
    }
    // A=2 admits only even B
    for (const auto& abc : grid)
        if (abc[0] == 2) CHECK(abc[1] % 2 == 0);

    auto inf_grid = sector_pruned_leading(quadrant(), 3);
    REQUIRE(inf_grid.size() == 1); // B=1 forces A = C = 1
    CHECK(inf_grid[0] == std::array<Int, 3>{Int(1), Int(1), Int(1)});

    auto s3_grid = sector_pruned_leading({SectorSlope::rational(Rational(3))}, 8);
    REQUIRE(s3_grid.size() == 1); // A=3,B=0,C=0 (A=6 fails C integrality)
    CHECK(s3_grid[0] == std::array<Int, 3>{Int(3), Int(0), Int(0)});

    Sector rt2{SectorSlope::quad_irrational(Rational(0), Rational(1), Int(2))};
    CHECK(sector_pruned_leading(rt2, 10).empty());
}

TEST_CASE("the quadrant search rediscovers the two diagonal enumerations") {
    auto hits = search_quadratics(quadrant(), 3, Int(500));
    REQUIRE(hits.size() == 2);
    CHECK(hits[0].poly == kCantorG); // sorted by sextuple
    CHECK(hits[1].poly == kCantorF);
    CHECK(hits[0].report.verified());
    CHECK(hits[1].report.verified());
}

TEST_CASE("pruned search equals the unpruned brute force") {
    for (Sector sector : {quadrant(), Sector{SectorSlope::rational(Rational(1))}}) {
        auto pruned = polys_of(search_quadratics(sector, 2, Int(100)));

        std::vector<IVQuadratic> brute;
        for (long a = 1; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                for (long c = -2; c <= 2; ++c)
                    for (long d = -2; d <= 2; ++d)
                        for (long e = -2; e <= 2; ++e)
                            for (long f = -2; f <= 2; ++f) {
                                IVQuadratic p{Int(a), Int(b), Int(c), Int(d), Int(e), Int(f)};
                                if (!necessary_conditions(p, sector).all_pass()) continue;
                                if (!verify_prefix(p, sector, Int(100)).verified()) continue;
                                brute.push_back(p);
                            }
        std::sort(brute.begin(), brute.end());
        CHECK(pruned == brute);
    }
}

TEST_CASE("searches are deterministic across thread counts") {
    Sector s3{SectorSlope::rational(Rational(3))};
    auto serial = search_quadratics(s3, 4, Int(200), 1);
    auto parallel = search_quadratics(s3, 4, Int(200), 4);
    CHECK(polys_of(serial) == polys_of(parallel));
}

TEST_CASE("irrational sectors yield empty searches") {
    Sector rt2{SectorSlope::quad_irrational(Rational(0), Rational(1), Int(2))};
    CHECK(search_quadratics(rt2, 4, Int(100)).empty());
}

TEST_CASE("every survivor is fully verified") {
    Sector s3{SectorSlope::rational(Rational(3))};
    auto hits = search_quadratics(s3, 5, Int(300));
    CHECK(!hits.empty());
    for (const auto& h : hits) {
        CHECK(necessary_conditions(h.poly, s3).all_pass());
        CHECK(h.report.verified());
        CHECK(h.report.limit == 300);
    }
}
