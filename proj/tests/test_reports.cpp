#include <doctest.h>

#include "sectorpack/json_report.hpp"
#include "sectorpack/svg_plot.hpp"
#include "sectorpack/textio.hpp"

using namespace sectorpack;

namespace {
const IVQuadratic kCantorF{1, 1, 1, 2, 1, 0};
Sector quadrant() { return {SectorSlope::infinity()}; }
} // namespace

TEST_CASE("witness JSON round-trips") {
    CollisionWitness w{{2, 0}, {0, 2}, Int(4), Int(1), Int(-1), {1, 1}, Int(2)};
    nlohmann::json j = to_json(w);
    CHECK(j.at("schema") == 1);
    CHECK(to_json(collision_from_json(j)) == j);
}

TEST_CASE("verification JSON round-trips for every failure kind") {
    VerificationReport verified;
    verified.limit = Int(100);

    VerificationReport gap;
    gap.status = VerificationReport::Status::Failed;
    gap.kind = VerificationReport::FailureKind::Gap;
    gap.limit = Int(10);
    gap.value = Int(1);

    VerificationReport coll = gap;
    coll.kind = VerificationReport::FailureKind::Collision;
    coll.p = {0, 1};
    coll.q = {1, 0};

    VerificationReport oor = gap;
    oor.kind = VerificationReport::FailureKind::OutOfRange;
    oor.value = Int(-5);
    oor.p = {0, 0};

    VerificationReport unb = gap;
    unb.kind = VerificationReport::FailureKind::Unbounded;

    for (const auto& rep : {verified, gap, coll, oor, unb}) {
        nlohmann::json j = to_json(rep);
        CHECK(to_json(verification_from_json(j)) == j);
    }
}

TEST_CASE("checklist and density JSON round-trip") {
    ConditionChecklist c = necessary_conditions(kCantorF, quadrant());
    nlohmann::json jc = to_json(c);
    CHECK(to_json(checklist_from_json(jc)) == jc);

    DensityReport d = empirical_density(kCantorF, quadrant(), {Int(10), Int(100)});
    nlohmann::json jd = to_json(d);
    CHECK(to_json(density_from_json(jd)) == jd);

    // a quadratic-irrational closed form survives the round trip too
    DensityReport d2;
    d2.has_closed_form = true;
    d2.closed_form.value = QuadVal(Rational(2), Rational(-1), Int(2));
    nlohmann::json jd2 = to_json(d2);
    CHECK(to_json(density_from_json(jd2)) == jd2);
}

TEST_CASE("SVG output is deterministic and shaped like the figure") {
    std::string a = render_enumeration_svg(kCantorF, quadrant(), Int(27));
    std::string b = render_enumeration_svg(kCantorF, quadrant(), Int(27));
    CHECK(a == b);
    CHECK(a.find("<polyline") != std::string::npos);
    CHECK(a.find(">27<") != std::string::npos);

    std::string g = render_enumeration_svg({1, 1, 1, 1, 2, 0}, quadrant(), Int(27));
    CHECK(g != a); // mirrored path

    std::string origin = render_enumeration_svg(kCantorF, quadrant(), Int(0));
    CHECK(origin.find("<circle") != std::string::npos);
    CHECK(origin.find(">0<") != std::string::npos);
    // exactly one dot
    CHECK(origin.find("<circle", origin.find("<circle") + 1) == std::string::npos);

    CHECK_THROWS_AS(render_enumeration_svg({2, 0, 2, 1, 1, 0}, quadrant(), Int(5)),
                    std::domain_error);
}

TEST_CASE("slope parsing") {
    CHECK(parse_slope("inf").is_infinite());
    CHECK(parse_slope("3").value().as_rational() == Rational(3));
    CHECK(parse_slope("1/2").value().as_rational() == Rational(1, 2));
    SectorSlope rt2 = parse_slope("0+1*sqrt(2)");
    CHECK(rt2.kind() == SectorSlope::Kind::QuadIrrational);
    CHECK(rt2.value() == QuadVal(Rational(0), Rational(1), Int(2)));
    CHECK(parse_slope("sqrt(2)") == rt2);
    CHECK(parse_slope("1/2+3/4*sqrt(5)").value() == QuadVal(Rational(1, 2), Rational(3, 4), Int(5)));
    CHECK(parse_slope("2-sqrt(2)").value() == QuadVal(Rational(2), Rational(-1), Int(2)));
    CHECK(parse_slope("sqrt(4)").kind() == SectorSlope::Kind::Rational); // folds to 2
    CHECK_THROWS_AS(parse_slope("0-1*sqrt(2)"), parse_error);
    CHECK_THROWS_AS(parse_slope("-1/2"), parse_error);
    CHECK_THROWS_AS(parse_slope("abc"), parse_error);
    CHECK_THROWS_AS(parse_slope("1/0"), parse_error);
}

TEST_CASE("polynomial parsing") {
    CHECK(parse_poly("1 1 1 2 1 0") == kCantorF);
    CHECK(parse_poly("x^2+y^2") == IVQuadratic{2, 0, 2, 1, 1, 0});
    CHECK(parse_poly("1/2*x^2+x*y+1/2*y^2+3/2*x+1/2*y") == kCantorF);
    CHECK(parse_poly("x^2-y^2") == IVQuadratic{2, 0, -2, 1, -1, 0});
    CHECK(parse_poly("3") == IVQuadratic{0, 0, 0, 0, 0, 3});
    CHECK(parse_poly("2*x*y") == IVQuadratic{0, 2, 0, 0, 0, 0});
    CHECK_THROWS_AS(parse_poly("1/3*x^2"), not_integer_valued_error);
    CHECK_THROWS_AS(parse_poly("x^3"), parse_error);
    CHECK_THROWS_AS(parse_poly(""), parse_error);
}
