#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "sectorpack/json_report.hpp"
#include "sectorpack/svg_plot.hpp"
#include "sectorpack/textio.hpp"

namespace {

using namespace sectorpack;

int env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return static_cast<int>(fallback);
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    return (end && *end == '\0' && parsed > 0) ? static_cast<int>(parsed)
                                               : static_cast<int>(fallback);
}

RatPoint parse_rat_point(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw parse_error("expected 'x,y' rational pair: '" + text + "'");
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::vector<Int> parse_levels(const std::string& text) {
    std::vector<Int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!tok.empty()) out.push_back(Int(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw parse_error("no levels given");
    return out;
}

int cmd_verify(const std::string& poly_text, const std::string& sector_text, long n) {
    IVQuadratic p = parse_poly(poly_text);
    Sector sector{parse_slope(sector_text)};
    ConditionChecklist checks = necessary_conditions(p, sector);
    nlohmann::json out{{"schema", kReportSchema}, {"checklist", to_json(checks)}};

    bool verified = false;
    VerificationReport rep = verify_prefix(p, sector, Int(n));
    out["verification"] = to_json(rep);
    verified = rep.verified();

    std::cout << out.dump(2) << '\n';
    return (checks.all_pass() && verified) ? 0 : 1;
}

int cmd_collide(const std::string& poly_text, const RatPoint& apex, const RatPoint& g1,
                const RatPoint& g2, long budget) {
    IVQuadratic p = parse_poly(poly_text);
    if (sgn(discriminant(p)) == 0) {
        std::cerr << "collide: the non-injectivity construction requires a nonzero "
                     "discriminant (B^2 - AC != 0); this polynomial has discriminant 0\n";
        return 2;
    }
    AffineCone cone(apex, g1, g2);
    CollisionWitness w = find_collision(p, cone, budget);
    // Self-check before printing: equal values, distinct points, membership.
    if (w.p == w.q || eval(p, w.p) != eval(p, w.q) || !cone_contains(cone, w.p) ||
        !cone_contains(cone, w.q))
        throw std::logic_error("collide: witness failed self-verification");
    std::cout << to_json(w).dump(2) << '\n';
    return 0;
}

int cmd_density(const std::string& poly_text, const std::string& sector_text,
                const std::string& levels_text, int threads, bool as_json) {
    IVQuadratic p = parse_poly(poly_text);
    Sector sector{parse_slope(sector_text)};
    DensityReport rep = empirical_density(p, sector, parse_levels(levels_text), threads);
    if (as_json) {
        std::cout << to_json(rep).dump(2) << '\n';
        return 0;
    }
    if (rep.has_closed_form)
        std::cout << "closed-form density: "
                  << (rep.closed_form.infinite ? std::string("inf") : rep.closed_form.value.str())
                  << '\n';
    std::cout << "        n        count      count/n           area   |area-count|/sqrt(n)\n";
    for (const auto& row : rep.rows) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%9s %12s %12.6f %14.3f %12.4f\n",
                      row.level.get_str().c_str(), row.count.get_str().c_str(), row.count_over_n,
                      row.area, row.davenport_gap);
        std::cout << buf;
    }
    return 0;
}

int cmd_search(const std::string& sector_text, long bound, long n, int threads) {
    Sector sector{parse_slope(sector_text)};
    std::vector<SearchHit> hits = search_quadratics(sector, bound, Int(n), threads);
    // one JSON object per survivor per line; summary table on stderr
    for (const auto& h : hits) {
        nlohmann::json line{{"schema", kReportSchema},
                            {"poly", h.poly.str()},
                            {"report", to_json(h.report)}};
        std::cout << line.dump() << '\n';
    }
    std::cerr << "sector " << sector.alpha.str() << "  bound " << bound << "  N " << n << '\n';
    std::cerr << "survivors: " << hits.size() << '\n';
    for (const auto& h : hits) std::cerr << "  " << h.poly.str() << '\n';
    return 0;
}

int cmd_enumerate(const std::string& sector_text, long xmax) {
    Sector sector{parse_slope(sector_text)};
    std::vector<LatticePoint> pts = enumerate_truncated(sector, Int(xmax));
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& pt : pts) arr.push_back(to_json(pt));
    nlohmann::json out{{"schema", kReportSchema}, {"count", pts.size()}, {"points", arr}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_plot(const std::string& poly_text, const std::string& sector_text, long count,
             const std::string& out_path) {
    IVQuadratic p = parse_poly(poly_text);
    Sector sector{parse_slope(sector_text)};
    std::string svg = render_enumeration_svg(p, sector, Int(count));
    if (out_path.empty()) {
        std::cout << svg;
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open output file: " + out_path);
        os << svg;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for quadratic packing polynomials on plane sectors"};
    app.require_subcommand(1);

    int threads = env_long("SECTORPACK_THREADS", 1);
    long budget = env_long("SECTORPACK_BUDGET", 1'000'000);

    std::string poly_text, sector_text = "inf", levels_text = "100,1000,10000";
    std::string apex_text = "0,0", gen1_text = "1,0", gen2_text = "0,1", out_path;
    long n = 1000, bound = 3, xmax = 10, count = 27;
    bool as_json = false;

    auto* verify = app.add_subcommand("verify", "screen and prefix-verify a candidate");
    verify->add_option("--poly", poly_text, "sextuple 'A B C D E F' or closed form")->required();
    verify->add_option("--sector", sector_text, "sector slope: p/q, inf, a+b*sqrt(d)");
    verify->add_option("--n", n, "verification depth N");

    auto* collide = app.add_subcommand("collide", "construct a collision witness on a cone");
    collide->add_option("--poly", poly_text)->required();
    collide->add_option("--apex", apex_text, "cone apex 'x,y' (rationals)");
    collide->add_option("--gen1", gen1_text, "first generator 'x,y'");
    collide->add_option("--gen2", gen2_text, "second generator 'x,y'");
    collide->add_option("--budget", budget, "max lattice points examined");

    auto* density = app.add_subcommand("density", "lattice counts vs area for sublevel regions");
    density->add_option("--poly", poly_text)->required();
    density->add_option("--sector", sector_text);
    density->add_option("--levels", levels_text, "comma-separated levels");
    density->add_option("--threads", threads, "parallel level evaluation");
    density->add_flag("--json", as_json, "emit JSON instead of the table");

    auto* search = app.add_subcommand("search", "scan coefficient space for packing candidates");
    search->add_option("--sector", sector_text);
    search->add_option("--bound", bound, "coefficient box half-width");
    search->add_option("--n", n, "verification depth per candidate");
    search->add_option("--threads", threads);

    auto* enumerate = app.add_subcommand("enumerate", "lattice points of a truncated sector");
    enumerate->add_option("--sector", sector_text);
    enumerate->add_option("--xmax", xmax)->required();

    auto* plot = app.add_subcommand("plot", "SVG of the enumeration order");
    plot->add_option("--poly", poly_text)->required();
    plot->add_option("--sector", sector_text);
    plot->add_option("--count", count, "largest value on the path");
    plot->add_option("--out", out_path, "output SVG path (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(poly_text, sector_text, n);
        if (collide->parsed())
            return cmd_collide(poly_text, parse_rat_point(apex_text), parse_rat_point(gen1_text),
                               parse_rat_point(gen2_text), budget);
        if (density->parsed()) return cmd_density(poly_text, sector_text, levels_text, threads, as_json);
        if (search->parsed()) return cmd_search(sector_text, bound, n, threads);
        if (enumerate->parsed()) return cmd_enumerate(sector_text, xmax);
        if (plot->parsed()) return cmd_plot(poly_text, sector_text, count, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
