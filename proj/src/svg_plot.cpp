#include "sectorpack/svg_plot.hpp"

#include <map>
#include <sstream>

namespace sectorpack {

namespace {
constexpr long kCell = 24;
constexpr long kMargin = 40;
} // namespace

std::string render_enumeration_svg(const IVQuadratic& p, const Sector& sector, const Int& count) {
    if (sgn(count) < 0) throw std::domain_error("render_enumeration_svg: negative count");
    std::vector<LatticePoint> pts = region_points(Region{p, sector, count});

    std::map<Int, LatticePoint> by_value;
    for (const auto& pt : pts) {
        Int v = eval(p, pt);
        if (by_value.count(v))
            throw std::domain_error("values collide in the plotted window: " + v.get_str() +
                                    " at " + by_value[v].str() + " and " + pt.str());
        by_value.emplace(v, pt);
    }
    for (Int v = 0; v <= count; ++v)
        if (!by_value.count(v))
            throw std::domain_error("value " + v.get_str() + " is not attained in the window");

    Int max_x(0), max_y(0);
    for (const auto& pt : pts) {
        if (pt.x > max_x) max_x = pt.x;
        if (pt.y > max_y) max_y = pt.y;
    }
    long cols = mpz_get_si(max_x.get_mpz_t());
    long rows = mpz_get_si(max_y.get_mpz_t());
    long width = 2 * kMargin + kCell * cols;
    long height = 2 * kMargin + kCell * rows;

    auto px = [&](const Int& x) { return kMargin + kCell * mpz_get_si(x.get_mpz_t()); };
    auto py = [&](const Int& y) { return height - kMargin - kCell * mpz_get_si(y.get_mpz_t()); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // grid
    for (long gx = 0; gx <= cols; ++gx)
        svg << "<line x1=\"" << kMargin + kCell * gx << "\" y1=\"" << kMargin << "\" x2=\""
            << kMargin + kCell * gx << "\" y2=\"" << height - kMargin
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (long gy = 0; gy <= rows; ++gy)
        svg << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin + kCell * gy << "\" x2=\""
            << width - kMargin << "\" y2=\"" << kMargin + kCell * gy
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";

    // enumeration path in value order
    svg << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (Int v = 0; v <= count; ++v) {
        const LatticePoint& pt = by_value[v];
        if (!first) svg << ' ';
        svg << px(pt.x) << ',' << py(pt.y);
        first = false;
    }
    svg << "\"/>\n";

    // dots and value labels
    for (const auto& [v, pt] : by_value) {
        svg << "<circle cx=\"" << px(pt.x) << "\" cy=\"" << py(pt.y)
            << "\" r=\"3\" fill=\"black\"/>\n";
        svg << "<text x=\"" << px(pt.x) << "\" y=\"" << py(pt.y) - 7
            << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">"
            << v.get_str() << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace sectorpack
