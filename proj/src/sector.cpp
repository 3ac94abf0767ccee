#include "sectorpack/sector.hpp"

namespace sectorpack {

AffineCone::AffineCone(RatPoint apex, RatPoint gen1, RatPoint gen2)
    : apex_(std::move(apex)), gen1_(std::move(gen1)), gen2_(std::move(gen2)) {
    Rational cross = gen1_.x * gen2_.y - gen1_.y * gen2_.x;
    if (cross.is_zero())
        throw std::domain_error("AffineCone: generators are parallel or zero");
}

bool sector_contains(const Sector& sector, const LatticePoint& p) {
    if (sign_of(p.y) < 0) return false;
    if (sector.alpha.is_infinite()) return sign_of(p.x) >= 0;
    return slope_compare(p, sector.alpha) != Ordering::Greater;
}

bool cone_contains(const AffineCone& cone, const RatPoint& p) {
    // Solve u*gen1 + v*gen2 = p - apex; membership is u >= 0 and v >= 0.
    Rational rx = p.x - cone.apex().x;
    Rational ry = p.y - cone.apex().y;
    Rational det = cone.gen1().x * cone.gen2().y - cone.gen1().y * cone.gen2().x;
    Rational u = (rx * cone.gen2().y - ry * cone.gen2().x) / det;
    Rational v = (cone.gen1().x * ry - cone.gen1().y * rx) / det;
    return u.sign() >= 0 && v.sign() >= 0;
}

std::vector<LatticePoint> enumerate_truncated(const Sector& sector, const Int& x_max) {
    if (sgn(x_max) < 0) throw std::domain_error("enumerate_truncated: negative x_max");
    if (sector.alpha.is_infinite())
        throw std::domain_error("enumerate_truncated: truncation of S(inf) is infinite");
    std::vector<LatticePoint> out;
    for (Int x = 0; x <= x_max; ++x) {
        Int y_top = floor_slope_times(sector.alpha, x);
        for (Int y = 0; y <= y_top; ++y) out.push_back({x, y});
    }
    return out;
}

} // namespace sectorpack
