#pragma once

#include <vector>

#include "sectorpack/numeric.hpp"
#include "sectorpack/poly.hpp"

namespace sectorpack {

/// The sector S(alpha) = {(x,y) : 0 <= y <= alpha*x}; the first quadrant
/// for the infinite slope.
struct Sector {
    SectorSlope alpha;
};

/// Affine convex cone: apex + {u*gen1 + v*gen2 : u,v >= 0} with rational,
/// non-parallel generators.
class AffineCone {
public:
    AffineCone(RatPoint apex, RatPoint gen1, RatPoint gen2);

    const RatPoint& apex() const { return apex_; }
    const RatPoint& gen1() const { return gen1_; }
    const RatPoint& gen2() const { return gen2_; }

private:
    RatPoint apex_, gen1_, gen2_;
};

bool sector_contains(const Sector& sector, const LatticePoint& p);
bool cone_contains(const AffineCone& cone, const RatPoint& p);
inline bool cone_contains(const AffineCone& cone, const LatticePoint& p) {
    return cone_contains(cone, RatPoint{Rational(p.x), Rational(p.y)});
}

/// Lattice points of the sector with 0 <= x <= x_max, ordered by (x, y).
/// Finite slopes only: a truncation of S(inf) is an infinite set.
std::vector<LatticePoint> enumerate_truncated(const Sector& sector, const Int& x_max);

} // namespace sectorpack
