#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "sectorpack/region.hpp"

namespace sectorpack {

/// Two distinct lattice points of a cone with equal polynomial value,
/// plus the reflection certificate: p = axis + (r,s), q = axis - (r,s),
/// and axis is the symmetry point of its own line, index i = r*ay - s*ax.
struct CollisionWitness {
    LatticePoint p, q;
    Int value;
    Int r, s;
    LatticePoint axis;
    Int line_index;
};

/// Streams the lattice points of cone0 ∩ cone in nondecreasing inf-norm
/// distance from the apex of cone0, ties broken by (x, y).  Every examined
/// lattice point is charged against the caller's work budget.
class AnchorScan {
public:
    AnchorScan(AffineCone cone0, AffineCone cone);

    LatticePoint next(long& work, long budget);

private:
    struct Cand {
        Rational dist;
        LatticePoint pt;
    };
    struct CandGreater {
        bool operator()(const Cand& a, const Cand& b) const {
            if (a.dist != b.dist) return b.dist < a.dist;
            return b.pt < a.pt;
        }
    };
    void push_ring(long k);

    AffineCone cone0_, cone_;
    Int base_x_, base_y_;
    long rings_pushed_ = 0;
    std::priority_queue<Cand, std::vector<Cand>, CandGreater> heap_;
};

/// Constructs a collision witness for a nonzero-discriminant polynomial on
/// an affine cone by walking symmetry lines seeded from anchors in the
/// intersection of the cone with its center translate.  Throws
/// zero_discriminant_error and budget_exhausted_error.
CollisionWitness find_collision(const IVQuadratic& p, const AffineCone& cone,
                                long budget = 1'000'000);

} // namespace sectorpack
