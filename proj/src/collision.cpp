#include "sectorpack/collision.hpp"

#include <sstream>

namespace sectorpack {

namespace {

Int round_nearest(const Rational& v) {
    return (v + Rational(1, 2)).floor();
}

Rational inf_dist(const LatticePoint& pt, const RatPoint& from) {
    return rat_max(rat_abs(Rational(pt.x) - from.x), rat_abs(Rational(pt.y) - from.y));
}

} // namespace

AnchorScan::AnchorScan(AffineCone cone0, AffineCone cone)
    : cone0_(std::move(cone0)), cone_(std::move(cone)) {
    base_x_ = round_nearest(cone0_.apex().x);
    base_y_ = round_nearest(cone0_.apex().y);
    push_ring(0);
}

void AnchorScan::push_ring(long k) {
    if (k == 0) {
        heap_.push({inf_dist({base_x_, base_y_}, cone0_.apex()), {base_x_, base_y_}});
    } else {
        Int kk(k);
        for (Int t = -kk; t <= kk; ++t) {
            heap_.push({inf_dist({base_x_ + t, base_y_ - kk}, cone0_.apex()), {base_x_ + t, base_y_ - kk}});
            heap_.push({inf_dist({base_x_ + t, base_y_ + kk}, cone0_.apex()), {base_x_ + t, base_y_ + kk}});
        }
        for (Int t = -kk + 1; t <= kk - 1; ++t) {
            heap_.push({inf_dist({base_x_ - kk, base_y_ + t}, cone0_.apex()), {base_x_ - kk, base_y_ + t}});
            heap_.push({inf_dist({base_x_ + kk, base_y_ + t}, cone0_.apex()), {base_x_ + kk, base_y_ + t}});
        }
    }
    rings_pushed_ = k + 1;
}

LatticePoint AnchorScan::next(long& work, long budget) {
    for (;;) {
        // Points of un-pushed rings sit further than ring_index - 1/2 from
        // the apex, so the heap top is globally minimal once enough rings
        // are in.
        while (heap_.empty() ||
               Rational(Int(rings_pushed_)) - Rational(1, 2) <= heap_.top().dist)
            push_ring(rings_pushed_);
        Cand c = heap_.top();
        heap_.pop();
        if (++work > budget)
            throw budget_exhausted_error("anchor scan exhausted its budget");
        if (cone_contains(cone0_, c.pt) && cone_contains(cone_, c.pt)) return c.pt;
    }
}

namespace {

struct AnchorState {
    LatticePoint base;
    Int r{0}, s{0};
    Int dirx{0}, diry{0}; // primitive symmetry-line direction, pointing outward
    long done = 0;
    bool degenerate = false;
};

AnchorState prepare_anchor(const IVQuadratic& p, const RatPoint& ctr, const LatticePoint& m) {
    AnchorState st;
    st.base = m;
    Rational dx = Rational(m.x) - ctr.x;
    Rational dy = Rational(m.y) - ctr.y;
    Rational grad_x = Rational(p.a) * dx + Rational(p.b) * dy;
    Rational grad_y = Rational(p.b) * dx + Rational(p.c) * dy;
    if (grad_x.is_zero() && grad_y.is_zero()) { // anchor at the center
        st.degenerate = true;
        return st;
    }
    // s/r = -grad_x/grad_y in lowest terms; grad_y == 0 turns into the
    // vertical step (0, 1) automatically.
    Int rr = grad_y.num() * grad_x.den();
    Int ss = -(grad_x.num() * grad_y.den());
    Int g = gcd(rr, ss);
    rr /= g;
    ss /= g;
    if (sgn(rr) < 0 || (sgn(rr) == 0 && sgn(ss) < 0)) {
        rr = -rr;
        ss = -ss;
    }
    st.r = rr;
    st.s = ss;
    Int denom = p.a * rr * rr + 2 * p.b * rr * ss + p.c * ss * ss;
    if (sgn(denom) == 0) { // form vanishes along the induced direction
        st.degenerate = true;
        return st;
    }
    Int ux = dx.num() * dy.den();
    Int uy = dy.num() * dx.den();
    Int g2 = gcd(ux, uy);
    st.dirx = ux / g2;
    st.diry = uy / g2;
    return st;
}

} // namespace

CollisionWitness find_collision(const IVQuadratic& p, const AffineCone& cone, long budget) {
    if (sgn(discriminant(p)) == 0) throw zero_discriminant_error();
    RatPoint ctr = center(p);
    AffineCone cone0(ctr, cone.gen1(), cone.gen2());
    AnchorScan scan(cone0, cone);
    long work = 0;
    std::vector<AnchorState> anchors;

    auto try_axis = [&](const AnchorState& st, const Int& k) -> std::optional<CollisionWitness> {
        LatticePoint axis{st.base.x + k * st.dirx, st.base.y + k * st.diry};
        LatticePoint u{axis.x + st.r, axis.y + st.s};
        LatticePoint v{axis.x - st.r, axis.y - st.s};
        if (!cone_contains(cone, u) || !cone_contains(cone, v)) return std::nullopt;
        Int val = eval(p, u);
        if (val != eval(p, v))
            throw std::logic_error("find_collision: reflection identity violated");
        return CollisionWitness{u, v, val, st.r, st.s, axis, st.r * axis.y - st.s * axis.x};
    };

    for (int stage = 0;; ++stage) {
        long depth = 64L << stage;
        std::size_t pool = std::size_t(8) << stage;
        while (anchors.size() < pool)
            anchors.push_back(prepare_anchor(p, ctr, scan.next(work, budget)));
        for (auto& st : anchors) {
            if (st.degenerate) continue;
            for (long k = st.done; k < depth; ++k) {
                work += k > 0 ? 2 : 1;
                if (work > budget) {
                    std::ostringstream os;
                    os << "collision search budget exhausted after " << work
                       << " points (stage " << stage << ", " << anchors.size() << " anchors)";
                    throw budget_exhausted_error(os.str());
                }
                if (auto w = try_axis(st, Int(k))) return *w;
                if (k > 0)
                    if (auto w = try_axis(st, Int(-k))) return *w;
            }
            st.done = depth;
        }
    }
}

} // namespace sectorpack
