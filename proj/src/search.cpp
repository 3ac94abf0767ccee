#include "sectorpack/search.hpp"

#include <algorithm>
#include <thread>

namespace sectorpack {

std::vector<std::array<Int, 3>> delta_pruned_leading(long bound) {
    std::vector<std::array<Int, 3>> out;
    for (long a = 1; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            if ((b * b) % a != 0) continue;
            out.push_back({Int(a), Int(b), Int((b * b) / a)});
        }
    return out;
}

std::vector<std::array<Int, 3>> sector_pruned_leading(const Sector& sector, long bound) {
    std::vector<std::array<Int, 3>> out;
    if (sector.alpha.kind() == SectorSlope::Kind::QuadIrrational)
        return out; // A/(1-B) is rational: no tuple meets an irrational slope
    for (auto& abc : delta_pruned_leading(bound)) {
        IVQuadratic probe;
        probe.a = abc[0];
        probe.b = abc[1];
        probe.c = abc[2];
        auto forced = alpha_from_coefficients(probe);
        if (forced && *forced == sector.alpha) out.push_back(abc);
    }
    return out;
}

std::vector<SearchHit> search_quadratics(const Sector& sector, long coeff_bound, const Int& n,
                                         int threads) {
    if (coeff_bound < 1) throw std::domain_error("search_quadratics: bound must be >= 1");
    if (sgn(n) < 1) throw std::domain_error("search_quadratics: N must be >= 1");

    std::vector<IVQuadratic> candidates;
    for (const auto& abc : sector_pruned_leading(sector, coeff_bound))
        for (long d = -coeff_bound; d <= coeff_bound; ++d)
            for (long e = -coeff_bound; e <= coeff_bound; ++e)
                for (long f = -coeff_bound; f <= coeff_bound; ++f)
                    candidates.push_back({abc[0], abc[1], abc[2], Int(d), Int(e), Int(f)});

    std::vector<char> keep(candidates.size(), 0);
    std::vector<VerificationReport> reports(candidates.size());
    auto run = [&](std::size_t i) {
        ConditionChecklist checks = necessary_conditions(candidates[i], sector);
        if (!checks.all_pass()) return;
        VerificationReport rep = verify_prefix(candidates[i], sector, n);
        if (!rep.verified()) return;
        keep[i] = 1;
        reports[i] = rep;
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i) run(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t stride = std::size_t(threads);
        for (std::size_t t = 0; t < stride; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < candidates.size(); i += stride) run(i);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<SearchHit> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) out.push_back({candidates[i], reports[i]});
    std::sort(out.begin(), out.end(),
              [](const SearchHit& a, const SearchHit& b) { return a.poly < b.poly; });
    return out;
}

} // namespace sectorpack
