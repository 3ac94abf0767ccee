#pragma once

#include <array>
#include <vector>

#include "sectorpack/verifier.hpp"

namespace sectorpack {

struct SearchHit {
    IVQuadratic poly;
    VerificationReport report;
};

/// Leading coefficients (A, B, C) with 1 <= A <= bound, |B| <= bound,
/// B^2 divisible by A and C = B^2/A: the zero-discriminant grid.
std::vector<std::array<Int, 3>> delta_pruned_leading(long bound);

/// Leading coefficients from the grid that additionally satisfy the slope
/// constraint alpha = A/(1-B) for the given sector (empty for irrational
/// sectors).
std::vector<std::array<Int, 3>> sector_pruned_leading(const Sector& sector, long bound);

/// Exhaustive pruned search for packing-polynomial candidates surviving
/// necessary_conditions and verify_prefix(N), sorted by sextuple.
std::vector<SearchHit> search_quadratics(const Sector& sector, long coeff_bound, const Int& n,
                                         int threads = 1);

} // namespace sectorpack
