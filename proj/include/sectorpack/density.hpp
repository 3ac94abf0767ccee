#pragma once

#include <optional>
#include <vector>

#include "sectorpack/region.hpp"

namespace sectorpack {

/// Value of the sector density integral: exact element of a quadratic
/// field, or +infinity.
struct DensityValue {
    bool infinite = false;
    QuadVal value; // meaningful when finite

    bool equals_one() const { return !infinite && (value - QuadVal(Rational(1))).sign() == 0; }
};

/// Exact value of the integral of dt / (A + 2Bt + Ct^2) over [0, alpha]
/// for a zero-discriminant leading form with A > 0.  Throws
/// nonzero_discriminant_error and divergent_integral_error (the latter when
/// the form has a root inside the integration range).
DensityValue closed_form_density(const Int& A, const Int& B, const Int& C,
                                 const SectorSlope& alpha);

/// The sector slope forced on a packing polynomial by its leading
/// coefficients: A/(1-B), infinity when B == 1 and A == C, nothing when no
/// positive slope satisfies the constraint.
std::optional<SectorSlope> alpha_from_coefficients(const IVQuadratic& p);

struct DensityReport {
    bool has_closed_form = false; // defined only for zero discriminant
    DensityValue closed_form;
    struct Row {
        Int level;
        Int count;
        double count_over_n;
        double area;
        double davenport_gap; // |area - count| / sqrt(n)
    };
    std::vector<Row> rows;
};

/// Exact lattice counts and quadrature areas of R_n for each level.
DensityReport empirical_density(const IVQuadratic& p, const Sector& sector,
                                const std::vector<Int>& levels, int threads = 1);

/// Numeric integral of d(theta) / (2 * p2(theta)) over [0, arctan(alpha)];
/// validates the polar form of the density against the closed form.
double density_quadrature(const Int& A, const Int& B, const Int& C, const SectorSlope& alpha,
                          double tol);

} // namespace sectorpack
