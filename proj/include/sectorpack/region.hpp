#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sectorpack/sector.hpp"

namespace sectorpack {

/// R_n = {(x,y) in S(alpha) : 0 <= P(x,y) <= n}.
struct Region {
    IVQuadratic poly;
    Sector sector;
    Int level;
};

/// Behaviour of the homogeneous part on the closed sector directions.
/// status: +1 strictly positive, 0 nonnegative with a vanishing direction,
/// -1 negative somewhere.  violating_direction is a primitive lattice
/// direction inside the sector where the form is <= 0, whenever a rational
/// one exists (it always does for status -1; for status 0 it is absent
/// exactly when the only vanishing direction is an irrational boundary).
struct SectorFormAnalysis {
    int status = 0;
    std::optional<std::pair<Int, Int>> violating_direction;
};

SectorFormAnalysis analyze_homogeneous_on_sector(const IVQuadratic& p, const Sector& sector);

/// Certificate that R_n is bounded, with a scan cutoff.
///
/// RadiusBound: the homogeneous part is strictly positive on the closed
/// sector, P2 >= mu * r^2 there, and every point of R_n lies within
/// `radius` of the origin.  ColumnBound: the form vanishes along some
/// sector direction but P grows along it; every column x > x_max has all
/// its sector values above the level.
struct BoundednessCertificate {
    enum class Kind { RadiusBound, ColumnBound };
    Kind kind;
    Rational radius{0};
    Rational mu{0};
    Int x_max{0};
};

/// Throws unbounded_region_error when R_n cannot be certified bounded
/// (which already disqualifies P as a packing polynomial).
BoundednessCertificate boundedness_certificate(const IVQuadratic& p, const Sector& sector,
                                               const Int& level);

struct RegionScan {
    std::vector<LatticePoint> points;          // all of R_n, ordered by (x, y)
    std::optional<LatticePoint> negative_point; // in-sector point with P < 0, if any in the box
};

RegionScan scan_region(const Region& region);

/// Exactly the lattice points of R_n, ordered by (x, y).
std::vector<LatticePoint> region_points(const Region& region);

/// Area of R_n by adaptive polar quadrature, absolute error <= tol.
/// Subtracts the part of the sector below the zero level curve.
double region_area(const Region& region, double tol = 1e-9);

} // namespace sectorpack
