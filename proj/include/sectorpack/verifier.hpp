#pragma once

#include <string>
#include <vector>

#include "sectorpack/density.hpp"
#include "sectorpack/region.hpp"

namespace sectorpack {

enum class CheckStatus { Pass, Fail, Skipped };

namespace check_names {
inline constexpr const char* basis = "integer-valued basis";
inline constexpr const char* positive_lead = "A > 0";
inline constexpr const char* ray_positivity = "ray positivity";
inline constexpr const char* zero_discriminant = "zero discriminant";
inline constexpr const char* alpha_constraint = "alpha = A/(1-B)";
inline constexpr const char* c_integral = "C = B^2/A integral";
inline constexpr const char* bounded_regions = "bounded sublevel regions";
} // namespace check_names

struct ConditionEntry {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string witness; // reason / failure witness, empty on pass
};

/// Necessary-condition screen for a packing candidate: integral basis,
/// positive leading coefficient, ray positivity of the homogeneous part,
/// zero discriminant, the slope constraint alpha = A/(1-B), integrality of
/// C = B^2/A, and boundedness of the sublevel regions.  The two expensive
/// entries (ray positivity, boundedness) are evaluated only when every
/// cheap algebraic entry passes, and are marked Skipped otherwise.
struct ConditionChecklist {
    std::vector<ConditionEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (e.status != CheckStatus::Pass) return false;
        return true;
    }
    const ConditionEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

ConditionChecklist necessary_conditions(const IVQuadratic& p, const Sector& sector);

struct VerificationReport {
    enum class Status { VerifiedUpTo, Failed };
    enum class FailureKind { None, Collision, Gap, OutOfRange, Unbounded };

    Status status = Status::VerifiedUpTo;
    Int limit{0}; // N of VerifiedUpTo(N)
    FailureKind kind = FailureKind::None;
    Int value{0};       // collided value / missing value / negative value
    LatticePoint p, q;  // collision pair, or the out-of-range point in p

    bool verified() const { return status == Status::VerifiedUpTo; }
};

/// Exhaustive prefix-bijectivity check: enumerates R_N and decides whether
/// the values 0..N are each attained exactly once on the sector.
VerificationReport verify_prefix(const IVQuadratic& p, const Sector& sector, const Int& n);

} // namespace sectorpack
