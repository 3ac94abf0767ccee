#include "sectorpack/verifier.hpp"

#include <algorithm>
#include <sstream>

namespace sectorpack {

namespace {

constexpr const char* kBasis = check_names::basis;
constexpr const char* kLead = check_names::positive_lead;
constexpr const char* kRay = check_names::ray_positivity;
constexpr const char* kDelta = check_names::zero_discriminant;
constexpr const char* kAlpha = check_names::alpha_constraint;
constexpr const char* kCInt = check_names::c_integral;
constexpr const char* kBounded = check_names::bounded_regions;

ConditionEntry pass(const char* name) { return {name, CheckStatus::Pass, ""}; }
ConditionEntry fail(const char* name, std::string witness) {
    return {name, CheckStatus::Fail, std::move(witness)};
}
ConditionEntry skipped(const char* name) {
    return {name, CheckStatus::Skipped, "screened out by earlier failures"};
}

} // namespace

ConditionChecklist necessary_conditions(const IVQuadratic& p, const Sector& sector) {
    ConditionChecklist out;

    // The sextuple representation is integer-valued by construction.
    out.entries.push_back(pass(kBasis));

    if (sgn(p.a) > 0)
        out.entries.push_back(pass(kLead));
    else
        out.entries.push_back(fail(kLead, "A = " + p.a.get_str()));

    Int delta = discriminant(p);
    if (sgn(delta) == 0)
        out.entries.push_back(pass(kDelta));
    else
        out.entries.push_back(fail(kDelta, "Delta = " + delta.get_str()));

    std::optional<SectorSlope> forced = alpha_from_coefficients(p);
    bool alpha_ok = false;
    std::string alpha_witness;
    if (sector.alpha.kind() == SectorSlope::Kind::QuadIrrational) {
        alpha_witness = "A/(1-B) rational, alpha irrational";
    } else if (!forced) {
        alpha_witness = p.b == 1 ? "B = 1 with A != C" : "A/(1-B) not a positive slope";
    } else if (*forced == sector.alpha) {
        alpha_ok = true;
    } else {
        alpha_witness = "A/(1-B) = " + forced->str() + " != " + sector.alpha.str();
    }
    out.entries.push_back(alpha_ok ? pass(kAlpha) : fail(kAlpha, alpha_witness));

    bool c_ok = false;
    if (sgn(p.a) != 0 && p.b * p.b % p.a == 0 && p.c == p.b * p.b / p.a) c_ok = true;
    out.entries.push_back(c_ok ? pass(kCInt)
                                : fail(kCInt, "C != B^2/A or B^2/A not integral"));

    bool cheap_ok = true;
    for (const auto& e : out.entries)
        if (e.status == CheckStatus::Fail) cheap_ok = false;

    if (!cheap_ok) {
        out.entries.push_back(skipped(kRay));
        out.entries.push_back(skipped(kBounded));
        return out;
    }

    SectorFormAnalysis fa = analyze_homogeneous_on_sector(p, sector);
    if (!fa.violating_direction) {
        out.entries.push_back(pass(kRay));
    } else {
        std::ostringstream os;
        os << "P2 <= 0 on the lattice ray through (" << fa.violating_direction->first << ", "
           << fa.violating_direction->second << ")";
        out.entries.push_back(fail(kRay, os.str()));
    }

    try {
        boundedness_certificate(p, sector, Int(1));
        out.entries.push_back(pass(kBounded));
    } catch (const unbounded_region_error& e) {
        out.entries.push_back(fail(kBounded, e.what()));
    }
    return out;
}

VerificationReport verify_prefix(const IVQuadratic& p, const Sector& sector, const Int& n) {
    if (sgn(n) < 0) throw std::domain_error("verify_prefix: negative level");
    VerificationReport rep;
    rep.limit = n;

    RegionScan scan;
    try {
        scan = scan_region(Region{p, sector, n});
    } catch (const unbounded_region_error&) {
        rep.status = VerificationReport::Status::Failed;
        rep.kind = VerificationReport::FailureKind::Unbounded;
        return rep;
    }

    if (scan.negative_point) {
        rep.status = VerificationReport::Status::Failed;
        rep.kind = VerificationReport::FailureKind::OutOfRange;
        rep.p = *scan.negative_point;
        rep.value = eval(p, rep.p);
        return rep;
    }

    // Histogram of attained values with the two lexicographically smallest
    // points per value (the scan emits points in lex order already).
    if (!n.fits_ulong_p())
        throw std::domain_error("verify_prefix: level too large for the value histogram");
    std::size_t total = std::size_t(mpz_get_ui(n.get_mpz_t())) + 1;
    std::vector<unsigned char> count(total, 0);
    std::vector<LatticePoint> first(total), second(total);
    for (const auto& pt : scan.points) {
        Int v = eval(p, pt);
        std::size_t idx = mpz_get_ui(v.get_mpz_t());
        if (count[idx] == 0) first[idx] = pt;
        else if (count[idx] == 1) second[idx] = pt;
        if (count[idx] < 2) ++count[idx];
    }

    for (std::size_t v = 0; v < total; ++v) {
        if (count[v] == 1) continue;
        rep.status = VerificationReport::Status::Failed;
        rep.value = Int(static_cast<unsigned long>(v));
        if (count[v] == 0) {
            rep.kind = VerificationReport::FailureKind::Gap;
        } else {
            rep.kind = VerificationReport::FailureKind::Collision;
            rep.p = first[v];
            rep.q = second[v];
        }
        return rep;
    }
    rep.status = VerificationReport::Status::VerifiedUpTo;
    return rep;
}

} // namespace sectorpack
