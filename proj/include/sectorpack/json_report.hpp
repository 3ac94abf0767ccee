#pragma once

#include <json.hpp>

#include "sectorpack/collision.hpp"
#include "sectorpack/search.hpp"
#include "sectorpack/verifier.hpp"

namespace sectorpack {

// All reports carry a top-level "schema": 1 marker.
inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const LatticePoint& p);
LatticePoint lattice_point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CollisionWitness& w);
CollisionWitness collision_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConditionChecklist& c);
ConditionChecklist checklist_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport verification_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DensityReport& r);
DensityReport density_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::vector<SearchHit>& hits);

} // namespace sectorpack
