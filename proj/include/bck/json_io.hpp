#pragma once

#include <json.hpp>

#include "bck/algebra.hpp"
#include "bck/degree.hpp"
#include "bck/engine.hpp"
#include "bck/enumeration.hpp"

namespace bck {

/// {"count": c, "total": t, "reduced": "p/q"}
nlohmann::json to_json(const Degree& d);
Degree degree_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AxiomReport& r);
nlohmann::json to_json(const GapEvidence& ev);
nlohmann::json to_json(const CatalogEntry& e);
nlohmann::json to_json(const SpectrumReport& r);
nlohmann::json to_json(const AuditReport& r);
nlohmann::json table_json(const BckAlgebra& a);

}  // namespace bck
