#pragma once

// JSON views of the library results (nlohmann::json, ADL to_json hooks).

#include <nlohmann/json.hpp>

#include "hypcover/covering.hpp"
#include "hypcover/orthoscheme.hpp"
#include "hypcover/planar.hpp"

namespace hypcover {

void to_json(nlohmann::json& j, const SchlafliParams& p);
void to_json(nlohmann::json& j, const Interval& i);
void to_json(nlohmann::json& j, const EdgeReport& r);
void to_json(nlohmann::json& j, const OptimizerTrace& t);

/// {params:{u,v,w}, contact_edge, t, h1, h2, density, volumes:{H1,H2,F}, feasible, per_edge:[...]}
void to_json(nlohmann::json& j, const DensityResult& r);
void to_json(nlohmann::json& j, const FamilyResult& r);

/// Geometry report: Gram matrices, vertex coordinates, volumes, edge lengths.
nlohmann::json geometry_json(const TruncatedOrthoscheme& o);

}  // namespace hypcover

namespace hypcover::planar {

void to_json(nlohmann::json& j, const PlanarConfig& c);
void to_json(nlohmann::json& j, const ScanRow& r);
void to_json(nlohmann::json& j, const ScanReport& r);

}  // namespace hypcover::planar
