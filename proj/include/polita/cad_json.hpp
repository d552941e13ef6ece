#pragma once

#include "polita/cad.hpp"

#include <json.hpp>

namespace polita {

nlohmann::json to_json(const TriangularSystem& t);

// The subtree of already constructed cells below `id`.
nlohmann::json cad_to_json(const Cad& cad, NodeId id = Cad::kRoot);

// Reads {"dimension": n, "polynomials": ["x1^2 + x2^2 - 1", ...]}; each
// polynomial goes to the level of its highest variable.
PolyFamily family_from_json(const nlohmann::json& j);

}  // namespace polita
