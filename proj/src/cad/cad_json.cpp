#include "polita/cad_json.hpp"

#include "polita/errors.hpp"

namespace polita {

nlohmann::json to_json(const TriangularSystem& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : t.entries())
    out.push_back({{"root", e.root_index}, {"poly", e.poly.to_string()}, {"degree", e.degree}});
  return out;
}

nlohmann::json cad_to_json(const Cad& cad, NodeId id) {
  const CadCell& c = cad.cell(id);
  nlohmann::json out;
  out["path"] = cad.path_string(id);
  out["level"] = c.level;
  out["kind"] = c.kind == CellKind::Root ? "root" : (c.kind == CellKind::Section ? "section" : "sector");
  out["sample"] = to_json(c.sample);
  if (c.level > 0) {
    nlohmann::json signs = nlohmann::json::object();
    const auto& members = cad.family().level(c.level);
    for (std::size_t i = 0; i < members.size(); ++i) signs[members[i].to_string()] = c.signs[i];
    out["signs"] = std::move(signs);
  }
  nlohmann::json kids = nlohmann::json::array();
  for (NodeId k : c.children) kids.push_back(cad_to_json(cad, k));
  out["children"] = std::move(kids);
  return out;
}

PolyFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("polynomials") || !j["polynomials"].is_array())
    throw ParseError("family file must be an object with a \"polynomials\" array");
  std::vector<Poly> polys;
  int dimension = 0;
  for (const auto& p : j["polynomials"]) {
    if (!p.is_string()) throw ParseError("family polynomials must be strings");
    polys.push_back(Poly::parse(p.get<std::string>()));
    dimension = std::max(dimension, polys.back().main_var());
  }
  if (j.contains("dimension")) {
    if (!j["dimension"].is_number_integer() || j["dimension"].get<int>() < dimension)
      throw ParseError("\"dimension\" must be an integer covering every variable used");
    dimension = j["dimension"].get<int>();
  }
  PolyFamily family(dimension);
  for (const auto& p : polys) family.insert(p);
  return family;
}

}  // namespace polita
