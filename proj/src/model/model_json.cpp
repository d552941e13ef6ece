#include "polita/errors.hpp"
#include "polita/lexer.hpp"
#include "polita/model.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace polita {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string string_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) throw ParseError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

// Polynomials may be written as strings or plain numbers.
Poly poly_value(const json& v, const std::string& where) {
  if (v.is_string()) return Poly::parse(v.get<std::string>());
  if (v.is_number_integer()) return Poly(v.get<long>());
  throw ParseError(where + ": polynomial must be a string");
}

class ModelReader {
 public:
  PolITA read(const json& root) {
    if (!root.is_object()) throw ParseError("model: expected a JSON object");
    const json& clocks = field(root, "clocks", "model");
    if (!clocks.is_number_integer()) throw ParseError("model: \"clocks\" must be an integer");
    a_.clocks = clocks.get<int>();
    read_states(field(root, "states", "model"));
    if (root.contains("transitions")) read_transitions(root.at("transitions"));
    for (auto& i : validate(a_)) issues_.push_back(std::move(i));
    if (!issues_.empty()) throw ValidationError(issues_);
    return std::move(a_);
  }

 private:
  void read_states(const json& states) {
    if (!states.is_array()) throw ParseError("model: \"states\" must be an array");
    int initial_count = 0;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const std::string where = "state " + std::to_string(i);
      const json& s = states[i];
      State st;
      st.name = string_field(s, "name", where);
      const json& level = field(s, "level", where);
      if (!level.is_number_integer()) throw ParseError(where + ": \"level\" must be an integer");
      st.level = level.get<int>();
      st.final = s.value("final", false);
      if (s.value("initial", false)) {
        a_.initial = static_cast<int>(i);
        ++initial_count;
      }
      a_.states.push_back(std::move(st));
    }
    if (initial_count != 1)
      issues_.push_back("exactly one state must be initial (found " + std::to_string(initial_count) + ")");
  }

  int state_index(const std::string& name, const std::string& where) {
    if (auto s = a_.find_state(name)) return *s;
    issues_.push_back(where + ": unknown state '" + name + "'");
    return -1;
  }

  void check_clocks(const Poly& p, const std::string& where) {
    if (p.main_var() > a_.clocks) issues_.push_back(where + ": unknown clock x" + std::to_string(p.main_var()));
  }

  void read_transitions(const json& transitions) {
    if (!transitions.is_array()) throw ParseError("model: \"transitions\" must be an array");
    for (std::size_t i = 0; i < transitions.size(); ++i) {
      const std::string where = "transition " + std::to_string(i);
      const json& j = transitions[i];
      Transition t;
      t.source = state_index(string_field(j, "from", where), where);
      t.target = state_index(string_field(j, "to", where), where);
      if (j.contains("label") && !j.at("label").is_null()) {
        if (!j.at("label").is_string()) throw ParseError(where + ": \"label\" must be a string");
        t.label = j.at("label").get<std::string>();
      }
      if (j.contains("guard")) {
        const json& g = j.at("guard");
        if (!g.is_array()) throw ParseError(where + ": \"guard\" must be an array");
        for (const auto& c : g) {
          Constraint con;
          if (c.contains("poly")) {
            con.poly = poly_value(c.at("poly"), where);
          } else {
            con.poly = poly_value(field(c, "lhs", where), where) - poly_value(field(c, "rhs", where), where);
          }
          con.rel = parse_relation(string_field(c, "rel", where));
          check_clocks(con.poly, where);
          t.guard.push_back(std::move(con));
        }
      }
      if (j.contains("update")) {
        const json& u = j.at("update");
        if (!u.is_object()) throw ParseError(where + ": \"update\" must be an object");
        for (const auto& [clock, rhs] : u.items()) {
          int index = 0;
          try {
            index = resolve_indexed_variable(clock);
          } catch (const ParseError&) {
            issues_.push_back(where + ": unknown clock '" + clock + "'");
            continue;
          }
          if (index > a_.clocks) {
            issues_.push_back(where + ": unknown clock '" + clock + "'");
            continue;
          }
          Poly p = poly_value(rhs, where);
          check_clocks(p, where);
          t.assignments[index] = std::move(p);
        }
      }
      if (t.source >= 0 && t.target >= 0) a_.transitions.push_back(std::move(t));
    }
  }

  PolITA a_;
  std::vector<std::string> issues_;
};

}  // namespace

PolITA parse_model(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("model: ") + e.what());
  }
  try {
    return ModelReader().read(root);
  } catch (const json::type_error& e) {
    throw ParseError(std::string("model: ") + e.what());
  }
}

PolITA load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

std::string model_to_json(const PolITA& a) {
  json out;
  out["clocks"] = a.clocks;
  json states = json::array();
  for (std::size_t i = 0; i < a.states.size(); ++i) {
    const State& s = a.states[i];
    json j{{"name", s.name}, {"level", s.level}};
    if (static_cast<int>(i) == a.initial) j["initial"] = true;
    if (s.final) j["final"] = true;
    states.push_back(std::move(j));
  }
  out["states"] = std::move(states);
  json transitions = json::array();
  for (const auto& t : a.transitions) {
    json j{{"from", a.states.at(static_cast<std::size_t>(t.source)).name},
           {"to", a.states.at(static_cast<std::size_t>(t.target)).name}};
    if (t.label != kSilent) j["label"] = t.label;
    json guard = json::array();
    for (const auto& c : t.guard) guard.push_back({{"poly", c.poly.to_string()}, {"rel", to_string(c.rel)}});
    j["guard"] = std::move(guard);
    json update = json::object();
    for (const auto& [clock, rhs] : t.assignments) update["x" + std::to_string(clock)] = rhs.to_string();
    j["update"] = std::move(update);
    transitions.push_back(std::move(j));
  }
  out["transitions"] = std::move(transitions);
  return out.dump(2);
}

}  // namespace polita
