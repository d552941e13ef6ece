// polita: command-line front end.
//
// Exit codes: 0 when the checked property holds (or the command succeeded),
// 1 when it does not, 2 on usage or input errors, 3 on internal errors.
// Reports go to stdout as JSON, diagnostics to stderr.

#include "polita/cad_json.hpp"
#include "polita/decide.hpp"
#include "polita/errors.hpp"
#include "polita/region.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace polita;
using nlohmann::ordered_json;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kUsage = 2, kInternal = 3 };

int verdict(bool holds) { return holds ? kTrue : kFalse; }

void emit(const ordered_json& report) { std::cout << report.dump(2) << "\n"; }

ordered_json valuation_json(const std::vector<Rational>& v) {
  ordered_json out = ordered_json::array();
  for (const Rational& x : v) out.push_back(to_string(x));
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

int cmd_validate(const std::string& model_path) {
  std::ifstream in(model_path);
  if (!in) throw ParseError("cannot open '" + model_path + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  ordered_json report;
  report["model"] = model_path;
  try {
    const PolITA a = parse_model(text);
    report["valid"] = true;
    report["clocks"] = a.clocks;
    report["states"] = a.states.size();
    report["transitions"] = a.transitions.size();
    report["issues"] = ordered_json::array();
    emit(report);
    return kTrue;
  } catch (const ValidationError& e) {
    report["valid"] = false;
    report["issues"] = e.issues();
    emit(report);
    return kFalse;
  }
}

struct ReachOptions {
  std::string model;
  std::vector<std::string> targets;
  bool accepting = false;
  bool witness = false;
  std::string dot;
};

int cmd_reach(const ReachOptions& o) {
  const PolITA a = load_model(o.model);
  std::vector<int> targets;
  for (const auto& name : o.targets) {
    const auto q = a.find_state(name);
    if (!q) throw DomainError("unknown state '" + name + "'");
    targets.push_back(*q);
  }
  if (o.accepting)
    for (int q = 0; q < static_cast<int>(a.states.size()); ++q)
      if (a.states[static_cast<std::size_t>(q)].final) targets.push_back(q);
  if (o.targets.empty() && !o.accepting) throw DomainError("reach needs --target or --accepting");

  RegionAbstraction abs(a);
  const ReachResult r = reach(abs, targets);
  ordered_json report;
  report["reachable"] = r.reachable;
  report["expanded_states"] = r.expanded_states;
  report["constructed_cells"] = r.constructed_cells;
  ordered_json witness = ordered_json::array();
  for (const auto& step : r.witness) {
    ordered_json j;
    if (!step.edge.empty()) j["edge"] = step.edge;
    j["state"] = a.states[static_cast<std::size_t>(step.state.state)].name;
    j["cell"] = abs.cad().path_string(step.state.cell);
    if (o.witness) j["sample"] = to_json(step.sample);
    witness.push_back(std::move(j));
  }
  report["witness"] = std::move(witness);
  if (!o.dot.empty()) {
    RegionAbstraction fresh(a);
    write_file(o.dot, to_dot(build_region_graph(fresh, true), fresh));
  }
  emit(report);
  return verdict(r.reachable);
}

int cmd_mc(const std::string& model_path, const std::string& formula) {
  const PolITA a = load_model(model_path);
  const TctlPtr f = parse_tctl(formula);
  const CheckResult r = model_check(a, f);
  ordered_json report;
  report["formula"] = to_string(f);
  report["holds"] = r.holds;
  report["graph_states"] = r.graph_states;
  emit(report);
  return verdict(r.holds);
}

int cmd_simulate(const std::string& model_path, const std::string& word_text, std::size_t max_expansions) {
  const PolITA a = load_model(model_path);
  const auto word = parse_timed_word(word_text);
  SimulationOptions options;
  options.max_expansions = max_expansions;
  const SimulationResult r = run_timed_word(a, word, options);
  ordered_json report;
  report["word"] = to_string(word);
  report["accepted"] = r.accepted;
  report["truncated"] = r.truncated;
  report["expansions"] = r.expansions;
  ordered_json run = ordered_json::array();
  for (const auto& c : r.run)
    run.push_back({{"state", a.states[static_cast<std::size_t>(c.state)].name}, {"valuation", valuation_json(c.valuation)}});
  report["run"] = std::move(run);
  emit(report);
  if (r.truncated && !r.accepted) {
    std::cerr << "polita: expansion bound reached before a verdict\n";
    return kInternal;
  }
  return verdict(r.accepted);
}

int cmd_fo(const std::string& sentence) {
  const FoPtr f = parse_sentence(sentence);
  DecideStats stats;
  const bool holds = decide(f, &stats);
  ordered_json report;
  report["sentence"] = to_string(f);
  report["holds"] = holds;
  report["family_size"] = stats.family_size;
  report["cells"] = stats.cells;
  emit(report);
  return verdict(holds);
}

int cmd_cad(const std::string& family_path, const std::string& json_path) {
  std::ifstream in(family_path);
  if (!in) throw ParseError("cannot open '" + family_path + "'");
  nlohmann::json input;
  try {
    input = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("family file: ") + e.what());
  }
  PolyFamily family;
  try {
    family = family_from_json(input);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("family file: ") + e.what());
  }
  Cad cad(eliminate_all(family));
  ordered_json report;
  report["dimension"] = cad.dimension();
  ordered_json levels = ordered_json::array();
  ordered_json cells = ordered_json::array();
  for (int l = 1; l <= cad.dimension(); ++l) {
    ordered_json polys = ordered_json::array();
    for (const Poly& p : cad.family().level(l)) polys.push_back(p.to_string());
    levels.push_back(std::move(polys));
    cells.push_back(cad.cells_at_level(l).size());
  }
  report["eliminated"] = std::move(levels);
  report["cells_per_level"] = std::move(cells);
  if (!json_path.empty()) write_file(json_path, cad_to_json(cad).dump(2) + "\n");
  emit(report);
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker for polynomial interrupt timed automata"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string model, formula, word, sentence, family, json_out;
  std::size_t max_expansions = SimulationOptions{}.max_expansions;
  ReachOptions reach_opts;

  auto* validate_cmd = app.add_subcommand("validate", "Check a model file against the well-formedness rules");
  validate_cmd->add_option("model", model, "Model file (JSON)")->required();

  auto* reach_cmd = app.add_subcommand("reach", "Decide whether a state is reachable");
  reach_cmd->add_option("model", reach_opts.model, "Model file (JSON)")->required();
  reach_cmd->add_option("--target", reach_opts.targets, "Target state (repeatable)");
  reach_cmd->add_flag("--accepting", reach_opts.accepting, "Also target every final state");
  reach_cmd->add_flag("--witness", reach_opts.witness, "Include exact sample points in the witness");
  reach_cmd->add_option("--dot", reach_opts.dot, "Write the reachable region graph in DOT format");

  auto* mc_cmd = app.add_subcommand("mc", "Model check a TCTL formula");
  mc_cmd->add_option("model", model, "Model file (JSON)")->required();
  mc_cmd->add_option("--formula", formula, "Formula, e.g. \"EF (q2 and x1 > 1)\"")->required();

  auto* sim_cmd = app.add_subcommand("simulate", "Decide whether a timed word is accepted");
  sim_cmd->add_option("model", model, "Model file (JSON)")->required();
  sim_cmd->add_option("--word", word, "Timed word, e.g. \"(a,6/5)(b,23/10)\"")->required();
  sim_cmd->add_option("--max-expansions", max_expansions, "Bound on explored configurations");

  auto* fo_cmd = app.add_subcommand("fo", "Decide a first-order sentence over the reals");
  fo_cmd->add_option("--sentence", sentence, "Sentence, e.g. \"exists x . x*x - 2 = 0\"")->required();

  auto* cad_cmd = app.add_subcommand("cad", "Build the CAD of a polynomial family");
  cad_cmd->add_option("--family", family, "Family file: {\"dimension\": n, \"polynomials\": [...]}")->required();
  cad_cmd->add_option("--json", json_out, "Write the cell tree as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kTrue : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(model);
    if (*reach_cmd) return cmd_reach(reach_opts);
    if (*mc_cmd) return cmd_mc(model, formula);
    if (*sim_cmd) return cmd_simulate(model, word, max_expansions);
    if (*fo_cmd) return cmd_fo(sentence);
    if (*cad_cmd) return cmd_cad(family, json_out);
  } catch (const ValidationError& e) {
    for (const auto& issue : e.issues()) std::cerr << "polita: " << issue << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "polita: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "polita: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "polita: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "polita: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
