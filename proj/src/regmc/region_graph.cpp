#include "polita/errors.hpp"
#include "polita/region.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace polita {

PolyFamily poly_closure(const PolITA& a, const TctlPtr& formula) {
  PolyFamily family(a.clocks);
  for (int i = 1; i <= a.clocks; ++i) family.insert(Poly::variable(i));
  for (const auto& t : a.transitions) {
    for (const auto& c : t.guard) family.insert(c.poly);
    for (const auto& [clock, rhs] : t.assignments) family.insert(Poly::variable(clock) - rhs);
  }
  if (formula) {
    for (const Poly& p : atom_polynomials(formula)) {
      if (p.main_var() > a.clocks) throw DomainError("formula constraint '" + p.to_string() + "' uses an unknown clock");
      family.insert(p);
    }
  }
  return family;
}

// ============================================================================
// Abstraction
// ============================================================================

RegionAbstraction::RegionAbstraction(PolITA automaton, const TctlPtr& formula) : a_(std::move(automaton)) {
  if (auto issues = validate(a_); !issues.empty()) throw ValidationError(std::move(issues));
  cad_ = std::make_unique<Cad>(eliminate_all(poly_closure(a_, formula)));
}

RegState RegionAbstraction::initial() { return {a_.initial, zero_extension(Cad::kRoot, a_.level(a_.initial))}; }

RegState RegionAbstraction::time_successor(const RegState& s) {
  const CadCell& c = cad_->cell(s.cell);
  const auto& siblings = cad_->children(c.parent);
  const auto next = static_cast<std::size_t>(c.child_index) + 1;
  return next < siblings.size() ? RegState{s.state, siblings[next]} : s;
}

NodeId RegionAbstraction::zero_extension(NodeId cell, int level) {
  NodeId node = cell;
  for (int l = cad_->cell(cell).level + 1; l <= level; ++l) {
    const FamilyRef clock = cad_->family().find(Poly::variable(l)).value();
    const auto& kids = cad_->children(node);
    const auto it = std::find_if(kids.begin(), kids.end(), [&](NodeId k) { return cad_->sign(k, clock) == 0; });
    POLITA_ASSERT(it != kids.end(), "no cell where x" + std::to_string(l) + " = 0");
    node = *it;
  }
  return node;
}

int RegionAbstraction::sign_on(NodeId cell, const Poly& p) {
  if (p.is_constant()) return sign(p.constant_value());
  const auto ref = cad_->family().find(p);
  if (!ref) throw DomainError("sign_on: '" + p.to_string() + "' is not in the polynomial closure");
  const int level = cad_->cell(cell).level;
  return cad_->sign(level >= ref->level ? cell : zero_extension(cell, ref->level), *ref);
}

bool RegionAbstraction::guard_holds(std::size_t transition, NodeId cell) {
  for (const auto& c : a_.transitions.at(transition).guard)
    if (!holds(c.rel, sign_on(cell, c.poly))) return false;
  return true;
}

std::vector<RegMove> RegionAbstraction::discrete_successors(const RegState& s) {
  std::vector<RegMove> out;
  for (std::size_t t : a_.outgoing(s.state)) {
    if (!guard_holds(t, s.cell)) continue;
    const Transition& tr = a_.transitions[t];
    const int k = a_.level(tr.source);
    const int k2 = a_.level(tr.target);
    NodeId cell = s.cell;
    if (k > k2) {
      cell = cad_->ancestor(cell, k2);
    } else {
      const Poly rhs = effective_update(a_, tr)[static_cast<std::size_t>(k - 1)];
      const Poly moved = Poly::variable(k) - rhs;
      if (!moved.is_zero()) {
        // The updated active clock lies on the section where x_k - P vanishes.
        const FamilyRef ref = cad_->family().find(moved).value();
        const auto& siblings = cad_->children(cad_->cell(cell).parent);
        const auto it =
            std::find_if(siblings.begin(), siblings.end(), [&](NodeId c) { return cad_->sign(c, ref) == 0; });
        POLITA_ASSERT(it != siblings.end(), "no section for the update " + moved.to_string() + " = 0");
        cell = *it;
      }
      cell = zero_extension(cell, k2);
    }
    out.push_back({t, {tr.target, cell}});
  }
  return out;
}

bool RegionAbstraction::proposition_holds(const RegState& s, const std::string& name) const {
  if (auto q = a_.find_state(name)) return *q == s.state;
  if (name == "final") return a_.states.at(static_cast<std::size_t>(s.state)).final;
  throw DomainError("unknown proposition '" + name + "'");
}

bool RegionAbstraction::constraint_holds(const RegState& s, const Constraint& c) {
  return holds(c.rel, sign_on(s.cell, c.poly));
}

std::string RegionAbstraction::describe(const RegState& s) const {
  return a_.states.at(static_cast<std::size_t>(s.state)).name + " @ " + cad_->path_string(s.cell);
}

// ============================================================================
// Graphs
// ============================================================================

std::string edge_label(const PolITA& a, const RegEdge& e) {
  if (e.is_time()) return "tau";
  const std::string& label = a.transitions.at(*e.transition).label;
  return label == kSilent ? "eps" : label;
}

std::optional<std::size_t> RegGraph::find(const RegState& s) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == s) return i;
  return std::nullopt;
}

std::vector<std::size_t> RegGraph::successors(std::size_t state) const {
  std::vector<std::size_t> out;
  for (std::size_t e : this->out.at(state)) out.push_back(edges[e].to);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

class GraphBuilder {
 public:
  GraphBuilder(RegionAbstraction& abstraction, RegGraph& g) : abs_(abstraction), g_(g) {}

  std::size_t add(const RegState& s) {
    auto [it, fresh] = index_.emplace(s, g_.states.size());
    if (fresh) {
      g_.states.push_back(s);
      g_.out.emplace_back();
      pending_.push_back(it->second);
    }
    return it->second;
  }

  // Adds the outgoing edges of every pending state, discovering targets as new states.
  void expand_all() {
    while (!pending_.empty()) {
      const std::size_t i = pending_.front();
      pending_.pop_front();
      const RegState s = g_.states[i];
      connect(i, add(abs_.time_successor(s)), std::nullopt);
      for (const auto& m : abs_.discrete_successors(s)) connect(i, add(m.target), m.transition);
    }
  }

 private:
  void connect(std::size_t from, std::size_t to, std::optional<std::size_t> transition) {
    g_.out[from].push_back(g_.edges.size());
    g_.edges.push_back({from, to, transition});
  }

  RegionAbstraction& abs_;
  RegGraph& g_;
  std::map<RegState, std::size_t> index_;
  std::deque<std::size_t> pending_;
};

}  // namespace

RegGraph build_region_graph(RegionAbstraction& abstraction, bool reachable_only) {
  RegGraph g;
  GraphBuilder builder(abstraction, g);
  g.initial = builder.add(abstraction.initial());
  if (!reachable_only) {
    const PolITA& a = abstraction.automaton();
    for (int q = 0; q < static_cast<int>(a.states.size()); ++q)
      for (NodeId cell : abstraction.cad().cells_at_level(a.level(q))) builder.add({q, cell});
  }
  builder.expand_all();
  return g;
}

std::string to_dot(const RegGraph& g, const RegionAbstraction& abstraction) {
  std::ostringstream out;
  auto node = [&](std::size_t i) { return "\"" + abstraction.describe(g.states[i]) + "\""; };
  out << "digraph region {\n";
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    out << "  " << node(i);
    if (i == g.initial) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const auto& e : g.edges) {
    out << "  " << node(e.from) << " -> " << node(e.to);
    if (e.is_time())
      out << " [style=dashed]";
    else
      out << " [label=\"" << edge_label(abstraction.automaton(), e) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace polita
