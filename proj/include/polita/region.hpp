#pragma once

#include "polita/cad.hpp"
#include "polita/model.hpp"
#include "polita/tctl.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace polita {

// Polynomials the abstraction must keep sign-invariant, sorted by level:
// every clock x_i, then the guard polynomials and x_k - P for every explicit
// update x_k := P in transition order, then the polynomials of the formula's
// clock constraints. Zero polynomials and constants are dropped.
PolyFamily poly_closure(const PolITA& a, const TctlPtr& formula = nullptr);

// A state of the region abstraction: an automaton state and a CAD cell at
// the state's level.
struct RegState {
  int state = 0;
  NodeId cell = 0;

  friend bool operator==(const RegState&, const RegState&) = default;
  friend auto operator<=>(const RegState&, const RegState&) = default;
};

// An abstract discrete step: the transition taken and the target.
struct RegMove {
  std::size_t transition = 0;
  RegState target;
};

// The finite abstraction of a PolITA over a CAD adapted to its closure. The
// CAD is lifted on demand, so only the line partitions above the cells that
// are actually visited get built.
class RegionAbstraction {
 public:
  explicit RegionAbstraction(PolITA automaton, const TctlPtr& formula = nullptr);

  const PolITA& automaton() const { return a_; }
  Cad& cad() { return *cad_; }
  const Cad& cad() const { return *cad_; }

  // The automaton's initial state on the cell of the origin.
  RegState initial();

  // The next cell along the active clock: the cell just above in the same
  // cylinder, or the cell itself when it is the topmost one.
  RegState time_successor(const RegState& s);

  // Every transition whose guard holds on the cell, with the cell of the
  // updated valuation at the target level.
  std::vector<RegMove> discrete_successors(const RegState& s);

  bool guard_holds(std::size_t transition, NodeId cell);

  // Sign of p on the cell, with the clocks above the cell's level read as 0.
  // p must be (up to a factor) a member of the closure, or constant.
  int sign_on(NodeId cell, const Poly& p);

  // The cell above `cell` at `level` (>= the cell's level) where the clocks
  // beyond the cell's level are 0.
  NodeId zero_extension(NodeId cell, int level);

  // Atomic propositions: state names, and "final" for final states unless a
  // state carries that name.
  bool proposition_holds(const RegState& s, const std::string& name) const;
  bool constraint_holds(const RegState& s, const Constraint& c);

  // "q1 @ 10.1"
  std::string describe(const RegState& s) const;

 private:
  PolITA a_;
  std::unique_ptr<Cad> cad_;
};

// Label of an abstract edge: the time successor or a transition.
struct RegEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::optional<std::size_t> transition;  // empty for a time edge

  bool is_time() const { return !transition.has_value(); }
};

// "tau" for time edges, the action label, or "eps" for silent transitions.
std::string edge_label(const PolITA& a, const RegEdge& e);

struct RegGraph {
  std::vector<RegState> states;
  std::vector<RegEdge> edges;
  std::vector<std::vector<std::size_t>> out;  // edge indices by source state
  std::size_t initial = 0;

  std::optional<std::size_t> find(const RegState& s) const;
  std::vector<std::size_t> successors(std::size_t state) const;
};

// Every pair (automaton state, cell at its level) with all time and discrete
// edges when `reachable_only` is false; otherwise only what the initial state
// reaches.
RegGraph build_region_graph(RegionAbstraction& abstraction, bool reachable_only = false);

// DOT rendering: solid edges for actions, dashed for time.
std::string to_dot(const RegGraph& g, const RegionAbstraction& abstraction);

struct WitnessStep {
  std::string edge;  // "" for the first step, otherwise as edge_label
  RegState state;
  std::string where;          // as RegionAbstraction::describe
  TriangularSystem sample;    // sample point of the cell
};

struct ReachResult {
  bool reachable = false;
  std::vector<WitnessStep> witness;  // from the initial state to a target
  std::size_t expanded_states = 0;   // abstract states taken off the frontier
  std::size_t constructed_cells = 0;
};

// Breadth-first search over the abstraction, lifting cells only as the
// frontier needs them. Stops at the first target state.
ReachResult reach(RegionAbstraction& abstraction, const std::vector<int>& targets);
ReachResult reach(const PolITA& a, const std::vector<int>& targets);

struct CheckResult {
  bool holds = false;
  std::size_t graph_states = 0;
};

// CTL labeling over the part of the abstraction reachable from the initial
// state: E[a U b] as a least fixpoint over predecessors, A[a U b] as the
// least set containing b and every a-state all of whose successors are in
// the set. Throws DomainError when the formula uses unknown clocks or
// propositions.
CheckResult model_check(const PolITA& a, const TctlPtr& formula);

}  // namespace polita
