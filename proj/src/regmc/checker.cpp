#include "polita/errors.hpp"
#include "polita/region.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace polita {

ReachResult reach(RegionAbstraction& abs, const std::vector<int>& targets) {
  const PolITA& a = abs.automaton();
  ReachResult result;
  struct Parent {
    RegState from;
    std::string edge;
  };
  std::map<RegState, std::optional<Parent>> seen;
  std::deque<RegState> frontier;
  const RegState start = abs.initial();
  seen.emplace(start, std::nullopt);
  frontier.push_back(start);

  auto visit = [&](const RegState& from, const RegState& to, std::string edge) {
    if (seen.emplace(to, Parent{from, std::move(edge)}).second) frontier.push_back(to);
  };

  while (!frontier.empty()) {
    const RegState s = frontier.front();
    frontier.pop_front();
    ++result.expanded_states;
    if (std::find(targets.begin(), targets.end(), s.state) != targets.end()) {
      result.reachable = true;
      for (RegState at = s;;) {
        const auto& parent = seen.at(at);
        result.witness.push_back({parent ? parent->edge : "", at, abs.describe(at), abs.cad().cell(at.cell).sample});
        if (!parent) break;
        at = parent->from;
      }
      std::reverse(result.witness.begin(), result.witness.end());
      break;
    }
    // The self-loop on the topmost cell adds nothing to reachability.
    const RegState later = abs.time_successor(s);
    if (!(later == s)) visit(s, later, "tau");
    for (const auto& m : abs.discrete_successors(s))
      visit(s, m.target, edge_label(a, RegEdge{0, 0, m.transition}));
  }
  result.constructed_cells = abs.cad().constructed_cells();
  return result;
}

ReachResult reach(const PolITA& a, const std::vector<int>& targets) {
  RegionAbstraction abs(a);
  return reach(abs, targets);
}

namespace {

class Labeler {
 public:
  Labeler(RegionAbstraction& abs, const RegGraph& g) : abs_(abs), g_(g) {
    preds_.resize(g.states.size());
    for (std::size_t s = 0; s < g.states.size(); ++s) {
      succs_.push_back(g.successors(s));
      for (std::size_t t : succs_.back()) preds_[t].push_back(s);
    }
  }

  std::vector<bool> sat(const TctlPtr& f) {
    const std::size_t n = g_.states.size();
    switch (f->kind) {
      case TctlKind::True:
        return std::vector<bool>(n, true);
      case TctlKind::False:
        return std::vector<bool>(n, false);
      case TctlKind::Prop: {
        std::vector<bool> out(n);
        for (std::size_t s = 0; s < n; ++s) out[s] = abs_.proposition_holds(g_.states[s], f->prop);
        return out;
      }
      case TctlKind::Atom: {
        std::vector<bool> out(n);
        for (std::size_t s = 0; s < n; ++s) out[s] = abs_.constraint_holds(g_.states[s], f->atom);
        return out;
      }
      case TctlKind::Not: {
        auto out = sat(f->args[0]);
        out.flip();
        return out;
      }
      case TctlKind::And:
      case TctlKind::Or: {
        auto out = sat(f->args[0]);
        for (std::size_t i = 1; i < f->args.size(); ++i) {
          const auto other = sat(f->args[i]);
          for (std::size_t s = 0; s < n; ++s) out[s] = f->kind == TctlKind::And ? out[s] && other[s] : out[s] || other[s];
        }
        return out;
      }
      case TctlKind::ExistsUntil:
        return exists_until(sat(f->args[0]), sat(f->args[1]));
      case TctlKind::AllUntil:
        return all_until(sat(f->args[0]), sat(f->args[1]));
    }
    throw InternalError("sat: unknown formula kind");
  }

 private:
  std::vector<bool> exists_until(const std::vector<bool>& hold, std::vector<bool> goal) {
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < goal.size(); ++s)
      if (goal[s]) queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t p : preds_[u]) {
        if (goal[p] || !hold[p]) continue;
        goal[p] = true;
        queue.push_back(p);
      }
    }
    return goal;
  }

  std::vector<bool> all_until(const std::vector<bool>& hold, std::vector<bool> goal) {
    std::vector<std::size_t> pending(goal.size());
    for (std::size_t s = 0; s < goal.size(); ++s) pending[s] = succs_[s].size();
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < goal.size(); ++s)
      if (goal[s]) queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t p : preds_[u]) {
        if (goal[p]) continue;
        if (--pending[p] == 0 && hold[p]) {
          goal[p] = true;
          queue.push_back(p);
        }
      }
    }
    return goal;
  }

  RegionAbstraction& abs_;
  const RegGraph& g_;
  std::vector<std::vector<std::size_t>> succs_;
  std::vector<std::vector<std::size_t>> preds_;
};

void check_propositions(const PolITA& a, const TctlPtr& f) {
  if (f->kind == TctlKind::Prop && !a.find_state(f->prop) && f->prop != "final")
    throw DomainError("unknown proposition '" + f->prop + "'");
  for (const auto& g : f->args) check_propositions(a, g);
}

}  // namespace

CheckResult model_check(const PolITA& a, const TctlPtr& formula) {
  if (!well_scoped(formula, a.clocks)) throw DomainError("the formula uses a clock beyond x" + std::to_string(a.clocks));
  check_propositions(a, formula);
  RegionAbstraction abs(a, formula);
  const RegGraph g = build_region_graph(abs, true);
  Labeler labeler(abs, g);
  return {labeler.sat(formula)[g.initial], g.states.size()};
}

}  // namespace polita
