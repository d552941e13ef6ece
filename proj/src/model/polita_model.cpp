#include "polita/model.hpp"

#include "polita/errors.hpp"

#include <algorithm>
#include <set>

namespace polita {

Relation parse_relation(std::string_view text) {
  if (text == "<") return Relation::Less;
  if (text == "<=") return Relation::LessEq;
  if (text == "=" || text == "==") return Relation::Equal;
  if (text == ">=") return Relation::GreaterEq;
  if (text == ">") return Relation::Greater;
  throw ParseError("unknown relation '" + std::string(text) + "'");
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Less:
      return "<";
    case Relation::LessEq:
      return "<=";
    case Relation::Equal:
      return "=";
    case Relation::GreaterEq:
      return ">=";
    case Relation::Greater:
      return ">";
  }
  return "?";
}

bool holds(Relation r, int sign) {
  switch (r) {
    case Relation::Less:
      return sign < 0;
    case Relation::LessEq:
      return sign <= 0;
    case Relation::Equal:
      return sign == 0;
    case Relation::GreaterEq:
      return sign >= 0;
    case Relation::Greater:
      return sign > 0;
  }
  return false;
}

std::optional<int> PolITA::find_state(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<std::size_t> PolITA::outgoing(int state) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < transitions.size(); ++i)
    if (transitions[i].source == state) out.push_back(i);
  return out;
}

std::vector<std::string> PolITA::alphabet() const {
  std::set<std::string> labels;
  for (const auto& t : transitions)
    if (t.label != kSilent) labels.insert(t.label);
  return {labels.begin(), labels.end()};
}

std::vector<Poly> effective_update(const PolITA& a, const Transition& t) {
  const int k = a.level(t.source);
  const int k2 = a.level(t.target);
  std::vector<Poly> out;
  for (int i = 1; i <= a.clocks; ++i) {
    const bool kept = k > k2 ? i <= k2 : i <= k;
    out.push_back(kept ? Poly::variable(i) : Poly());
  }
  if (k <= k2) {
    if (auto it = t.assignments.find(k); it != t.assignments.end()) out[static_cast<std::size_t>(k - 1)] = it->second;
  }
  return out;
}

namespace {

std::string describe(const PolITA& a, std::size_t index) {
  const Transition& t = a.transitions[index];
  auto name = [&](int s) {
    return s >= 0 && s < static_cast<int>(a.states.size()) ? a.states[static_cast<std::size_t>(s)].name : "?";
  };
  return "transition " + std::to_string(index) + " (" + name(t.source) + " -> " + name(t.target) +
         (t.label.empty() ? ", silent" : ", " + t.label) + ")";
}

bool mentions_above(const Poly& p, int level) { return p.main_var() > level; }

}  // namespace

std::vector<std::string> validate(const PolITA& a) {
  std::vector<std::string> issues;
  if (a.clocks < 1) issues.push_back("the automaton needs at least one clock");
  if (a.states.empty()) issues.push_back("the automaton has no states");
  std::set<std::string> names;
  for (const auto& s : a.states) {
    if (!names.insert(s.name).second) issues.push_back("duplicate state name '" + s.name + "'");
    if (s.level < 1 || s.level > a.clocks)
      issues.push_back("state '" + s.name + "' has level " + std::to_string(s.level) + " outside 1.." +
                       std::to_string(a.clocks));
  }
  const int count = static_cast<int>(a.states.size());
  if (!a.states.empty() && (a.initial < 0 || a.initial >= count)) issues.push_back("the initial state is undefined");
  if (!issues.empty()) return issues;

  for (std::size_t i = 0; i < a.transitions.size(); ++i) {
    const Transition& t = a.transitions[i];
    const std::string where = describe(a, i);
    if (t.source < 0 || t.source >= count || t.target < 0 || t.target >= count) {
      issues.push_back(where + ": unknown state");
      continue;
    }
    const int k = a.level(t.source);
    const int k2 = a.level(t.target);
    for (const auto& c : t.guard)
      if (mentions_above(c.poly, k))
        issues.push_back(where + ": guard '" + c.poly.to_string() + " " + to_string(c.rel) +
                         " 0' uses a clock above the source level " + std::to_string(k));
    for (const auto& [clock, rhs] : t.assignments) {
      if (clock < 1 || clock > a.clocks) {
        issues.push_back(where + ": unknown clock x" + std::to_string(clock));
        continue;
      }
      const Poly self = Poly::variable(clock);
      const std::string assignment = "x" + std::to_string(clock) + " := " + rhs.to_string();
      if (k > k2) {
        if (clock <= k2 && rhs != self)
          issues.push_back(where + ": " + assignment + " but a level-decreasing transition keeps x" +
                           std::to_string(clock));
        if (clock > k2 && !rhs.is_zero())
          issues.push_back(where + ": " + assignment + " but a level-decreasing transition resets x" +
                           std::to_string(clock));
      } else if (clock < k) {
        if (rhs != self) issues.push_back(where + ": " + assignment + " but clocks below the source level are kept");
      } else if (clock == k) {
        if (rhs != self && mentions_above(rhs, k - 1))
          issues.push_back(where + ": " + assignment + " but the active clock may only receive " +
                           (k == 1 ? std::string("a constant") : "a polynomial in x1..x" + std::to_string(k - 1)));
      } else if (!rhs.is_zero()) {
        issues.push_back(where + ": " + assignment + " but clocks above the source level are reset");
      }
    }
  }
  return issues;
}

}  // namespace polita
