#pragma once

#include "polita/poly.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polita {

// ============================================================================
// Automata
// ============================================================================

enum class Relation { Less, LessEq, Equal, GreaterEq, Greater };

// "<", "<=", "=", ">=", ">" (also "==" on input). Throws ParseError.
Relation parse_relation(std::string_view text);
std::string to_string(Relation r);
// Whether a value of the given sign satisfies "value rel 0".
bool holds(Relation r, int sign);

// poly rel 0.
struct Constraint {
  Poly poly;
  Relation rel = Relation::Equal;
};

// A conjunction; empty means true.
using Guard = std::vector<Constraint>;

// The label of silent transitions.
inline constexpr std::string_view kSilent = "";

struct Transition {
  int source = 0;
  int target = 0;
  std::string label;  // kSilent for an epsilon move
  Guard guard;
  // Explicit assignments clock -> right-hand side. Clocks not listed follow
  // the default for the level change (see effective_update).
  std::map<int, Poly> assignments;
};

struct State {
  std::string name;
  int level = 1;
  bool final = false;
};

// Polynomial interrupt timed automaton over clocks x1..x_clocks.
struct PolITA {
  int clocks = 1;
  std::vector<State> states;
  int initial = 0;
  std::vector<Transition> transitions;

  int level(int state) const { return states.at(static_cast<std::size_t>(state)).level; }
  std::optional<int> find_state(std::string_view name) const;
  // Transitions leaving the given state, as indices into `transitions`.
  std::vector<std::size_t> outgoing(int state) const;
  // Labels of non-silent transitions, sorted and deduplicated.
  std::vector<std::string> alphabet() const;
};

// Right-hand sides for x1..x_n, 0-based. For a transition from level k to
// level k2: when k > k2, x_i is kept for i <= k2 and reset otherwise; when
// k <= k2, x_i is kept for i < k, x_k is the explicit assignment or kept, and
// higher clocks are reset.
std::vector<Poly> effective_update(const PolITA& a, const Transition& t);

// Rule violations, one message per issue naming the transition and the rule.
// Empty when the automaton is well formed.
std::vector<std::string> validate(const PolITA& a);

// JSON model file:
//   { "clocks": 2,
//     "states": [{"name": "q0", "level": 1, "initial": true, "final": false}, ...],
//     "transitions": [{"from": "q0", "to": "q1", "label": "a",
//                      "guard": [{"poly": "x1^2 - x1 - 1", "rel": "<="}],
//                      "update": {"x2": "0"}}, ...] }
// A guard entry may also give "lhs" and "rhs" instead of "poly" for lhs - rhs.
// A missing or empty label marks a silent transition.
// Throws ParseError on malformed input and ValidationError (listing every
// issue) on unknown names or rule violations.
PolITA parse_model(std::string_view json_text);
PolITA load_model(const std::string& path);
std::string model_to_json(const PolITA& a);

// ============================================================================
// Concrete semantics over rational valuations
// ============================================================================

struct Configuration {
  int state = 0;
  std::vector<Rational> valuation;  // x1..x_n

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

Configuration initial_configuration(const PolITA& a);

// Lets d >= 0 time units elapse on the active clock. Throws DomainError when d < 0.
Configuration time_step(const PolITA& a, const Configuration& c, const Rational& d);

// Simultaneous assignment: every right-hand side reads the old valuation.
std::vector<Rational> apply_update(const std::vector<Poly>& update, const std::vector<Rational>& valuation);

// Outcome of trying a transition: the successor, or the index of the first
// guard conjunct that fails.
struct DiscreteOutcome {
  std::optional<Configuration> next;
  std::optional<std::size_t> failed_conjunct;

  bool fired() const { return next.has_value(); }
};

// Requires the transition to leave c.state (DomainError otherwise).
DiscreteOutcome discrete_step(const PolITA& a, const Configuration& c, std::size_t transition);

bool satisfies(const Guard& g, const std::vector<Rational>& valuation);

struct TimedLetter {
  std::string label;
  Rational time;  // absolute

  friend bool operator==(const TimedLetter&, const TimedLetter&) = default;
};

// "(a,6/5)(b,23/10)" or "(a,1.2) (b,2.3)"; the empty string is the empty word.
std::vector<TimedLetter> parse_timed_word(std::string_view text);
std::string to_string(const std::vector<TimedLetter>& word);

struct SimulationOptions {
  std::size_t max_expansions = 10000;
};

struct SimulationResult {
  bool accepted = false;
  bool truncated = false;  // the expansion bound was hit before a verdict
  std::size_t expansions = 0;
  // An accepting run as the configurations after each step (empty if rejected).
  std::vector<Configuration> run;
};

// Searches for a run reading the word and ending in a final state. Silent
// transitions may be taken any number of times at the instants of the
// letters (and at time 0); configurations are memoized per word position.
// Throws DomainError when the times decrease or start below 0.
SimulationResult run_timed_word(const PolITA& a, const std::vector<TimedLetter>& word,
                                const SimulationOptions& options = {});

}  // namespace polita
