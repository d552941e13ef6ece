#pragma once

#include "polita/model.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace polita {

struct TctlFormula;
using TctlPtr = std::shared_ptr<const TctlFormula>;

enum class TctlKind { True, False, Prop, Atom, Not, And, Or, ExistsUntil, AllUntil };

// Branching-time formulas over automaton states and clock constraints.
// EF, AF, EG, AG, implication and disequality are expanded while parsing.
struct TctlFormula {
  TctlKind kind = TctlKind::True;
  std::string prop;         // Prop: a state name, or "final" for the final states
  Constraint atom;          // Atom: poly rel 0
  std::vector<TctlPtr> args;  // Not: 1; And / Or: 2 or more; E[a U b] / A[a U b]: {a, b}

  static TctlPtr constant(bool value);
  static TctlPtr proposition(std::string name);
  static TctlPtr constraint(Constraint c);
  static TctlPtr negation(TctlPtr f);
  static TctlPtr conjunction(std::vector<TctlPtr> fs);
  static TctlPtr disjunction(std::vector<TctlPtr> fs);
  static TctlPtr exists_until(TctlPtr hold, TctlPtr goal);
  static TctlPtr all_until(TctlPtr hold, TctlPtr goal);
};

// Derived operators.
TctlPtr exists_finally(TctlPtr f);
TctlPtr all_finally(TctlPtr f);
TctlPtr exists_globally(TctlPtr f);
TctlPtr all_globally(TctlPtr f);

// Grammar, loosest binding first:
//   formula := or ("->" formula)?
//   or      := and ("or" and)*
//   and     := unary ("and" unary)*
//   unary   := ("not" | "!") unary | ("EF" | "AF" | "EG" | "AG") unary
//            | ("E" | "A") "[" formula "U" formula "]"
//            | "true" | "false" | "(" formula ")" | expr rel expr | name
// Clocks are x1, x2, ...; rel is one of < <= = == >= > !=. Any other
// identifier is an atomic proposition. Throws ParseError.
TctlPtr parse_tctl(std::string_view text);

std::string to_string(const TctlPtr& f);

// Every clock in an atom is among x1..x_clocks.
bool well_scoped(const TctlPtr& f, int clocks);

// The polynomials of the clock constraints, in order of appearance.
std::vector<Poly> atom_polynomials(const TctlPtr& f);

}  // namespace polita
