#pragma once

#include "polita/poly.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace polita {

// First-order formulas over the reals. Atoms are P < 0 or P = 0; the other
// comparisons are expressed with Not and Or when parsed. Bound variables are
// identified by index: the polynomial variable X_i is the variable bound by
// the quantifier carrying index i.
struct FoFormula;
using FoPtr = std::shared_ptr<const FoFormula>;

enum class FoKind { True, False, Less, Equal, Not, And, Or, Exists, Forall };

struct FoFormula {
  FoKind kind = FoKind::True;
  Poly poly;                // Less / Equal: poly < 0 or poly = 0
  int var = 0;              // Exists / Forall
  std::vector<FoPtr> args;  // Not: 1, And / Or: 2 or more, quantifiers: the body

  static FoPtr constant(bool value);
  static FoPtr less(Poly p);
  static FoPtr equal(Poly p);
  static FoPtr negation(FoPtr f);
  static FoPtr conjunction(std::vector<FoPtr> fs);
  static FoPtr disjunction(std::vector<FoPtr> fs);
  static FoPtr quantified(FoKind q, int var, FoPtr body);

  bool is_quantifier() const { return kind == FoKind::Exists || kind == FoKind::Forall; }
};

// "P rel Q" as a boolean combination of primitive atoms, for rel in
// < <= = == > >= != (also <> for inequality).
FoPtr comparison(const Poly& lhs, std::string_view rel, const Poly& rhs);

// Parses a closed sentence. Grammar, loosest binding first:
//   formula  := ("exists" | "forall") name+ "." formula | implies
//   implies  := or ("->" implies)?
//   or       := and (("or" | "||") and)*
//   and      := unary (("and" | "&&") unary)*
//   unary    := ("not" | "!") unary | "true" | "false" | "(" formula ")" | expr rel expr
// Each quantifier gets a fresh index in textual order, so nested or repeated
// names are renamed apart. Free variables are rejected with ParseError.
FoPtr parse_sentence(std::string_view text);

// True when every variable of every atom is bound by an enclosing quantifier.
bool is_sentence(const FoPtr& f);

// Equivalent prenex form Q1 X1 ... Qn Xn matrix, with the quantifier indices
// renumbered 1..n in prefix order. Negation over a quantifier flips it.
// Requires distinct quantifier indices (as produced by parse_sentence).
FoPtr to_prenex(const FoPtr& f);

bool is_prenex(const FoPtr& f);

std::string to_string(const FoPtr& f);

}  // namespace polita
