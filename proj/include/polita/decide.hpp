#pragma once

#include "polita/formula.hpp"

#include <cstddef>

namespace polita {

struct DecideStats {
  std::size_t family_size = 0;  // after elimination
  std::size_t cells = 0;        // CAD cells constructed
};

// Truth value over R of a closed sentence. The matrix polynomials are sorted
// into levels by their highest variable, the family is completed by
// elimination, and the quantifiers are evaluated over the lazily lifted CAD:
// an existential is a disjunction over the children of a cell, a universal a
// conjunction. Evaluation stops at the first witness or counterexample.
bool decide(const FoPtr& sentence, DecideStats* stats = nullptr);

}  // namespace polita
