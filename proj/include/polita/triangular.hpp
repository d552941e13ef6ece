#pragma once

#include "polita/poly.hpp"

#include <string>
#include <vector>

namespace polita {

// One coordinate of a real algebraic point: the root_index-th real root
// (1-based, increasing order) of poly, read in X_i over the earlier coordinates.
// degree is the degree of poly in X_i at the earlier coordinates.
struct TriangularEntry {
  int root_index = 1;
  Poly poly;
  Degree degree = 0;

  friend bool operator==(const TriangularEntry&, const TriangularEntry&) = default;
};

// Exact encoding of a point (alpha_1, ..., alpha_l) of R^l, one entry per level.
class TriangularSystem {
 public:
  TriangularSystem() = default;
  explicit TriangularSystem(std::vector<TriangularEntry> entries) : entries_(std::move(entries)) {}

  int level() const { return static_cast<int>(entries_.size()); }
  const std::vector<TriangularEntry>& entries() const { return entries_; }
  const TriangularEntry& at_level(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }

  // The first l entries (l <= level()).
  TriangularSystem prefix(int l) const;
  TriangularSystem extended(TriangularEntry e) const;

  // A rational point as a system of linear entries (1, X_i - q_i, 1).
  static TriangularSystem from_rational_point(const std::vector<Rational>& point);

  std::size_t hash() const;
  // "(2, x1^2 - x1 - 1, 2) (1, x2 - 1, 1)"; "()" at level 0.
  std::string to_string() const;

  friend bool operator==(const TriangularSystem&, const TriangularSystem&) = default;

 private:
  std::vector<TriangularEntry> entries_;
};

}  // namespace polita
