#pragma once

#include "polita/poly.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace polita {

// Where a polynomial lives in a family: level, position, and the sign of the
// rational factor c with polynomial = c * member.
struct FamilyRef {
  int level = 0;
  int index = 0;
  int scale_sign = 1;

  friend bool operator==(const FamilyRef&, const FamilyRef&) = default;
};

// Polynomials sorted by level (level i holds members with main variable X_i),
// insertion-ordered, and deduplicated up to a nonzero rational factor. Each
// member is stored divided by its positive content.
class PolyFamily {
 public:
  explicit PolyFamily(int dimension = 0);

  int dimension() const { return static_cast<int>(levels_.size()); }
  const std::vector<Poly>& level(int i) const { return levels_.at(static_cast<std::size_t>(i - 1)); }
  std::size_t total_size() const;

  // Inserts p at level main_var(p). Constants are ignored (std::nullopt).
  // Throws DomainError when main_var(p) exceeds the dimension.
  std::optional<FamilyRef> insert(const Poly& p);
  // Inserts p at an explicit level >= main_var(p).
  std::optional<FamilyRef> insert_at(int level, const Poly& p);

  std::optional<FamilyRef> find(const Poly& p) const;

 private:
  std::vector<std::vector<Poly>> levels_;
  std::vector<std::unordered_map<Poly, int, PolyHash>> index_;
};

// Truncations of p in X_k, highest first, stopping after the first one whose
// leading coefficient is a nonzero constant.
std::vector<Poly> truncations(const Poly& p, int k);

// The projection operator: leading coefficients of truncations, subresultants
// of truncations with their derivatives and with truncations of other members.
// Every input must lie in Q[X1..X_k]. Output: non-constant polynomials in
// Q[X1..X_{k-1}], deduplicated up to a nonzero rational factor.
std::vector<Poly> eliminate(int k, const std::vector<Poly>& polys);

// Completes a family downwards: level n is kept, and level i-1 becomes the
// given level i-1 followed by the projection of the completed level i.
PolyFamily eliminate_all(const PolyFamily& family);

}  // namespace polita
