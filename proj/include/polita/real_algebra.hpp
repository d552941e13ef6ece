#pragma once

#include "polita/linear.hpp"
#include "polita/poly.hpp"
#include "polita/thom.hpp"
#include "polita/triangular.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polita {

// Realizable sign conditions of a family on the real roots of some polynomial,
// with the number of roots realizing each. `adapted` is the exponent family
// used for the last solve; it has one entry per condition.
struct SignRealization {
  std::vector<SignVector> conditions;
  std::vector<long> counts;
  std::vector<ExponentVector> adapted;
};

// Thom encodings of the distinct real roots of P with respect to Q, in
// increasing root order. Roots sharing an encoding are grouped; `counts` says
// how many consecutive roots each group covers.
struct RootCoding {
  std::vector<ThomEncoding> codes;
  std::vector<long> counts;

  long root_count() const;
  // Encoding of the n-th root (1-based). Throws DomainError when out of range.
  const ThomEncoding& root(long n) const;
  // Encodings of all roots in order, one per root.
  std::vector<ThomEncoding> expanded() const;
};

// Sign determination over real algebraic points given by triangular systems.
//
// All "univariate at T" operations read their polynomial arguments in
// X_{l+1} over Q[X1..X_l], where l = T.level(). Signs of polynomials at
// points are memoized; the cache is safe for concurrent readers and
// serializes writers.
class RealAlgebra {
 public:
  // Sign of P (in Q[X1..X_l]) at the point encoded by T.
  int sign_at(const TriangularSystem& t, const Poly& p);

  // Degree of P(alpha, X_{l+1}); kMinusInfinity when it vanishes identically.
  Degree degree_at(const TriangularSystem& t, const Poly& p);

  // The truncation of P whose leading coefficient is nonzero at T, with its degree.
  std::pair<Poly, Degree> normalize_at(const TriangularSystem& t, const Poly& p);

  // PmV of the principal subresultant signs of P and Q at T. Requires deg P > deg Q at T.
  int pmv_at(const TriangularSystem& t, const Poly& p, const Poly& q);

  // Tarski query: sum over the real roots x of P of sign Q(x).
  int tarski_query(const TriangularSystem& t, const Poly& p, const Poly& q);

  // Number of distinct real roots of P at T.
  long count_roots(const TriangularSystem& t, const Poly& p);

  // Nonempty sign conditions realized by `family` on the real roots of P.
  // Family members must not vanish identically at T.
  SignRealization sign_realization(const TriangularSystem& t, const Poly& p, std::span<const Poly> family);

  // Thom encodings of the roots of P with respect to Q and its derivatives.
  RootCoding root_coding(const TriangularSystem& t, const Poly& p, const Poly& q);

  // Checks the triangular-system invariants level by level.
  bool is_triangular(const TriangularSystem& t);

  std::size_t cache_size() const;

 private:
  struct Key {
    TriangularSystem system;
    Poly poly;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.system.hash() * 31 + k.poly.hash(); }
  };

  struct TriangularHash {
    std::size_t operator()(const TriangularSystem& t) const { return t.hash(); }
  };

  // Sign realization of the derivatives of a level's defining polynomial,
  // kept per point so that each new sign costs one extra realization step.
  struct PointState;
  std::shared_ptr<const PointState> point_state(const TriangularSystem& system);

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, int, KeyHash> sign_cache_;
  std::unordered_map<TriangularSystem, std::shared_ptr<const PointState>, TriangularHash> point_cache_;
};

}  // namespace polita
