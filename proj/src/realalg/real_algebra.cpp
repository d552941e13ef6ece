#include "polita/real_algebra.hpp"

#include "polita/errors.hpp"
#include "polita/subresultant.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace polita {

// ============================================================================
// RootCoding
// ============================================================================

long RootCoding::root_count() const { return std::accumulate(counts.begin(), counts.end(), 0L); }

const ThomEncoding& RootCoding::root(long n) const {
  if (n < 1) throw DomainError("root index must be >= 1");
  long seen = 0;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    seen += counts[i];
    if (n <= seen) return codes[i];
  }
  throw DomainError("root index " + std::to_string(n) + " exceeds the number of real roots (" +
                    std::to_string(seen) + ")");
}

std::vector<ThomEncoding> RootCoding::expanded() const {
  std::vector<ThomEncoding> out;
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (long c = 0; c < counts[i]; ++c) out.push_back(codes[i]);
  return out;
}

// ============================================================================
// Sign realization
// ============================================================================

namespace {

// Incremental sign realization on the roots of P. Members are prepended one
// at a time (the family is processed from its last member to its first), and
// products and Tarski queries are cached by exponent vector over the suffix
// processed so far.
struct RealizationState {
  Poly p;
  int k = 0;
  std::vector<Poly> members;  // reduced modulo P, in processing order
  std::map<ExponentVector, Poly> products;
  std::map<ExponentVector, long> queries;
  std::vector<SignVector> sigma;
  std::vector<long> counts;
  std::vector<ExponentVector> adapted;
};

RealizationState start_realization(const Poly& p, int k, long total) {
  RealizationState s;
  s.p = p;
  s.k = k;
  s.products[{}] = Poly(1L);
  s.queries[{}] = total;
  s.sigma = {SignVector{}};
  s.counts = {total};
  s.adapted = {ExponentVector{}};
  return s;
}

const Poly& product_of(RealizationState& s, const ExponentVector& a) {
  auto it = s.products.find(a);
  if (it != s.products.end()) return it->second;
  Poly acc = product_of(s, ExponentVector(a.begin() + 1, a.end()));
  const Poly& member = s.members[a.size() - 1];
  for (int e = 0; e < a.front(); ++e) acc = int_rem(acc * member, s.p, s.k).remainder;
  return s.products.emplace(a, std::move(acc)).first->second;
}

long query_of(RealAlgebra& alg, const TriangularSystem& t, RealizationState& s, const ExponentVector& a) {
  auto it = s.queries.find(a);
  if (it != s.queries.end()) return it->second;
  const long v = alg.tarski_query(t, s.p, product_of(s, a));
  s.queries.emplace(a, v);
  return v;
}

void prepend_member(RealAlgebra& alg, const TriangularSystem& t, RealizationState& s, const Poly& reduced) {
  s.members.push_back(reduced);
  std::vector<SignVector> ext_sigma;
  for (int sg = -1; sg <= 1; ++sg) {
    for (const auto& sv : s.sigma) {
      SignVector v{sg};
      v.insert(v.end(), sv.begin(), sv.end());
      ext_sigma.push_back(std::move(v));
    }
  }
  std::vector<ExponentVector> ext_adapted;
  for (int e = 0; e <= 2; ++e) {
    for (const auto& a : s.adapted) {
      ExponentVector v{e};
      v.insert(v.end(), a.begin(), a.end());
      ext_adapted.push_back(std::move(v));
    }
  }
  const std::size_t n = ext_sigma.size();
  std::vector<std::vector<Integer>> mat(n, std::vector<Integer>(n));
  std::vector<Integer> rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) mat[r][c] = sign_matrix_entry(ext_adapted[r], ext_sigma[c]);
    rhs[r] = static_cast<long>(query_of(alg, t, s, ext_adapted[r]));
  }
  const auto solution = solve_exact(mat, rhs);

  std::vector<SignVector> next_sigma;
  std::vector<long> next_counts;
  std::map<SignVector, int> extensions;
  for (std::size_t c = 0; c < n; ++c) {
    const Rational& x = solution[c];
    if (sgn(x) == 0) continue;
    if (x.get_den() != 1 || sgn(x) < 0 || !x.get_num().fits_slong_p())
      throw InternalError("sign_realization: non-integral or negative root count");
    next_sigma.push_back(ext_sigma[c]);
    next_counts.push_back(x.get_num().get_si());
    ++extensions[SignVector(ext_sigma[c].begin() + 1, ext_sigma[c].end())];
  }

  std::vector<SignVector> twice;
  std::vector<SignVector> thrice;
  for (const auto& sv : s.sigma) {
    const int c = extensions.count(sv) ? extensions.at(sv) : 0;
    if (c >= 2) twice.push_back(sv);
    if (c >= 3) thrice.push_back(sv);
  }
  auto select = [](const std::vector<ExponentVector>& rows_from, const std::vector<SignVector>& cols) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& a : rows_from) {
      std::vector<Integer> row;
      for (const auto& sv : cols) row.emplace_back(sign_matrix_entry(a, sv));
      rows.push_back(std::move(row));
    }
    std::vector<ExponentVector> picked;
    for (auto idx : first_independent_rows(rows, cols.size())) picked.push_back(rows_from[idx]);
    return picked;
  };
  const auto adapted_two = select(s.adapted, twice);
  const auto adapted_three = select(adapted_two, thrice);

  std::vector<ExponentVector> next_adapted;
  const std::vector<ExponentVector>* blocks[3] = {&s.adapted, &adapted_two, &adapted_three};
  for (int e = 0; e <= 2; ++e) {
    for (const auto& a : *blocks[e]) {
      ExponentVector v{e};
      v.insert(v.end(), a.begin(), a.end());
      next_adapted.push_back(std::move(v));
    }
  }
  POLITA_ASSERT(next_adapted.size() == next_sigma.size(), "adapted family size mismatch");
  s.sigma = std::move(next_sigma);
  s.counts = std::move(next_counts);
  s.adapted = std::move(next_adapted);
}

}  // namespace

SignRealization RealAlgebra::sign_realization(const TriangularSystem& t, const Poly& p, std::span<const Poly> family) {
  const int k = t.level() + 1;
  auto [pn, pd] = normalize_at(t, p);
  if (pd == kMinusInfinity) throw DomainError("sign_realization: P vanishes identically at the point");

  SignRealization out;
  const long total = pd == 0 ? 0 : count_roots(t, pn);
  if (total == 0) return out;

  for (const auto& q : family)
    if (degree_at(t, q) == kMinusInfinity) throw DomainError("sign_realization: family member vanishes identically");

  RealizationState s = start_realization(pn, k, total);
  for (std::size_t i = family.size(); i-- > 0;) prepend_member(*this, t, s, int_rem(family[i], pn, k).remainder);

  out.conditions = std::move(s.sigma);
  out.counts = std::move(s.counts);
  out.adapted = std::move(s.adapted);
  return out;
}

// The realization of P', P'', ..., P^(d-1) on the roots of the defining
// polynomial P of the top level, and the derivative signs at the chosen root.
struct RealAlgebra::PointState {
  RealizationState derivatives;
  SignVector root_tail;
};

std::shared_ptr<const RealAlgebra::PointState> RealAlgebra::point_state(const TriangularSystem& system) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = point_cache_.find(system); it != point_cache_.end()) return it->second;
  }
  const int l = system.level();
  const TriangularEntry& entry = system.at_level(l);
  const TriangularSystem lower = system.prefix(l - 1);
  auto [defining, degree] = normalize_at(lower, entry.poly);
  if (degree < 1) throw DomainError("sign_at: defining polynomial at level " + std::to_string(l) + " has no roots");
  const long total = count_roots(lower, defining);
  if (total < entry.root_index)
    throw DomainError("sign_at: level " + std::to_string(l) + " asks for root " + std::to_string(entry.root_index) +
                      " of a polynomial with " + std::to_string(total) + " real roots");

  auto state = std::make_shared<PointState>();
  state->derivatives = start_realization(defining, l, total);
  std::vector<Poly> derivs;
  for (Poly d = defining.derivative(l); d.degree_in(l) >= 1; d = d.derivative(l)) derivs.push_back(d);
  for (std::size_t i = derivs.size(); i-- > 0;)
    prepend_member(*this, lower, state->derivatives, int_rem(derivs[i], defining, l).remainder);

  // By Thom's lemma the derivative signs (with the constant last derivative)
  // separate the roots; order them to find the chosen one.
  const int top_sign = defining.lcof_in(l).is_constant() ? sign(defining.lcof_in(l).constant_value())
                                                         : sign_at(lower, defining.lcof_in(l));
  std::vector<ThomEncoding> roots;
  for (std::size_t i = 0; i < state->derivatives.sigma.size(); ++i) {
    POLITA_ASSERT(state->derivatives.counts[i] == 1, "derivative signs do not separate the roots");
    ThomEncoding code{{0}};
    code.signs.insert(code.signs.end(), state->derivatives.sigma[i].begin(), state->derivatives.sigma[i].end());
    code.signs.push_back(top_sign);
    roots.push_back(std::move(code));
  }
  std::sort(roots.begin(), roots.end(),
            [](const ThomEncoding& a, const ThomEncoding& b) { return thom_compare(a, b) < 0; });
  const auto& chosen = roots[static_cast<std::size_t>(entry.root_index - 1)].signs;
  state->root_tail.assign(chosen.begin() + 1, chosen.end() - 1);

  std::unique_lock lock(mutex_);
  return point_cache_.emplace(system, std::move(state)).first->second;
}

// ============================================================================
// Signs, degrees and truncations at a point
// ============================================================================

int RealAlgebra::sign_at(const TriangularSystem& t, const Poly& p) {
  if (p.is_constant()) return sign(p.constant_value());
  const int l = p.main_var();
  if (l > t.level())
    throw DomainError("sign_at: polynomial mentions X" + std::to_string(l) + " but the point has level " +
                      std::to_string(t.level()));
  Key key{t.prefix(l), p};
  {
    std::shared_lock lock(mutex_);
    if (auto it = sign_cache_.find(key); it != sign_cache_.end()) return it->second;
  }

  const TriangularSystem lower = key.system.prefix(l - 1);
  const auto point = point_state(key.system);
  const RealizationState& base = point->derivatives;

  // Reducing modulo the defining polynomial keeps the sign at its roots.
  const Poly reduced = int_rem(p, base.p, l).remainder;
  auto [r, r_degree] = normalize_at(lower, reduced);
  int s = 0;
  if (r_degree == 0) {
    s = sign_at(lower, r);
  } else if (r_degree > 0) {
    RealizationState extended = base;
    prepend_member(*this, lower, extended, r);
    bool found = false;
    for (const auto& sv : extended.sigma) {
      if (std::equal(sv.begin() + 1, sv.end(), point->root_tail.begin(), point->root_tail.end())) {
        s = sv.front();
        found = true;
        break;
      }
    }
    POLITA_ASSERT(found, "no sign condition matches the chosen root");
  }

  std::unique_lock lock(mutex_);
  sign_cache_.emplace(std::move(key), s);
  return s;
}

Degree RealAlgebra::degree_at(const TriangularSystem& t, const Poly& p) {
  const auto coeffs = p.coeffs_in(t.level() + 1);
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (sign_at(t, coeffs[i]) != 0) return static_cast<Degree>(i);
  return kMinusInfinity;
}

std::pair<Poly, Degree> RealAlgebra::normalize_at(const TriangularSystem& t, const Poly& p) {
  const int k = t.level() + 1;
  auto coeffs = p.coeffs_in(k);
  const Degree d = degree_at(t, p);
  if (d == kMinusInfinity) return {Poly(), kMinusInfinity};
  if (static_cast<std::size_t>(d) + 1 == coeffs.size()) return {p, d};
  coeffs.resize(static_cast<std::size_t>(d) + 1);
  return {Poly::from_coeffs(k, std::move(coeffs)), d};
}

// ============================================================================
// Cauchy index and Tarski queries
// ============================================================================

int RealAlgebra::pmv_at(const TriangularSystem& t, const Poly& p, const Poly& q) {
  const int k = t.level() + 1;
  auto [pn, pd] = normalize_at(t, p);
  auto [qn, qd] = normalize_at(t, q);
  if (qd == kMinusInfinity) return 0;
  if (pd <= qd) throw DomainError("pmv_at: requires deg P > deg Q at the point");
  const auto seq = subresultants(pn, qn, k);
  std::vector<int> signs;
  signs.reserve(seq.coefficients.size());
  for (std::size_t j = seq.coefficients.size(); j-- > 0;) signs.push_back(sign_at(t, seq.coefficients[j]));
  return pmv(signs);
}

int RealAlgebra::tarski_query(const TriangularSystem& t, const Poly& p, const Poly& q) {
  const int k = t.level() + 1;
  auto [pn, pd] = normalize_at(t, p);
  if (pd == kMinusInfinity) throw DomainError("tarski_query: P vanishes identically at the point");
  if (pd == 0) return 0;
  const Poly r = int_rem(pn.derivative(k) * q, pn, k).remainder;
  return pmv_at(t, pn, r);
}

long RealAlgebra::count_roots(const TriangularSystem& t, const Poly& p) { return tarski_query(t, p, Poly(1L)); }

// ============================================================================
// Root coding
// ============================================================================

RootCoding RealAlgebra::root_coding(const TriangularSystem& t, const Poly& p, const Poly& q) {
  const int k = t.level() + 1;
  auto [pn, pd] = normalize_at(t, p);
  if (pd == kMinusInfinity) throw DomainError("root_coding: P vanishes identically at the point");
  RootCoding out;
  if (pd == 0) return out;
  auto [qn, qd] = normalize_at(t, q);
  if (qd == kMinusInfinity) throw DomainError("root_coding: Q vanishes identically at the point");

  std::vector<Poly> derivatives{qn};
  for (Degree i = 0; i < qd; ++i) derivatives.push_back(derivatives.back().derivative(k));
  const auto realization = sign_realization(t, pn, derivatives);

  std::vector<std::size_t> order(realization.conditions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return thom_compare(ThomEncoding{realization.conditions[a]}, ThomEncoding{realization.conditions[b]}) < 0;
  });
  for (auto i : order) {
    out.codes.push_back(ThomEncoding{realization.conditions[i]});
    out.counts.push_back(realization.counts[i]);
  }
  return out;
}

bool RealAlgebra::is_triangular(const TriangularSystem& t) {
  for (int i = 1; i <= t.level(); ++i) {
    const TriangularEntry& e = t.at_level(i);
    if (e.poly.main_var() != i || e.degree < 1 || e.root_index < 1) return false;
    if (e.poly.degree_in(i) != e.degree) return false;
    const TriangularSystem lower = t.prefix(i - 1);
    if (degree_at(lower, e.poly) != e.degree) return false;
    if (count_roots(lower, e.poly) < e.root_index) return false;
  }
  return true;
}

std::size_t RealAlgebra::cache_size() const {
  std::shared_lock lock(mutex_);
  return sign_cache_.size();
}

}  // namespace polita
