#pragma once

// Independent reference implementations used to cross-check the library.

#include "polita/poly.hpp"
#include "polita/thom.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace polita::oracles {

// Laplace expansion along the first row.
inline Poly laplace_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(1L);
  if (n == 1) return m[0][0];
  Poly acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][c] * laplace_det(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Sylvester-Habicht matrix built straight from its definition.
inline Poly syha_oracle(const Poly& p, const Poly& q, int j, int k) {
  const int dp = p.degree_in(k);
  const int dq = q.degree_in(k);
  const int size = dp + dq - 2 * j;
  std::vector<std::vector<Poly>> rows;
  auto row = [&](const Poly& f, int shift) {
    std::vector<Poly> r;
    for (int col = 0; col < size; ++col) {
      const int deg = dp + dq - j - 1 - col - shift;
      r.push_back(deg >= 0 ? f.coeff_in(k, deg) : Poly());
    }
    return r;
  };
  for (int e = dq - j - 1; e >= 0; --e) rows.push_back(row(p, e));
  for (int e = 0; e <= dp - j - 1; ++e) rows.push_back(row(q, e));
  return laplace_det(rows);
}

// Generalized permanences minus variations written as a plain recursion.
inline int pmv_oracle(std::vector<int> s) {
  std::size_t q = 1;
  while (q < s.size() && s[q] == 0) ++q;
  if (q >= s.size()) return 0;
  const int gap = static_cast<int>(q);
  int here = 0;
  if (gap % 2 == 1) {
    const int eps = ((gap * (gap - 1) / 2) % 2 == 0) ? 1 : -1;
    here = eps * s[0] * s[q];
  }
  return here + pmv_oracle(std::vector<int>(s.begin() + static_cast<long>(q), s.end()));
}

inline Poly from_roots(const std::vector<Rational>& roots, int k) {
  Poly acc(1L);
  for (const auto& r : roots) acc *= Poly::variable(k) - Poly(r);
  return acc;
}

// An element a + b*sqrt(c) of Q(sqrt c), c a positive non-square.
struct QuadraticNumber {
  Rational a, b, c;
};

inline int exact_sign(const QuadraticNumber& x) {
  const int sa = sign(x.a);
  const int sb = sign(x.b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational lhs = x.a * x.a;
  const Rational rhs = x.b * x.b * x.c;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

// Evaluates a univariate polynomial (in X_var) at s*sqrt(c) exactly.
inline QuadraticNumber eval_at_sqrt(const Poly& p, int var, const Rational& c, int s) {
  QuadraticNumber acc{0, 0, c};
  const auto cs = p.coeffs_in(var);
  for (std::size_t i = cs.size(); i-- > 0;) {
    // acc * (s sqrt c) + coefficient
    QuadraticNumber next{acc.b * c * s, acc.a * s, c};
    next.a += cs[i].constant_value();
    acc = next;
  }
  return acc;
}

// Square root of a positive rational by bisection.
inline long double bisect_sqrt(const Rational& c) {
  long double lo = 0, hi = std::max<long double>(1, c.get_d());
  for (int i = 0; i < 200; ++i) {
    long double mid = (lo + hi) / 2;
    (mid * mid < c.get_d() ? lo : hi) = mid;
  }
  return lo;
}

// A real root known exactly: rational r, or s*sqrt(c).
struct KnownRoot {
  bool rational;
  Rational r;
  Rational c;
  int s;
  long double value;
};

inline int exact_sign_at(const Poly& q, const KnownRoot& z) {
  if (z.rational) {
    const std::vector<Rational> pt{z.r};
    return sign(q.evaluate(pt));
  }
  return exact_sign(eval_at_sqrt(q, 1, z.c, z.s));
}

inline ThomEncoding oracle_encoding(const Poly& q, const KnownRoot& z) {
  ThomEncoding e;
  Poly d = q;
  const int deg = q.degree_in(1);
  for (int i = 0; i <= deg; ++i) {
    e.signs.push_back(exact_sign_at(d, z));
    d = d.derivative(1);
  }
  return e;
}

// Random product of linear factors and quadratics X^2 - c / X^2 + c, with its real roots.
inline Poly random_factored(std::mt19937& rng, int max_degree, std::vector<KnownRoot>& roots) {
  static const int kNonSquares[] = {2, 3, 5, 6, 7};
  std::uniform_int_distribution<int> kind(0, 2), num(-6, 6), den(1, 3), pick(0, 4);
  Poly acc(1L);
  int degree = 0;
  while (degree < max_degree) {
    const int k = kind(rng);
    if (k == 0 || degree + 2 > max_degree) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      acc *= Poly::variable(1) - Poly(r);
      roots.push_back({true, r, 0, 0, static_cast<long double>(r.get_d())});
      degree += 1;
    } else if (k == 1) {
      Rational c(kNonSquares[pick(rng)]);
      acc *= Poly::variable(1) * Poly::variable(1) - Poly(c);
      const long double sq = bisect_sqrt(c);
      roots.push_back({false, 0, c, 1, sq});
      roots.push_back({false, 0, c, -1, -sq});
      degree += 2;
    } else {
      acc *= Poly::variable(1) * Poly::variable(1) + Poly(Rational(den(rng)));
      degree += 2;
    }
    if (kind(rng) == 0) break;
  }
  // Deduplicate roots that coincide.
  std::sort(roots.begin(), roots.end(), [](const KnownRoot& a, const KnownRoot& b) { return a.value < b.value; });
  std::vector<KnownRoot> unique;
  for (const auto& z : roots) {
    bool dup = false;
    for (const auto& u : unique) dup = dup || (u.rational == z.rational && u.r == z.r && u.c == z.c && u.s == z.s);
    if (!dup) unique.push_back(z);
  }
  roots = unique;
  return acc;
}


// Determinant over Q by Gaussian elimination with row swaps.
inline Rational rational_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
    }
  }
  return det;
}

// Sylvester-Habicht determinant of index j for univariate rational polynomials (coefficients low to high).
inline Rational syha_rational(const std::vector<Rational>& p, const std::vector<Rational>& q, int j) {
  const int dp = static_cast<int>(p.size()) - 1;
  const int dq = static_cast<int>(q.size()) - 1;
  const int size = dp + dq - 2 * j;
  std::vector<std::vector<Rational>> rows;
  auto row = [&](const std::vector<Rational>& f, int shift) {
    std::vector<Rational> r;
    for (int col = 0; col < size; ++col) {
      const int deg = dp + dq - j - 1 - col - shift;
      r.push_back(deg >= 0 && deg < static_cast<int>(f.size()) ? f[static_cast<std::size_t>(deg)] : Rational(0));
    }
    return r;
  };
  for (int e = dq - j - 1; e >= 0; --e) rows.push_back(row(p, e));
  for (int e = 0; e <= dp - j - 1; ++e) rows.push_back(row(q, e));
  return rational_det(rows);
}

// ---------------------------------------------------------------------------
// Univariate real root isolation over Q with Sturm sequences and bisection.
// ---------------------------------------------------------------------------

using Dense = std::vector<Rational>;  // coefficients, low degree first

inline void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Dense to_dense(const Poly& p) {
  Dense out;
  for (const auto& c : p.coeffs_in(1)) out.push_back(c.constant_value());
  trim(out);
  return out;
}

inline Rational eval(const Dense& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

inline Dense derivative(const Dense& p) {
  Dense out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
  return out;
}

inline Dense remainder(Dense a, const Dense& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

inline Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Dense quotient(Dense a, const Dense& b) {
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return q;
}

inline Dense squarefree(const Dense& p) {
  const Dense g = gcd(p, derivative(p));
  return g.size() <= 1 ? p : quotient(p, g);
}

inline int sign_changes(const std::vector<Dense>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& f : seq) {
    const int s = sign(eval(f, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Isolating intervals (a, b) with rational endpoints that are not roots, one per real root of p.
inline std::vector<std::pair<Rational, Rational>> isolate_roots(const Dense& p_in) {
  Dense p = p_in;
  trim(p);
  std::vector<std::pair<Rational, Rational>> out;
  if (p.size() <= 1) return out;
  p = squarefree(p);
  std::vector<Dense> sturm{p, derivative(p)};
  while (true) {
    Dense r = remainder(sturm[sturm.size() - 2], sturm.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    sturm.push_back(std::move(r));
  }
  Rational bound(1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational ratio = p[i] / p.back();
    if (ratio < 0) ratio = -ratio;
    bound += ratio;
  }
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const int count = sign_changes(sturm, a) - sign_changes(sturm, b);
    if (count == 0) continue;
    if (count == 1 && eval(p, a) != 0 && eval(p, b) != 0) {
      out.push_back({a, b});
      continue;
    }
    Rational mid = (a + b) / 2;
    // Keep endpoints off the roots.
    while (eval(p, mid) == 0) mid = (mid + b) / 2;
    work.push_back({a, mid});
    work.push_back({mid, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Truth of "exists x . conjunction of p_i rel_i 0" where rel is -1 (<), 0 (=), 1 (>),
// 2 (<=), 3 (>=), 4 (!=), decided by checking the sign of every p_i on each root and gap.
inline bool exists_univariate(const std::vector<Dense>& polys, const std::vector<int>& rels) {
  auto holds = [&](const std::vector<int>& signs) {
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const int s = signs[i];
      bool ok = false;
      switch (rels[i]) {
        case -1: ok = s < 0; break;
        case 0: ok = s == 0; break;
        case 1: ok = s > 0; break;
        case 2: ok = s <= 0; break;
        case 3: ok = s >= 0; break;
        default: ok = s != 0; break;
      }
      if (!ok) return false;
    }
    return true;
  };
  Dense product{Rational(1)};
  for (const auto& p : polys) {
    if (p.size() <= 1) continue;
    Dense next(product.size() + p.size() - 1, Rational(0));
    for (std::size_t i = 0; i < product.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) next[i + j] += product[i] * p[j];
    product = std::move(next);
  }
  const auto roots = isolate_roots(product);
  std::vector<Rational> gaps;
  if (roots.empty()) {
    gaps.push_back(Rational(0));
  } else {
    gaps.push_back(roots.front().first);
    for (std::size_t i = 1; i < roots.size(); ++i) gaps.push_back(roots[i].first);
    gaps.push_back(roots.back().second);
  }
  // Between consecutive isolating intervals there is no root, so the left endpoint of
  // the next interval is a valid gap sample.
  for (const auto& x : gaps) {
    std::vector<int> signs;
    for (const auto& p : polys) signs.push_back(sign(eval(p, x)));
    if (holds(signs)) return true;
  }
  for (const auto& [a, b] : roots) {
    std::vector<int> signs;
    for (const auto& p : polys) {
      if (p.size() <= 1) {
        signs.push_back(p.empty() ? 0 : sign(p[0]));
        continue;
      }
      // The interval holds a single root of the product, so p vanishes there iff
      // its squarefree part changes sign; otherwise p has no root in [a, b].
      const Dense sq = squarefree(p);
      const int sa = sign(eval(sq, a));
      const int sb = sign(eval(sq, b));
      signs.push_back(sa != sb ? 0 : sign(eval(p, a)));
    }
    if (holds(signs)) return true;
  }
  return false;
}

}  // namespace polita::oracles
