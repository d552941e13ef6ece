#include "polita/subresultant.hpp"

#include "polita/errors.hpp"

#include <algorithm>

namespace polita {

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("exact_divide: division by zero");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a.scaled(1 / b.constant_value());
  const int k = std::max(a.main_var(), b.main_var());
  if (b.main_var() < k) {
    std::vector<Poly> out;
    for (const auto& c : a.raw_coeffs()) {
      auto d = exact_divide(c, b);
      if (!d) return std::nullopt;
      out.push_back(std::move(*d));
    }
    return Poly::from_coeffs(k, std::move(out));
  }
  if (a.main_var() < k) return std::nullopt;
  std::vector<Poly> rc = a.coeffs_in(k);
  const std::vector<Poly> bc = b.coeffs_in(k);
  const int db = static_cast<int>(bc.size()) - 1;
  const int da = static_cast<int>(rc.size()) - 1;
  if (da < db) return std::nullopt;
  std::vector<Poly> qc(static_cast<std::size_t>(da - db + 1));
  for (int d = da; d >= db; --d) {
    if (rc[d].is_zero()) continue;
    auto c = exact_divide(rc[d], bc[db]);
    if (!c) return std::nullopt;
    for (int i = 0; i <= db; ++i) rc[d - db + i] -= *c * bc[i];
    qc[d - db] = std::move(*c);
  }
  for (int i = 0; i < db; ++i)
    if (!rc[i].is_zero()) return std::nullopt;
  return Poly::from_coeffs(k, std::move(qc));
}

Poly pseudo_remainder(const Poly& num, const Poly& den, int k) {
  const Degree p = den.degree_in(k);
  if (p == kMinusInfinity) throw DomainError("pseudo_remainder: zero divisor");
  std::vector<Poly> q = num.coeffs_in(k);
  const int qdeg = static_cast<int>(q.size()) - 1;
  if (qdeg < p) return num;
  const std::vector<Poly> pc = den.coeffs_in(k);
  const Poly& lc = pc[p];
  for (int i = qdeg - p; i >= 0; --i) {
    const Poly top = q[i + p];
    for (int j = 0; j < p; ++j) q[i + j] = lc * q[i + j] - pc[j] * top;
    for (int j = 0; j < i; ++j) q[j] = lc * q[j];
  }
  q.resize(static_cast<std::size_t>(p));
  return Poly::from_coeffs(k, std::move(q));
}

IntRemResult int_rem(const Poly& num, const Poly& den, int k) {
  const Degree p = den.degree_in(k);
  if (p == kMinusInfinity) throw DomainError("int_rem: zero divisor");
  const Degree q = num.degree_in(k);
  Poly r = pseudo_remainder(num, den, k);
  if (q >= p && (q - p) % 2 == 0) r *= den.coeff_in(k, p);
  return {r, r.degree_in(k)};
}

int epsilon(int i) {
  const int m = ((i % 4) + 4) % 4;
  return (m == 0 || m == 1) ? 1 : -1;
}

namespace {

Poly divide_or_throw(const Poly& a, const Poly& b, const char* where) {
  auto q = exact_divide(a, b);
  if (!q) throw InternalError(std::string(where) + ": inexact division");
  return *q;
}

// -Rem(a, b) / divisor, where Rem is the Euclidean remainder over the fraction
// field of the coefficient ring. The quotient is exact by construction.
Poly neg_rem_div(const Poly& a, const Poly& b, const Poly& divisor, int k) {
  const Degree da = a.degree_in(k);
  const Degree db = b.degree_in(k);
  if (da < db) return -divide_or_throw(a, divisor, "subresultants");
  Poly prem = pseudo_remainder(a, b, k);
  Poly scale = pow(b.coeff_in(k, db), static_cast<unsigned>(da - db + 1)) * divisor;
  return -divide_or_throw(prem, scale, "subresultants");
}


// The same recurrence specialized to rational coefficients, where the
// remainder can be taken over the field directly. Vectors hold coefficients,
// lowest degree first, without trailing zeros.
using Dense = std::vector<Rational>;

int dense_degree(const Dense& a) { return static_cast<int>(a.size()) - 1; }

void dense_trim(Dense& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Dense dense_scaled(Dense a, const Rational& c) {
  if (sgn(c) == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

// -Rem(a, b) / divisor over Q.
Dense dense_neg_rem_div(Dense a, const Dense& b, const Rational& divisor) {
  const int db = dense_degree(b);
  while (dense_degree(a) >= db && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    dense_trim(a);
  }
  return dense_scaled(std::move(a), -1 / divisor);
}

bool has_constant_coefficients(const Poly& f, int k) {
  if (f.main_var() < k) return f.is_constant();
  for (const auto& c : f.raw_coeffs())
    if (!c.is_constant()) return false;
  return true;
}

Dense to_dense(const Poly& f, int k) {
  Dense out;
  for (const auto& c : f.coeffs_in(k)) out.push_back(c.constant_value());
  dense_trim(out);
  return out;
}

Poly from_dense(const Dense& a, int k) {
  std::vector<Poly> cs;
  cs.reserve(a.size());
  for (const auto& x : a) cs.emplace_back(x);
  return Poly::from_coeffs(k, std::move(cs));
}

SubresultantSequence dense_subresultants(const Poly& P, const Poly& Q, int k) {
  const int p = P.degree_in(k);
  const int q = Q.degree_in(k);
  const std::size_t n = static_cast<std::size_t>(p) + 2;
  std::vector<Dense> S(n);
  std::vector<Rational> s(n), t(n);
  auto at = [](int j) { return static_cast<std::size_t>(j + 1); };
  auto lc = [](const Dense& a) { return a.empty() ? Rational(0) : a.back(); };

  S[at(p)] = to_dense(P, k);
  s[at(p)] = t[at(p)] = 1;
  S[at(p - 1)] = to_dense(Q, k);
  t[at(p - 1)] = lc(S[at(p - 1)]);
  s[at(p - 1)] = (q == p - 1) ? t[at(p - 1)] : Rational(0);

  int i = p + 1;
  int j = p;
  while (!S[at(j - 1)].empty()) {
    const int kk = dense_degree(S[at(j - 1)]);
    if (kk == j - 1) {
      s[at(j - 1)] = t[at(j - 1)];
      S[at(kk - 1)] = dense_neg_rem_div(dense_scaled(S[at(i - 1)], s[at(j - 1)] * s[at(j - 1)]), S[at(j - 1)],
                                        s[at(j)] * t[at(i - 1)]);
    } else {
      s[at(j - 1)] = 0;
      for (int delta = 1; delta <= j - kk - 1; ++delta) {
        Rational num = t[at(j - 1)] * t[at(j - delta)];
        if (delta % 2 == 1) num = -num;
        t[at(j - delta - 1)] = num / s[at(j)];
      }
      s[at(kk)] = t[at(kk)];
      for (int l = j - 2; l >= kk + 1; --l) {
        S[at(l)].clear();
        s[at(l)] = 0;
      }
      S[at(kk)] = dense_scaled(S[at(j - 1)], s[at(kk)] / t[at(j - 1)]);
      S[at(kk - 1)] = dense_neg_rem_div(dense_scaled(S[at(i - 1)], t[at(j - 1)] * s[at(kk)]), S[at(j - 1)],
                                        s[at(j)] * t[at(i - 1)]);
    }
    t[at(kk - 1)] = lc(S[at(kk - 1)]);
    i = j;
    j = kk;
  }
  for (int l = 0; l <= j - 2; ++l) {
    S[at(l)].clear();
    s[at(l)] = 0;
  }

  SubresultantSequence out;
  out.coefficients.resize(static_cast<std::size_t>(p) + 1);
  out.polynomials.resize(static_cast<std::size_t>(p) + 1);
  for (int l = 0; l <= p; ++l) {
    out.coefficients[l] = Poly(s[at(l)]);
    out.polynomials[l] = from_dense(S[at(l)], k);
  }
  out.coefficients[p] = P.coeff_in(k, p);
  return out;
}

}  // namespace

SubresultantSequence subresultants(const Poly& P, const Poly& Q, int k) {
  const Degree p = P.degree_in(k);
  const Degree q = Q.degree_in(k);
  if (q == kMinusInfinity) throw DomainError("subresultants: second polynomial is zero");
  if (p < q) throw DomainError("subresultants: requires deg p >= deg q");

  SubresultantSequence out;
  out.coefficients.resize(static_cast<std::size_t>(p) + 1);
  if (p == q) {
    for (int j = 0; j < p; ++j) out.coefficients[j] = syha_determinant(P, Q, j, k);
    out.coefficients[p] = P.coeff_in(k, p);
    return out;
  }

  if (has_constant_coefficients(P, k) && has_constant_coefficients(Q, k)) return dense_subresultants(P, Q, k);

  // Arrays indexed by j + 1 so that index -1 (the terminating remainder) fits.
  const std::size_t n = static_cast<std::size_t>(p) + 2;
  std::vector<Poly> S(n), s(n), t(n);
  auto at = [](int j) { return static_cast<std::size_t>(j + 1); };

  S[at(p)] = P;
  s[at(p)] = t[at(p)] = Poly(1L);
  S[at(p - 1)] = Q;
  t[at(p - 1)] = Q.coeff_in(k, q);
  s[at(p - 1)] = (q == p - 1) ? t[at(p - 1)] : Poly();

  int i = p + 1;
  int j = p;
  while (!S[at(j - 1)].is_zero()) {
    const int kk = S[at(j - 1)].degree_in(k);
    if (kk == j - 1) {
      s[at(j - 1)] = t[at(j - 1)];
      S[at(kk - 1)] = neg_rem_div(s[at(j - 1)] * s[at(j - 1)] * S[at(i - 1)], S[at(j - 1)],
                                  s[at(j)] * t[at(i - 1)], k);
    } else {
      s[at(j - 1)] = Poly();
      for (int delta = 1; delta <= j - kk - 1; ++delta) {
        Poly num = t[at(j - 1)] * t[at(j - delta)];
        if (delta % 2 == 1) num = -num;
        t[at(j - delta - 1)] = divide_or_throw(num, s[at(j)], "subresultants");
      }
      s[at(kk)] = t[at(kk)];
      for (int l = j - 2; l >= kk + 1; --l) {
        S[at(l)] = Poly();
        s[at(l)] = Poly();
      }
      S[at(kk)] = divide_or_throw(s[at(kk)] * S[at(j - 1)], t[at(j - 1)], "subresultants");
      S[at(kk - 1)] = neg_rem_div(t[at(j - 1)] * s[at(kk)] * S[at(i - 1)], S[at(j - 1)],
                                  s[at(j)] * t[at(i - 1)], k);
    }
    t[at(kk - 1)] = S[at(kk - 1)].lcof_in(k);
    i = j;
    j = kk;
  }
  for (int l = 0; l <= j - 2; ++l) {
    S[at(l)] = Poly();
    s[at(l)] = Poly();
  }

  out.polynomials.resize(static_cast<std::size_t>(p) + 1);
  for (int l = 0; l <= p; ++l) {
    out.coefficients[l] = s[at(l)];
    out.polynomials[l] = S[at(l)];
  }
  out.coefficients[p] = P.coeff_in(k, p);
  return out;
}

Poly syha_determinant(const Poly& P, const Poly& Q, int j, int k) {
  const Degree p = P.degree_in(k);
  const Degree q = Q.degree_in(k);
  if (p == kMinusInfinity || q == kMinusInfinity || p < q) throw DomainError("syha_determinant: requires deg p >= deg q >= 0");
  if (j < 0 || j > p) throw DomainError("syha_determinant: index out of range");
  if (j > std::min(p - 1, q)) {
    if (p == q) throw DomainError("syha_determinant: undefined index for equal degrees");
    return j == p ? P.coeff_in(k, p) : Poly();
  }
  const int size = p + q - 2 * j;
  const int top = p + q - j - 1;
  std::vector<std::vector<Poly>> m;
  auto row_of = [&](const Poly& f, int shift) {
    std::vector<Poly> row(static_cast<std::size_t>(size));
    for (int c = 0; c < size; ++c) row[c] = f.coeff_in(k, top - c - shift);
    return row;
  };
  for (int e = q - j - 1; e >= 0; --e) m.push_back(row_of(P, e));
  for (int e = 0; e <= p - j - 1; ++e) m.push_back(row_of(Q, e));
  return determinant(std::move(m));
}

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant: matrix is not square");
  if (n == 0) return Poly(1L);
  int sgn_flip = 1;
  Poly prev(1L);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m[r][c].is_zero()) ++r;
    if (r == n) return Poly();
    if (r != c) {
      std::swap(m[r], m[c]);
      sgn_flip = -sgn_flip;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        m[i][j] = divide_or_throw(m[c][c] * m[i][j] - m[i][c] * m[c][j], prev, "determinant");
      }
    }
    prev = m[c][c];
  }
  return sgn_flip > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int pmv(std::span<const int> signs) {
  if (signs.empty() || signs[0] == 0) throw DomainError("pmv: sequence must start with a nonzero sign");
  int total = 0;
  std::size_t head = 0;
  while (true) {
    std::size_t next = head + 1;
    while (next < signs.size() && signs[next] == 0) ++next;
    if (next >= signs.size()) break;
    const int gap = static_cast<int>(next - head);
    if (gap % 2 == 1) total += epsilon(gap) * signs[head] * signs[next];
    head = next;
  }
  return total;
}

}  // namespace polita
