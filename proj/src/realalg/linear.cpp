#include "polita/linear.hpp"

#include "polita/errors.hpp"

#include <algorithm>
#include <map>

namespace polita {

int sign_matrix_entry(const ExponentVector& a, const SignVector& s) {
  if (a.size() != s.size()) throw DomainError("sign_matrix_entry: length mismatch");
  int v = 1;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    if (s[j] == 0) return 0;
    if (a[j] % 2 == 1) v *= s[j];
  }
  return v;
}

std::vector<Rational> solve_exact(const std::vector<std::vector<Integer>>& m, const std::vector<Integer>& rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw DomainError("solve_exact: size mismatch");
  std::vector<std::vector<Integer>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("solve_exact: matrix is not square");
    a[i] = m[i];
    a[i].push_back(rhs[i]);
  }
  Integer prev(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) throw InternalError("solve_exact: singular matrix");
    std::swap(a[r], a[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j <= n; ++j) {
        Integer v = a[c][c] * a[i][j] - a[i][c] * a[c][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
    x[i] = acc / Rational(a[i][i]);
  }
  return x;
}

std::vector<std::size_t> first_independent_rows(const std::vector<std::vector<Integer>>& rows, std::size_t count) {
  std::vector<std::size_t> chosen;
  // Echelon basis: each basis row has a pivot column where earlier rows vanish.
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows.size() && chosen.size() < count; ++r) {
    std::vector<Rational> v(rows[r].begin(), rows[r].end());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = v[pivots[b]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[b][j];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (nz == v.end()) continue;
    const std::size_t piv = static_cast<std::size_t>(nz - v.begin());
    const Rational scale = v[piv];
    for (auto& e : v) e /= scale;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = basis[b][piv];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) basis[b][j] -= f * v[j];
    }
    basis.push_back(std::move(v));
    pivots.push_back(piv);
    chosen.push_back(r);
  }
  if (chosen.size() < count) throw InternalError("first_independent_rows: not enough independent rows");
  return chosen;
}

std::vector<ExponentVector> adapted_set(const std::vector<SignVector>& sigma) {
  if (sigma.empty()) return {};
  const std::size_t m = sigma.front().size();
  if (m == 0) return {ExponentVector{}};
  std::map<SignVector, int> extensions;
  for (const auto& s : sigma) {
    if (s.size() != m) throw DomainError("adapted_set: sign vectors of different lengths");
    ++extensions[SignVector(s.begin() + 1, s.end())];
  }
  std::vector<ExponentVector> out;
  for (int e = 0; e < 3; ++e) {
    std::vector<SignVector> sub;
    for (const auto& [tail, count] : extensions)
      if (count >= e + 1) sub.push_back(tail);
    for (auto& a : adapted_set(sub)) {
      a.insert(a.begin(), e);
      out.push_back(std::move(a));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polita
