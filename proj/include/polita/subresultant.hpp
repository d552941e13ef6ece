#pragma once

#include "polita/poly.hpp"

#include <optional>
#include <span>
#include <vector>

namespace polita {

// Exact quotient a / b in Q[X1..Xn] when b divides a, std::nullopt otherwise.
// Throws DomainError when b is zero.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

// Pseudo-remainder of num by den, both read as univariate in X_k:
// lcof(den)^(deg num - deg den + 1) * num reduced modulo den.
// num is returned unchanged when its degree is below that of den.
Poly pseudo_remainder(const Poly& num, const Poly& den, int k);

struct IntRemResult {
  Poly remainder;
  Degree degree;  // formal degree of remainder in X_k
};

// Remainder of num modulo den scaled by an even power of lcof(den), so that at
// any point where lcof(den) does not vanish it is a positive multiple of the
// Euclidean remainder. Requires den nonzero with deg den >= 0.
IntRemResult int_rem(const Poly& num, const Poly& den, int k);

// (-1)^(i(i-1)/2).
int epsilon(int i);

// Principal subresultant coefficients of p and q read in X_k, where
// deg p >= deg q >= 0. Entry j of `coefficients` is sRes_j for j in 0..deg p,
// with sRes_p = lcof(p). When deg p > deg q the signed subresultant
// polynomials are also returned (entry j is sResP_j); otherwise `polynomials`
// is empty and entries come from Sylvester-Habicht determinants.
struct SubresultantSequence {
  std::vector<Poly> coefficients;
  std::vector<Poly> polynomials;
};
SubresultantSequence subresultants(const Poly& p, const Poly& q, int k);

// sRes_j(p, q) computed directly as the determinant of the j-th
// Sylvester-Habicht matrix. Valid for 0 <= j <= min(deg p - 1, deg q), and for
// deg q < j <= deg p when deg p > deg q (where it is lcof(p) at j = deg p and 0 otherwise).
Poly syha_determinant(const Poly& p, const Poly& q, int j, int k);

// Fraction-free (Bareiss) determinant over Q[X1..Xn].
Poly determinant(std::vector<std::vector<Poly>> m);

// Generalized permanences minus variations of a sign sequence (s_p, ..., s_0),
// read head first. Requires a nonzero head.
int pmv(std::span<const int> signs);

}  // namespace polita
