#pragma once

#include "polita/rational.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polita {

// Degree of a polynomial in a chosen variable. The zero polynomial has
// degree kMinusInfinity, which compares below every natural degree.
using Degree = int;
inline constexpr Degree kMinusInfinity = -1;

// Multivariate polynomial over Q in X1, X2, ..., stored recursively.
//
// A polynomial with main variable X_k (the highest variable that occurs) is a
// dense list of coefficients in Q[X1..X_{k-1}], lowest degree first, with a
// nonzero leading coefficient and at least two entries. Constants have main
// variable 0. The representation is canonical, so structural equality is
// polynomial equality. Values are immutable and copies share storage.
class Poly {
 public:
  Poly();  // zero
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c);             // NOLINT(google-explicit-constructor)

  // X_k for k >= 1.
  static Poly variable(int k);

  // sum_i coeffs[i] * X_k^i. Every coefficient must avoid X_k and above.
  static Poly from_coeffs(int k, std::vector<Poly> coeffs);

  bool is_zero() const { return var_ == 0 && sgn(c_) == 0; }
  bool is_constant() const { return var_ == 0; }
  const Rational& constant_value() const;

  // Highest variable index occurring; 0 for constants.
  int main_var() const { return var_; }

  // Degree in the main variable; 0 for nonzero constants, kMinusInfinity for zero.
  Degree degree() const;

  // Level-k view: the polynomial read as univariate in X_k over Q[X1..X_{k-1}].
  // Requires main_var() <= k.
  Degree degree_in(int k) const;
  Poly coeff_in(int k, int i) const;
  std::vector<Poly> coeffs_in(int k) const;
  Poly lcof_in(int k) const;

  Poly derivative(int k) const;
  // P(X1, ..., X_k + c, ...).
  Poly shift(int k, const Rational& c) const;
  // Replace X_k by value (a polynomial in lower variables is fine).
  Poly substitute(int k, const Poly& value) const;
  // Simultaneous renaming X_i -> X_{mapping[i]} for i >= 1 (mapping[0] unused).
  Poly rename(const std::vector<int>& mapping) const;

  // point[i-1] is the value of X_i. Requires point.size() >= main_var().
  Rational evaluate(std::span<const Rational> point) const;

  // Positive rational c with P / c having coprime integer coefficients.
  Rational content() const;
  Poly primitive() const;
  // Primitive part, negated if needed so the leading numeric coefficient is positive.
  Poly sign_normalized() const;
  // Sign of the leading numeric coefficient (recursively leading).
  int leading_sign() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly scaled(const Rational& c) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  // Total order, used for sorted containers only.
  static int compare(const Poly& a, const Poly& b);

  std::size_t hash() const;

  // Canonical text, e.g. "2*x1*x2^2 - x2^2 - 1". Parses back to the same value.
  std::string to_string() const;

  // Grammar: variables x1..xn, integers, decimals, + - * / ^ and parentheses.
  // Division is allowed by nonzero constants only. Throws ParseError.
  static Poly parse(std::string_view text);

  // Same grammar with a caller-supplied variable resolver. The resolver maps an
  // identifier to a variable index >= 1 or throws ParseError.
  static Poly parse(std::string_view text, const std::function<int(const std::string&)>& resolve);

  // Low-level access to the main-variable coefficient list (empty for constants).
  std::span<const Poly> raw_coeffs() const;

 private:
  int var_ = 0;
  Rational c_;
  std::shared_ptr<const std::vector<Poly>> coeffs_;
};

Poly pow(const Poly& p, unsigned e);

struct PolyHash {
  std::size_t operator()(const Poly& p) const { return p.hash(); }
};

}  // namespace polita
