#include "polita/poly.hpp"

#include "polita/errors.hpp"
#include "polita/lexer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polita {

namespace {

using Coeffs = std::vector<Poly>;

// Builds a polynomial from coefficients known to avoid X_k; trims zeros.
Poly make(int k, Coeffs coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) return Poly();
  if (coeffs.size() == 1) return coeffs.front();
  return Poly::from_coeffs(k, std::move(coeffs));
}

void collect_monomials(const Poly& p, std::vector<int>& exps, std::map<std::vector<int>, Rational>& out) {
  if (p.is_constant()) {
    if (!p.is_zero()) out[exps] = p.constant_value();
    return;
  }
  auto cs = p.raw_coeffs();
  const int k = p.main_var();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    exps[k - 1] = static_cast<int>(i);
    collect_monomials(cs[i], exps, out);
  }
  exps[k - 1] = 0;
}

void accumulate_content(const Poly& p, Integer& num_gcd, Integer& den_lcm) {
  if (p.is_constant()) {
    if (p.is_zero()) return;
    const Rational& c = p.constant_value();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    return;
  }
  for (const auto& c : p.raw_coeffs()) accumulate_content(c, num_gcd, den_lcm);
}

}  // namespace

Poly::Poly() : c_(0) {}
Poly::Poly(const Rational& c) : c_(c) {}
Poly::Poly(long c) : c_(c) {}

Poly Poly::variable(int k) {
  if (k < 1) throw DomainError("variable index must be >= 1");
  return from_coeffs(k, {Poly(0L), Poly(1L)});
}

Poly Poly::from_coeffs(int k, std::vector<Poly> coeffs) {
  if (k < 1) throw DomainError("from_coeffs: variable index must be >= 1");
  for (const auto& c : coeffs)
    if (c.var_ >= k) throw DomainError("from_coeffs: coefficient mentions X" + std::to_string(c.var_));
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) return Poly();
  if (coeffs.size() == 1) return coeffs.front();
  Poly p;
  p.var_ = k;
  p.coeffs_ = std::make_shared<const Coeffs>(std::move(coeffs));
  return p;
}

const Rational& Poly::constant_value() const {
  if (var_ != 0) throw DomainError("constant_value of a non-constant polynomial");
  return c_;
}

Degree Poly::degree() const {
  if (var_ == 0) return is_zero() ? kMinusInfinity : 0;
  return static_cast<Degree>(coeffs_->size()) - 1;
}

Degree Poly::degree_in(int k) const {
  if (var_ > k) throw DomainError("polynomial mentions X" + std::to_string(var_) + " above level " + std::to_string(k));
  if (var_ == k && var_ != 0) return static_cast<Degree>(coeffs_->size()) - 1;
  return is_zero() ? kMinusInfinity : 0;
}

Poly Poly::coeff_in(int k, int i) const {
  if (var_ > k) throw DomainError("polynomial mentions X" + std::to_string(var_) + " above level " + std::to_string(k));
  if (var_ == k && var_ != 0) return i >= 0 && static_cast<std::size_t>(i) < coeffs_->size() ? (*coeffs_)[i] : Poly();
  return i == 0 ? *this : Poly();
}

std::vector<Poly> Poly::coeffs_in(int k) const {
  if (var_ > k) throw DomainError("polynomial mentions X" + std::to_string(var_) + " above level " + std::to_string(k));
  if (var_ == k && var_ != 0) return *coeffs_;
  if (is_zero()) return {};
  return {*this};
}

Poly Poly::lcof_in(int k) const {
  Degree d = degree_in(k);
  return d == kMinusInfinity ? Poly() : coeff_in(k, d);
}

std::span<const Poly> Poly::raw_coeffs() const {
  if (var_ == 0) return {};
  return {coeffs_->data(), coeffs_->size()};
}

Poly Poly::derivative(int k) const {
  if (var_ < k) return Poly();
  Coeffs out;
  if (var_ == k) {
    for (std::size_t i = 1; i < coeffs_->size(); ++i) out.push_back((*coeffs_)[i].scaled(Rational(static_cast<long>(i))));
    return make(k, std::move(out));
  }
  for (const auto& c : *coeffs_) out.push_back(c.derivative(k));
  return make(var_, std::move(out));
}

Poly Poly::shift(int k, const Rational& c) const {
  if (var_ < k) return *this;
  if (var_ > k) {
    Coeffs out;
    for (const auto& cf : *coeffs_) out.push_back(cf.shift(k, c));
    return make(var_, std::move(out));
  }
  const Poly lin = variable(k) + Poly(c);
  Poly acc;
  for (auto it = coeffs_->rbegin(); it != coeffs_->rend(); ++it) acc = acc * lin + *it;
  return acc;
}

Poly Poly::substitute(int k, const Poly& value) const {
  if (var_ < k) return *this;
  const Poly x = var_ == k ? value : variable(var_);
  Poly acc;
  for (auto it = coeffs_->rbegin(); it != coeffs_->rend(); ++it) acc = acc * x + it->substitute(k, value);
  return acc;
}

Poly Poly::rename(const std::vector<int>& mapping) const {
  if (var_ == 0) return *this;
  if (static_cast<std::size_t>(var_) >= mapping.size()) throw DomainError("rename: mapping too short");
  const Poly x = variable(mapping[var_]);
  Poly acc;
  for (auto it = coeffs_->rbegin(); it != coeffs_->rend(); ++it) acc = acc * x + it->rename(mapping);
  return acc;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (var_ == 0) return c_;
  if (static_cast<std::size_t>(var_) > point.size()) throw DomainError("evaluate: point has too few coordinates");
  const Rational& x = point[var_ - 1];
  Rational acc(0);
  for (auto it = coeffs_->rbegin(); it != coeffs_->rend(); ++it) acc = acc * x + it->evaluate(point);
  return acc;
}

Rational Poly::content() const {
  if (is_zero()) return Rational(0);
  Integer g(0), l(1);
  accumulate_content(*this, g, l);
  Rational out(g, l);
  out.canonicalize();
  return out;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  return scaled(1 / content());
}

int Poly::leading_sign() const {
  const Poly* p = this;
  while (p->var_ != 0) p = &p->coeffs_->back();
  return sgn(p->c_);
}

Poly Poly::sign_normalized() const {
  if (is_zero()) return *this;
  Rational c = content();
  if (leading_sign() < 0) c = -c;
  return scaled(1 / c);
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly Poly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Poly();
  if (var_ == 0) return Poly(Rational(c_ * c));
  Coeffs out;
  out.reserve(coeffs_->size());
  for (const auto& cf : *coeffs_) out.push_back(cf.scaled(c));
  Poly p;
  p.var_ = var_;
  p.coeffs_ = std::make_shared<const Coeffs>(std::move(out));
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.var_ == 0 && b.var_ == 0) return Poly(Rational(a.c_ + b.c_));
  if (a.var_ == b.var_) {
    const auto& x = *a.coeffs_;
    const auto& y = *b.coeffs_;
    Coeffs out(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < x.size() && i < y.size()) {
        out[i] = x[i] + y[i];
      } else {
        out[i] = i < x.size() ? x[i] : y[i];
      }
    }
    return make(a.var_, std::move(out));
  }
  const Poly& hi = a.var_ > b.var_ ? a : b;
  const Poly& lo = a.var_ > b.var_ ? b : a;
  if (lo.is_zero()) return hi;
  Coeffs out = *hi.coeffs_;
  out[0] = out[0] + lo;
  Poly p;
  p.var_ = hi.var_;
  p.coeffs_ = std::make_shared<const Coeffs>(std::move(out));
  return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.var_ == 0 && b.var_ == 0) return Poly(Rational(a.c_ * b.c_));
  if (a.var_ == b.var_) {
    const auto& x = *a.coeffs_;
    const auto& y = *b.coeffs_;
    Coeffs out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        out[i + j] += x[i] * y[j];
      }
    }
    return make(a.var_, std::move(out));
  }
  const Poly& hi = a.var_ > b.var_ ? a : b;
  const Poly& lo = a.var_ > b.var_ ? b : a;
  if (lo.var_ == 0) return hi.scaled(lo.c_);
  Coeffs out;
  out.reserve(hi.coeffs_->size());
  for (const auto& c : *hi.coeffs_) out.push_back(c * lo);
  Poly p;
  p.var_ = hi.var_;
  p.coeffs_ = std::make_shared<const Coeffs>(std::move(out));
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.var_ != b.var_) return false;
  if (a.var_ == 0) return a.c_ == b.c_;
  if (a.coeffs_ == b.coeffs_) return true;
  return *a.coeffs_ == *b.coeffs_;
}

int Poly::compare(const Poly& a, const Poly& b) {
  if (a.var_ != b.var_) return a.var_ < b.var_ ? -1 : 1;
  if (a.var_ == 0) return cmp(a.c_, b.c_) < 0 ? -1 : (cmp(a.c_, b.c_) > 0 ? 1 : 0);
  const auto& x = *a.coeffs_;
  const auto& y = *b.coeffs_;
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t i = x.size(); i-- > 0;) {
    int c = compare(x[i], y[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::size_t Poly::hash() const {
  if (var_ == 0) return hash_value(c_);
  std::size_t h = static_cast<std::size_t>(var_) * 0x100000001b3ULL;
  for (const auto& c : *coeffs_) h = (h ^ c.hash()) * 0x100000001b3ULL;
  return h;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::vector<int> exps(static_cast<std::size_t>(var_), 0);
  std::map<std::vector<int>, Rational> monos;
  collect_monomials(*this, exps, monos);
  // Highest variable first, larger exponents first.
  std::vector<std::pair<std::vector<int>, Rational>> terms(monos.begin(), monos.end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    for (std::size_t i = l.first.size(); i-- > 0;)
      if (l.first[i] != r.first[i]) return l.first[i] > r.first[i];
    return false;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (has_var) mono << '*';
      mono << 'x' << (i + 1);
      if (e[i] > 1) mono << '^' << e[i];
      has_var = true;
    }
    if (!has_var) {
      os << polita::to_string(mag);
    } else if (mag == 1) {
      os << mono.str();
    } else {
      os << polita::to_string(mag) << '*' << mono.str();
    }
  }
  return os.str();
}

Poly Poly::parse(std::string_view text) { return parse(text, resolve_indexed_variable); }

Poly Poly::parse(std::string_view text, const std::function<int(const std::string&)>& resolve) {
  TokenStream ts(text, resolve);
  Poly p = ts.parse_expression();
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return p;
}

Poly pow(const Poly& p, unsigned e) {
  Poly result(1L);
  Poly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace polita
