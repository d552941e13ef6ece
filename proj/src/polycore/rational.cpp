#include "polita/rational.hpp"

#include "polita/errors.hpp"

#include <cctype>

namespace polita {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer{std::string(num)}, d);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    Integer num{std::string(whole.empty() ? "0" : whole) + std::string(frac)};
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    value = Rational(num, den);
    value.canonicalize();
  } else {
    if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
    value = Rational(Integer{std::string(s)});
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t hash_value(const Rational& q) {
  return hash_mpz(q.get_num_mpz_t()) * 31 + hash_mpz(q.get_den_mpz_t());
}

}  // namespace polita
