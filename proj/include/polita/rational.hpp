#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polita {

// Exact rationals. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

// Accepts "12", "-3/4", "1.25", "-0.5". Throws ParseError.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

std::size_t hash_value(const Rational& q);

}  // namespace polita
