#ifndef BIGM1_RATIONAL_HPP
#define BIGM1_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "bigm1/errors.hpp"

namespace bigm1 {

// GMP keeps mpq_class canonical after every arithmetic operation; values built
// from raw numerator/denominator pairs go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

/// Parses "p", "p/q", "-p/q" (optional leading '+' or '-', decimal digits only).
inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  std::size_t i = 0;
  auto fail = [&](std::size_t pos, const char* why) -> Rational { throw ParseError(s, pos, why); };
  if (s.empty()) return fail(0, "empty string");
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  auto digits = [&](std::string& out) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
    if (i == start) fail(i, "expected digit");
  };
  std::string num, den = "1";
  digits(num);
  if (i < s.size() && s[i] == '/') {
    ++i;
    den.clear();
    digits(den);
  }
  if (i != s.size()) return fail(i, "unexpected character");
  Integer n(num), d(den);
  if (d == 0) return fail(s.find('/') + 1, "zero denominator");
  if (negative) n = -n;
  return make_rational(n, d);
}

/// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace bigm1

#endif  // BIGM1_RATIONAL_HPP
