#pragma once

// Exact scalar types. Everything in the library is built on GMP integers
// and canonical (reduced, positive-denominator) rationals.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "tropsev/errors.hpp"

namespace tropsev {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// g = s*a + t*b with g = gcd(a, b) >= 0.
inline void extended_gcd(const Integer& a, const Integer& b, Integer& g,
                         Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(text))
      throw SchemaError("not a rational: '" + std::string(text) + "'");
    return Rational(Integer(std::string(strip_plus(text))));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw SchemaError("not a rational: '" + std::string(text) + "'");
  Integer d(std::string(strip_plus(den)));
  if (d == 0) throw SchemaError("zero denominator: '" + std::string(text) + "'");
  return make_rational(Integer(std::string(strip_plus(num))), d);
}

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline bool fits_int64(const Integer& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
}

inline std::int64_t to_int64(const Integer& v) {
  if (!fits_int64(v)) throw InvariantBreach("integer overflow: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace tropsev
