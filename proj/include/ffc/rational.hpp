// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_RATIONAL_HPP
#define FFC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ffc/errors.hpp"

namespace ffc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical reduced form: "n" for integers, "n/d" otherwise, d > 0.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// Parses "n", "-n", "n/d". Rejects zero denominators and trailing junk.
inline Rational parse_rational(std::string_view text, const std::string& where = "rational") {
  if (text.empty()) throw ParseError(where, "empty rational");
  std::string s(text);
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) throw ParseError(where, "malformed rational '" + s + "'");
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw ParseError(where, "malformed rational '" + s + "'");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw ParseError(where, "malformed rational '" + s + "'");
  };
  Rational q;
  if (slash == std::string::npos) {
    check_int(s, true);
    q = Rational(Integer(s[0] == '+' ? s.substr(1) : s, 10));
  } else {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    Integer n(num[0] == '+' ? num.substr(1) : num, 10);
    Integer d(den, 10);
    if (d == 0) throw ParseError(where, "zero denominator in '" + s + "'");
    q = Rational(n, d);
    q.canonicalize();
  }
  return q;
}

/// Decimal rendering with `digits` significant digits, round-to-nearest,
/// computed in 512-bit floating point so the rounding is of the exact value.
inline std::string to_decimal(const Rational& q, int digits = 15) {
  mpf_class f(0, 512);
  f = q;
  std::vector<char> buf(128 + static_cast<std::size_t>(digits));
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  return std::string(buf.data());
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact conversion of a finite double to a rational.
inline Rational from_double(double x) {
  Rational q(x);
  return q;
}

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace ffc

#endif  // FFC_RATIONAL_HPP
