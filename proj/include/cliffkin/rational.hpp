#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "cliffkin/errors.hpp"

namespace cliffkin {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Parses "n" or "n/d" (optional leading sign, no spaces).
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("invalid rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    char c = s[k];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw bad();
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw bad();
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

/// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace cliffkin
