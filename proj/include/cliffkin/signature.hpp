#pragma once

#include <charconv>
#include <compare>
#include <string>
#include <string_view>

#include "cliffkin/errors.hpp"

namespace cliffkin {

/// Upper bound on the generator count; blades are stored as 32-bit masks.
inline constexpr int kMaxGenerators = 16;

/// The triple (p, q, r): generators squaring to +1, -1 and 0, in that order.
struct AlgebraSignature {
  int p = 0;
  int q = 0;
  int r = 0;

  constexpr AlgebraSignature() = default;
  constexpr AlgebraSignature(int p_, int q_, int r_) : p(p_), q(q_), r(r_) {
    if (p < 0 || q < 0 || r < 0 || p + q + r > kMaxGenerators)
      throw InvalidSignature("signature (" + std::to_string(p) + "," + std::to_string(q) + "," +
                             std::to_string(r) + ") outside 0 <= p+q+r <= " +
                             std::to_string(kMaxGenerators));
  }

  [[nodiscard]] constexpr int n() const { return p + q + r; }
  [[nodiscard]] constexpr bool degenerate() const { return r != 0; }

  /// Square of generator e_i, 1-based.
  [[nodiscard]] constexpr int square(int i) const {
    if (i < 1 || i > n()) throw InvalidBlade("generator index out of range");
    if (i <= p) return 1;
    if (i <= p + q) return -1;
    return 0;
  }

  friend constexpr auto operator<=>(const AlgebraSignature&, const AlgebraSignature&) = default;
};

inline std::string to_string(const AlgebraSignature& s) {
  return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + "," + std::to_string(s.r) + ")";
}

/// Parses "p,q,r" (surrounding parentheses and spaces tolerated).
inline AlgebraSignature parse_signature(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')') s.push_back(c);
  int v[3];
  const char* cur = s.data();
  const char* end = s.data() + s.size();
  for (int k = 0; k < 3; ++k) {
    auto [ptr, ec] = std::from_chars(cur, end, v[k]);
    if (ec != std::errc{} || ptr == cur)
      throw InvalidSignature("bad signature '" + std::string(text) + "', expected p,q,r");
    cur = ptr;
    if (k < 2) {
      if (cur == end || *cur != ',')
        throw InvalidSignature("bad signature '" + std::string(text) + "', expected p,q,r");
      ++cur;
    }
  }
  if (cur != end) throw InvalidSignature("trailing text in signature '" + std::string(text) + "'");
  return AlgebraSignature(v[0], v[1], v[2]);
}

}  // namespace cliffkin
