#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffkin/errors.hpp"
#include "cliffkin/signature.hpp"

namespace cliffkin {

/// A basis blade e_{i1...ik}, i1 < ... < ik. Bit i-1 of the mask is set iff e_i is present.
class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t mask) : mask_(mask) {}

  static constexpr Blade scalar() { return Blade(0); }
  static constexpr Blade generator(int i) { return Blade(std::uint32_t{1} << (i - 1)); }

  [[nodiscard]] constexpr std::uint32_t mask() const { return mask_; }
  [[nodiscard]] constexpr int grade() const { return std::popcount(mask_); }
  [[nodiscard]] constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }

  /// Ascending 1-based generator indices.
  [[nodiscard]] std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if ((mask_ >> i) & 1u) out.push_back(i + 1);
    return out;
  }

  [[nodiscard]] constexpr bool valid_for(const AlgebraSignature& sig) const {
    return sig.n() >= 32 || (mask_ >> sig.n()) == 0;
  }

  friend constexpr bool operator==(Blade, Blade) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Canonical presentation order: by grade, then lexicographically on the ascending index list.
struct CanonicalBladeOrder {
  constexpr bool operator()(Blade a, Blade b) const {
    if (a.grade() != b.grade()) return a.grade() < b.grade();
    std::uint32_t diff = a.mask() ^ b.mask();
    if (diff == 0) return false;
    // Lowest differing generator decides: the list holding it is lexicographically smaller.
    std::uint32_t lowest = diff & (~diff + 1u);
    return (a.mask() & lowest) != 0;
  }
};

/// Sign of reordering e_A e_B into ascending order, ignoring metric contractions.
constexpr int reorder_sign(std::uint32_t a, std::uint32_t b) {
  // For every set bit of b, count the set bits of a with strictly greater index.
  int swaps = 0;
  std::uint32_t shifted = a >> 1;
  while (shifted != 0) {
    swaps += std::popcount(shifted & b);
    shifted >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

struct BladeProduct {
  int factor;  // -1, 0 or +1
  Blade blade;
};

/// e_A e_B = factor * e_{A xor B} under the signature's metric.
inline BladeProduct blade_product(Blade a, Blade b, const AlgebraSignature& sig) {
  if (!a.valid_for(sig) || !b.valid_for(sig))
    throw InvalidBlade("blade not valid for signature " + to_string(sig));
  int factor = reorder_sign(a.mask(), b.mask());
  std::uint32_t common = a.mask() & b.mask();
  for (int i = 1; common != 0; ++i, common >>= 1)
    if (common & 1u) factor *= sig.square(i);
  return {factor, Blade(a.mask() ^ b.mask())};
}

/// Normalizes an arbitrary product of distinct generators (any order) to sign * canonical blade.
/// Repeated indices are rejected; use blade_product for metric contractions.
inline std::pair<int, Blade> blade_from_indices(std::span<const int> indices) {
  std::uint32_t mask = 0;
  int sign = 1;
  for (int i : indices) {
    if (i < 1 || i > kMaxGenerators) throw InvalidBlade("generator index out of range");
    std::uint32_t bit = std::uint32_t{1} << (i - 1);
    if (mask & bit) throw InvalidBlade("repeated generator index in blade");
    // Moving e_i past every already-present generator with larger index.
    if (std::popcount(mask & ~((bit << 1) - 1u)) & 1) sign = -sign;
    mask |= bit;
  }
  return {sign, Blade(mask)};
}

/// "e0" for the scalar, "e12" style when all indices are single digits, "e1_10" otherwise.
inline std::string blade_name(Blade b) {
  auto idx = b.indices();
  if (idx.empty()) return "e0";
  bool wide = idx.back() >= 10;
  std::string s = "e";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (wide && k > 0) s += '_';
    s += std::to_string(idx[k]);
  }
  return s;
}

/// Parses a blade name, possibly with descending or unordered indices (e31 = -e13).
inline std::pair<int, Blade> parse_blade(std::string_view name) {
  if (name.size() < 2 || name[0] != 'e') throw ParseError("bad blade name '" + std::string(name) + "'");
  std::string_view body = name.substr(1);
  if (body == "0") return {1, Blade::scalar()};
  std::vector<int> idx;
  if (body.find('_') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t end = body.find('_', start);
      if (end == std::string_view::npos) end = body.size();
      std::string part(body.substr(start, end - start));
      if (part.empty()) throw ParseError("bad blade name '" + std::string(name) + "'");
      for (char c : part)
        if (c < '0' || c > '9') throw ParseError("bad blade name '" + std::string(name) + "'");
      idx.push_back(std::stoi(part));
      start = end + 1;
    }
  } else {
    for (char c : body) {
      if (c < '1' || c > '9') throw ParseError("bad blade name '" + std::string(name) + "'");
      idx.push_back(c - '0');
    }
  }
  return blade_from_indices(idx);
}

/// All 2^n blades of the signature in canonical order.
inline std::vector<Blade> all_blades(const AlgebraSignature& sig) {
  std::vector<Blade> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << sig.n()); ++m) out.emplace_back(m);
  std::sort(out.begin(), out.end(), CanonicalBladeOrder{});
  return out;
}

/// Blades of a single grade, canonical order; C(n, k) of them.
inline std::vector<Blade> grade_blades(const AlgebraSignature& sig, int k) {
  if (k < 0 || k > sig.n()) throw GradeError("grade out of range");
  std::vector<Blade> out;
  for (Blade b : all_blades(sig))
    if (b.grade() == k) out.push_back(b);
  return out;
}

/// Blades of even grade, canonical order; 2^(n-1) of them for n >= 1.
inline std::vector<Blade> even_blades(const AlgebraSignature& sig) {
  std::vector<Blade> out;
  for (Blade b : all_blades(sig))
    if (b.grade() % 2 == 0) out.push_back(b);
  return out;
}

}  // namespace cliffkin
