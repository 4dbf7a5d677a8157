#pragma once

#include <array>
#include <string>

#include "cliffkin/errors.hpp"
#include "cliffkin/multivector.hpp"

namespace cliffkin {

/// J: each blade goes to the blade on the complementary index set, coefficient unchanged.
template <class C>
Multivector<C> poincare_dual(const Multivector<C>& m) {
  const auto& sig = m.signature();
  const std::uint32_t all = (std::uint32_t{1} << sig.n()) - 1u;
  Multivector<C> out(sig);
  for (const auto& [b, c] : m.terms()) out.add(Blade(all & ~b.mask()), c);
  return out;
}

/// a0 + a1 i + a2 j + a3 k + eps (c0 + c1 i + c2 j + c3 k).
struct DualQuaternion {
  std::array<Rational, 4> real{0, 0, 0, 0};
  std::array<Rational, 4> dual{0, 0, 0, 0};

  static DualQuaternion one() { return {{1, 0, 0, 0}, {0, 0, 0, 0}}; }

  friend bool operator==(const DualQuaternion&, const DualQuaternion&) = default;

  friend DualQuaternion operator+(const DualQuaternion& x, const DualQuaternion& y) {
    DualQuaternion z;
    for (int t = 0; t < 4; ++t) {
      z.real[t] = x.real[t] + y.real[t];
      z.dual[t] = x.dual[t] + y.dual[t];
    }
    return z;
  }

  /// Hamilton product from i^2 = j^2 = k^2 = ijk = -1.
  static std::array<Rational, 4> quaternion_product(const std::array<Rational, 4>& p, const std::array<Rational, 4>& q) {
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
  }

  /// (A + eps B)(C + eps D) = AC + eps (AD + BC), eps central with eps^2 = 0.
  friend DualQuaternion operator*(const DualQuaternion& x, const DualQuaternion& y) {
    DualQuaternion z;
    z.real = quaternion_product(x.real, y.real);
    auto ad = quaternion_product(x.real, y.dual);
    auto bc = quaternion_product(x.dual, y.real);
    for (int t = 0; t < 4; ++t) z.dual[t] = ad[t] + bc[t];
    return z;
  }
};

inline std::string to_string(const DualQuaternion& q) {
  static const char* units[4] = {"", "i", "j", "k"};
  std::string s;
  auto part = [&](const std::array<Rational, 4>& v, const std::string& prefix) {
    for (int t = 0; t < 4; ++t) {
      if (sgn(v[t]) == 0) continue;
      Rational mag = abs(v[t]);
      std::string unit = prefix + units[t];
      std::string body = unit.empty() ? mag.get_str() : (mag == 1 ? unit : mag.get_str() + "*" + unit);
      if (s.empty())
        s = sgn(v[t]) < 0 ? "-" + body : body;
      else
        s += (sgn(v[t]) < 0 ? " - " : " + ") + body;
    }
  };
  part(q.real, "");
  part(q.dual, "eps");
  return s.empty() ? "0" : s;
}

namespace detail {

/// Even basis of Cl(3,0,1) and the sign with which each blade enters its dual-quaternion slot.
/// Slots 0..3 are 1, i, j, k; slots 4..7 are eps, eps i, eps j, eps k.
struct IsoSlot {
  const char* blade;
  int slot;
  int sign;
};

inline constexpr IsoSlot kDualQuaternionIso[8] = {
    {"e0", 0, 1},  {"e23", 1, 1}, {"e13", 2, -1}, {"e12", 3, -1},
    {"e1234", 4, -1}, {"e14", 5, 1}, {"e24", 6, 1}, {"e34", 7, -1},
};

inline void require_pga3(const AlgebraSignature& sig) {
  if (!(sig == AlgebraSignature(3, 0, 1)))
    throw SignatureMismatch("dual quaternions need signature (3,0,1), got " + to_string(sig));
}

}  // namespace detail

/// Coefficient transport Cl+(3,0,1) -> dual quaternions.
/// e0 -> 1, e23 -> i, e31 -> j, e12 -> -k, -e1234 -> eps, e14 -> eps i, e24 -> eps j, e34 -> -eps k.
inline DualQuaternion to_dual_quaternion(const RationalMultivector& g) {
  detail::require_pga3(g.signature());
  if (!g.is_even()) throw NotEven("odd-grade content in " + to_string(g));
  DualQuaternion q;
  for (const auto& s : detail::kDualQuaternionIso) {
    Rational c = g.coefficient(s.blade) * s.sign;
    (s.slot < 4 ? q.real[s.slot] : q.dual[s.slot - 4]) = c;
  }
  return q;
}

inline RationalMultivector from_dual_quaternion(const DualQuaternion& q) {
  AlgebraSignature sig(3, 0, 1);
  RationalMultivector g(sig);
  for (const auto& s : detail::kDualQuaternionIso) {
    const Rational& c = s.slot < 4 ? q.real[s.slot] : q.dual[s.slot - 4];
    g += RationalMultivector::blade(sig, std::string_view(s.blade), Rational(c * s.sign));
  }
  return g;
}

/// a.a = 1 and a.c = 0.
inline bool is_unit_dual_quaternion(const DualQuaternion& q) {
  Rational aa = 0, ac = 0;
  for (int t = 0; t < 4; ++t) {
    aa += q.real[t] * q.real[t];
    ac += q.real[t] * q.dual[t];
  }
  return aa == 1 && ac == 0;
}

}  // namespace cliffkin
