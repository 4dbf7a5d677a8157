#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cliffkin/blade.hpp"
#include "cliffkin/errors.hpp"
#include "cliffkin/polynomial.hpp"
#include "cliffkin/rational.hpp"
#include "cliffkin/signature.hpp"

namespace cliffkin {

/// Coefficient rings the library is instantiated with. Symbolic rings cannot decide
/// equalities such as N(g) = 1, so group-membership checks are skipped for them.
template <class C>
struct CoefficientTraits;

template <>
struct CoefficientTraits<Rational> {
  static constexpr bool symbolic = false;
};

template <>
struct CoefficientTraits<Polynomial> {
  static constexpr bool symbolic = true;
};

/// Sparse element of Cl(p,q,r): blade -> coefficient, no stored zeros, canonical blade order.
template <class C>
class Multivector {
 public:
  using Coefficient = C;
  using Terms = std::map<Blade, C, CanonicalBladeOrder>;

  Multivector() = default;
  explicit Multivector(AlgebraSignature sig) : sig_(sig) {}

  Multivector(AlgebraSignature sig, std::initializer_list<std::pair<Blade, C>> terms) : sig_(sig) {
    for (const auto& [b, c] : terms) add(b, c);
  }

  static Multivector scalar(AlgebraSignature sig, const C& c) {
    Multivector m(sig);
    m.add(Blade::scalar(), c);
    return m;
  }

  static Multivector one(AlgebraSignature sig) { return scalar(sig, C(1)); }

  static Multivector blade(AlgebraSignature sig, Blade b, const C& c = C(1)) {
    Multivector m(sig);
    m.add(b, c);
    return m;
  }

  /// Builds c * e_name; descending names such as "e31" are normalized with their sign.
  static Multivector blade(AlgebraSignature sig, std::string_view name, const C& c = C(1)) {
    auto [sign, b] = parse_blade(name);
    Multivector m(sig);
    m.add(b, sign < 0 ? C(-c) : c);
    return m;
  }

  static Multivector generator(AlgebraSignature sig, int i, const C& c = C(1)) {
    return blade(sig, Blade::generator(i), c);
  }

  /// Grade-1 element sum_i x_i e_i.
  static Multivector vector(AlgebraSignature sig, const std::vector<C>& coords) {
    if (static_cast<int>(coords.size()) != sig.n()) throw GradeError("vector length differs from n");
    Multivector m(sig);
    for (int i = 1; i <= sig.n(); ++i) m.add(Blade::generator(i), coords[i - 1]);
    return m;
  }

  [[nodiscard]] const AlgebraSignature& signature() const { return sig_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] C coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? C(0) : it->second;
  }

  [[nodiscard]] C coefficient(std::string_view name) const {
    auto [sign, b] = parse_blade(name);
    C c = coefficient(b);
    return sign < 0 ? C(-c) : c;
  }

  [[nodiscard]] C scalar_part() const { return coefficient(Blade::scalar()); }

  /// True when no blade other than the scalar carries a coefficient.
  [[nodiscard]] bool is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Blade::scalar());
  }

  [[nodiscard]] bool is_even() const {
    for (const auto& [b, c] : terms_)
      if (b.grade() % 2 != 0) return false;
    return true;
  }

  /// True when every term has grade k (the zero element qualifies).
  [[nodiscard]] bool is_homogeneous(int k) const {
    for (const auto& [b, c] : terms_)
      if (b.grade() != k) return false;
    return true;
  }

  /// Adds c to the coefficient of b, dropping it if it cancels.
  void add(Blade b, const C& c) {
    if (!b.valid_for(sig_)) throw InvalidBlade(blade_name(b) + " not valid for " + to_string(sig_));
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Multivector operator-() const {
    Multivector out(sig_);
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, C(-c));
    return out;
  }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }

  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) add(b, C(-c));
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }

  /// Geometric product: bilinear extension of blade_product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector out(a.sig_);
    for (const auto& [ba, ca] : a.terms_)
      for (const auto& [bb, cb] : b.terms_) {
        auto [factor, blade] = blade_product(ba, bb, a.sig_);
        if (factor == 0) continue;
        C prod = ca * cb;
        out.add(blade, factor < 0 ? C(-prod) : prod);
      }
    return out;
  }

  /// Multiplication by an element of the coefficient ring.
  friend Multivector operator*(const Multivector& a, const C& s) {
    Multivector out(a.sig_);
    for (const auto& [b, c] : a.terms_) out.add(b, C(c * s));
    return out;
  }
  friend Multivector operator*(const C& s, const Multivector& a) { return a * s; }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  /// Applies f(grade) -> sign factor blade-wise.
  template <class F>
  [[nodiscard]] Multivector map_by_grade(F&& f) const {
    Multivector out(sig_);
    for (const auto& [b, c] : terms_) {
      int s = f(b.grade());
      if (s != 0) out.terms_.emplace(b, s < 0 ? C(-c) : c);
    }
    return out;
  }

  void check_same(const Multivector& o) const {
    if (!(sig_ == o.sig_))
      throw SignatureMismatch("signatures " + to_string(sig_) + " and " + to_string(o.sig_) + " differ");
  }

 private:
  static bool is_zero_coeff(const C& c) { return c == C(0); }

  AlgebraSignature sig_;
  Terms terms_;
};

using RationalMultivector = Multivector<Rational>;
using SymbolicMultivector = Multivector<Polynomial>;

/// Conjugation: grade-k blades scaled by (-1)^(k(k+1)/2); an anti-automorphism.
template <class C>
Multivector<C> conjugate(const Multivector<C>& m) {
  return m.map_by_grade([](int k) { return ((k * (k + 1) / 2) % 2 == 0) ? 1 : -1; });
}

/// Main involution: grade-k blades scaled by (-1)^k.
template <class C>
Multivector<C> main_involution(const Multivector<C>& m) {
  return m.map_by_grade([](int k) { return (k % 2 == 0) ? 1 : -1; });
}

/// Reversion (index order reversed, no generator negation); (-1)^(k(k-1)/2).
template <class C>
Multivector<C> reverse(const Multivector<C>& m) {
  return m.map_by_grade([](int k) { return ((k * (k - 1) / 2) % 2 == 0) ? 1 : -1; });
}

template <class C>
Multivector<C> grade_project(const Multivector<C>& m, int k) {
  if (k < 0 || k > m.signature().n())
    throw GradeError("grade " + std::to_string(k) + " out of range for n = " + std::to_string(m.signature().n()));
  return m.map_by_grade([k](int g) { return g == k ? 1 : 0; });
}

template <class C>
Multivector<C> even_part(const Multivector<C>& m) {
  return m.map_by_grade([](int g) { return g % 2 == 0 ? 1 : 0; });
}

template <class C>
Multivector<C> odd_part(const Multivector<C>& m) {
  return m.map_by_grade([](int g) { return g % 2 != 0 ? 1 : 0; });
}

/// Scalar product of two grade-1 elements, 1/2 (ab + ba).
template <class C>
C inner_product_vectors(const Multivector<C>& a, const Multivector<C>& b) {
  if (!a.is_homogeneous(1) || !b.is_homogeneous(1)) throw GradeError("inner product needs grade-1 inputs");
  Multivector<C> sym = a * b + b * a;
  if (!sym.is_scalar()) throw Error("symmetrized product of vectors is not scalar");
  return C(sym.scalar_part() * Rational(1, 2));
}

/// Same-grade extension: scalar part of 1/2 (ab + ba). Mixed grades are rejected.
template <class C>
C inner_product(const Multivector<C>& a, const Multivector<C>& b) {
  int k = -1;
  for (const auto* m : {&a, &b})
    for (const auto& [bl, c] : m->terms()) {
      if (k < 0) k = bl.grade();
      if (bl.grade() != k) throw GradeError("inner product needs homogeneous inputs of one grade");
    }
  Multivector<C> sym = a * b + b * a;
  return C(sym.scalar_part() * Rational(1, 2));
}

/// Exterior product of two grade-1 elements, 1/2 (ab - ba).
template <class C>
Multivector<C> outer_product_vectors(const Multivector<C>& a, const Multivector<C>& b) {
  if (!a.is_homogeneous(1) || !b.is_homogeneous(1)) throw GradeError("outer product needs grade-1 inputs");
  return (a * b - b * a) * C(Rational(1, 2));
}

inline std::string format_coefficient(const Rational& r) { return r.get_str(); }
inline std::string format_coefficient(const Polynomial& p) { return to_string(p); }

/// Text form, terms in canonical order: "e0 - 3/2*e12", "(a0^2 + a1^2)*e0 + 2*a0*c1*e13".
template <class C>
std::string to_string(const Multivector<C>& m) {
  if (m.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : m.terms()) {
    std::string body;
    bool neg = false;
    if constexpr (std::is_same_v<C, Rational>) {
      neg = sgn(c) < 0;
      Rational mag = abs(c);
      if (mag != 1) body = mag.get_str() + "*";
    } else {
      if (c.size() == 1) {
        const auto& [mono, coef] = *c.terms().begin();
        neg = sgn(coef) < 0;
        Rational mag = abs(coef);
        if (mono.is_one()) {
          if (mag != 1) body = mag.get_str() + "*";
        } else {
          body = (mag != 1 ? mag.get_str() + "*" : std::string()) + to_string(mono) + "*";
        }
      } else {
        body = "(" + to_string(c) + ")*";
      }
    }
    body += blade_name(b);
    if (first)
      out += neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace cliffkin
