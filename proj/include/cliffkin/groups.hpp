#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliffkin/blade.hpp"
#include "cliffkin/errors.hpp"
#include "cliffkin/linalg.hpp"
#include "cliffkin/multivector.hpp"

namespace cliffkin {

/// N(m) = m m*, returned in full; it need not be scalar in degenerate algebras.
template <class C>
Multivector<C> norm(const Multivector<C>& m) {
  return m * conjugate(m);
}

/// m^{-1} = m* / N(m), requiring N(m) to be a nonzero scalar and m* m = m m*.
inline RationalMultivector versor_inverse(const RationalMultivector& m) {
  RationalMultivector n = norm(m);
  if (!n.is_scalar() || n.is_zero())
    throw NotInvertibleAsVersor("N(m) is not a nonzero scalar: " + to_string(n));
  RationalMultivector inv = conjugate(m) * Rational(1 / n.scalar_part());
  if (!(inv * m == RationalMultivector::one(m.signature())))
    throw NotInvertibleAsVersor("m* m differs from m m*");
  return inv;
}

/// An explicit ordered list of blades spanning a subspace.
class BasisOrdering {
 public:
  BasisOrdering(AlgebraSignature sig, std::vector<Blade> blades) : sig_(sig), blades_(std::move(blades)) {
    for (std::size_t i = 0; i < blades_.size(); ++i) {
      if (!blades_[i].valid_for(sig_)) throw InvalidBlade(blade_name(blades_[i]) + " not valid for " + to_string(sig_));
      for (std::size_t j = 0; j < i; ++j)
        if (blades_[i] == blades_[j]) throw InvalidBlade("duplicate blade " + blade_name(blades_[i]) + " in ordering");
    }
  }

  static BasisOrdering full(AlgebraSignature sig) { return {sig, all_blades(sig)}; }
  static BasisOrdering even(AlgebraSignature sig) { return {sig, even_blades(sig)}; }
  static BasisOrdering grade(AlgebraSignature sig, int k) { return {sig, grade_blades(sig, k)}; }

  /// From canonical blade names; descending names would carry a sign and are rejected.
  static BasisOrdering from_names(AlgebraSignature sig, const std::vector<std::string>& names) {
    std::vector<Blade> blades;
    for (const auto& name : names) {
      auto [sign, b] = parse_blade(name);
      if (sign < 0) throw ParseError("basis blade '" + name + "' is not in ascending index order");
      blades.push_back(b);
    }
    return {sig, std::move(blades)};
  }

  [[nodiscard]] const AlgebraSignature& signature() const { return sig_; }
  [[nodiscard]] const std::vector<Blade>& blades() const { return blades_; }
  [[nodiscard]] std::size_t size() const { return blades_.size(); }
  [[nodiscard]] const Blade& operator[](std::size_t i) const { return blades_[i]; }

  [[nodiscard]] std::optional<std::size_t> index_of(Blade b) const {
    for (std::size_t i = 0; i < blades_.size(); ++i)
      if (blades_[i] == b) return i;
    return std::nullopt;
  }

  /// Coordinates of m; throws SubspaceNotClosed when m leaves the span.
  template <class C>
  [[nodiscard]] std::vector<C> coordinates(const Multivector<C>& m) const {
    std::vector<C> out(blades_.size(), C(0));
    for (const auto& [b, c] : m.terms()) {
      auto i = index_of(b);
      if (!i) throw SubspaceNotClosed(blade_name(b) + " lies outside the chosen basis");
      out[*i] = c;
    }
    return out;
  }

  template <class C>
  [[nodiscard]] Multivector<C> element(const std::vector<C>& coords) const {
    if (coords.size() != blades_.size()) throw Error("coordinate count differs from basis size");
    Multivector<C> m(sig_);
    for (std::size_t i = 0; i < coords.size(); ++i) m.add(blades_[i], coords[i]);
    return m;
  }

  friend bool operator==(const BasisOrdering&, const BasisOrdering&) = default;

 private:
  AlgebraSignature sig_;
  std::vector<Blade> blades_;
};

inline std::string to_string(const BasisOrdering& o) {
  std::string s = "(";
  for (std::size_t i = 0; i < o.size(); ++i) s += (i ? "," : "") + blade_name(o[i]);
  return s + ")";
}

enum class Side { left, right };

/// Column j holds the coordinates of m b_j (left) or b_j m (right).
template <class C>
Matrix<C> matrix_rep(const Multivector<C>& m, Side side, const BasisOrdering& basis) {
  m.check_same(Multivector<C>(basis.signature()));
  Matrix<C> out(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto b = Multivector<C>::blade(basis.signature(), basis[j]);
    auto col = basis.coordinates(side == Side::left ? m * b : b * m);
    for (std::size_t i = 0; i < basis.size(); ++i) out(i, j) = col[i];
  }
  return out;
}

/// Inverse from the full left-multiplication matrix: solves m x = 1, then checks x m = 1.
inline RationalMultivector general_inverse(const RationalMultivector& m) {
  auto basis = BasisOrdering::full(m.signature());
  Matrix<Rational> inv = inverse(matrix_rep(m, Side::left, basis));
  std::vector<Rational> col(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) col[i] = inv(i, 0);
  RationalMultivector x = basis.element(col);
  if (!(x * m == RationalMultivector::one(m.signature())))
    throw NotInvertible("left inverse is not a right inverse");
  return x;
}

namespace detail {

template <class C>
bool preserves_vectors(const Multivector<C>& g) {
  const auto& sig = g.signature();
  Multivector<C> ag = main_involution(g);
  Multivector<C> gc = conjugate(g);
  for (int i = 1; i <= sig.n(); ++i)
    if (!(ag * Multivector<C>::generator(sig, i) * gc).is_homogeneous(1)) return false;
  return true;
}

}  // namespace detail

/// g g* = g* g = 1 and the sandwich keeps every generator in grade 1.
inline bool is_pin(const RationalMultivector& g) {
  auto one = RationalMultivector::one(g.signature());
  return norm(g) == one && conjugate(g) * g == one && detail::preserves_vectors(g);
}

inline bool is_spin(const RationalMultivector& g) { return g.is_even() && is_pin(g); }

/// Spin up to a nonzero scale: even, g g* = g* g = Delta a nonzero scalar, grade 1 kept.
inline bool is_projective_spin(const RationalMultivector& g) {
  if (g.is_zero() || !g.is_even()) return false;
  auto n = norm(g);
  return n.is_scalar() && !n.is_zero() && conjugate(g) * g == n && detail::preserves_vectors(g);
}

/// alpha(g) v g*. Membership is checked for exact elements only.
template <class C>
Multivector<C> sandwich(const Multivector<C>& g, const Multivector<C>& v) {
  if constexpr (!CoefficientTraits<C>::symbolic) {
    if (!is_pin(g)) throw NotAPinElement("sandwich needs a Pin element: " + to_string(g));
  }
  return main_involution(g) * v * conjugate(g);
}

/// Reflection of the grade-1 element a in the hyperplane orthogonal to v: alpha(v) a v^{-1}.
inline RationalMultivector reflect(const RationalMultivector& v, const RationalMultivector& a) {
  if (!v.is_homogeneous(1) || v.is_zero()) throw NotInvertibleAsVersor("reflect needs a grade-1 mirror");
  if (!a.is_homogeneous(1)) throw GradeError("reflect acts on grade-1 elements");
  return main_involution(v) * a * versor_inverse(v);
}

/// A product of invertible grade-1 factors together with its value.
struct VersorWitness {
  std::vector<RationalMultivector> factors;
  RationalMultivector element;
};

inline VersorWitness make_versor(AlgebraSignature sig, std::vector<RationalMultivector> factors) {
  RationalMultivector prod = RationalMultivector::one(sig);
  for (const auto& f : factors) {
    if (!f.is_homogeneous(1) || f.is_zero()) throw GradeError("versor factors must be grade-1");
    auto n = norm(f);
    if (!n.is_scalar() || n.is_zero()) throw NotInvertibleAsVersor("factor " + to_string(f) + " is null");
    prod = prod * f;
  }
  return {std::move(factors), std::move(prod)};
}

/// Matrix of p -> g p g* on a point basis, with Delta the scalar part of g g*.
template <class C>
struct ProjectiveMatrix {
  Matrix<C> raw;
  C delta;

  /// raw / Delta; exact coefficients only.
  [[nodiscard]] Matrix<Rational> normalized() const
    requires std::is_same_v<C, Rational>
  {
    if (is_zero(delta)) throw NotInvertible("Delta vanishes");
    Matrix<Rational> out = raw;
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) /= delta;
    return out;
  }
};

template <class C>
ProjectiveMatrix<C> point_collineation(const Multivector<C>& g, const BasisOrdering& point_basis) {
  if (!g.is_even()) throw NotASpinElement("point collineation needs an even element");
  if constexpr (!CoefficientTraits<C>::symbolic) {
    if (!is_projective_spin(g)) throw NotASpinElement("not a (projective) Spin element: " + to_string(g));
  }
  Multivector<C> gc = conjugate(g);
  const auto& sig = point_basis.signature();
  Matrix<C> raw(point_basis.size(), point_basis.size());
  for (std::size_t j = 0; j < point_basis.size(); ++j) {
    auto col = point_basis.coordinates(g * Multivector<C>::blade(sig, point_basis[j]) * gc);
    for (std::size_t i = 0; i < point_basis.size(); ++i) raw(i, j) = col[i];
  }
  return {std::move(raw), norm(g).scalar_part()};
}

/// Column-aligned text, one row per line.
template <class C>
std::string to_string(const Matrix<C>& m) {
  std::vector<std::string> cells;
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(format_coefficient(m(i, j)));
      width[j] = std::max(width[j], cells.back().size());
    }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = cells[i * m.cols() + j];
      out += std::string(width[j] - c.size(), ' ') + c + (j + 1 < m.cols() ? "  " : " ");
    }
    out += "]\n";
  }
  return out;
}

}  // namespace cliffkin
