#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cliffkin/errors.hpp"
#include "cliffkin/groups.hpp"
#include "cliffkin/multivector.hpp"
#include "cliffkin/quadric.hpp"

namespace cliffkin {

using Naming = std::vector<std::pair<Blade, std::string>>;

/// Variable assigned to each even blade, in listing order.
/// n = 3: a0 e0, a1 e12, c0 e23, c1 e13.  n = 4: a0 e0, a1..a3 e23 e13 e12, c0 e1234, c1..c3 e14 e24 e34.
/// n = 5 extends n = 4 by a4..a7 e15 e45 e25 e35 and c4..c7 e1235 e1345 e1245 e2345.
/// Any other n >= 2: a0, a1, ... over the even blades in canonical order.
inline Naming naming_convention(const AlgebraSignature& sig) {
  const int n = sig.n();
  if (n < 2) throw InvalidSignature("generic even elements need n >= 2, got " + to_string(sig));
  using Entry = std::pair<const char*, const char*>;
  std::vector<Entry> table;
  if (n == 3) {
    table = {{"e0", "a0"}, {"e12", "a1"}, {"e23", "c0"}, {"e13", "c1"}};
  } else if (n == 4) {
    table = {{"e0", "a0"}, {"e23", "a1"}, {"e13", "a2"}, {"e12", "a3"},
             {"e1234", "c0"}, {"e14", "c1"}, {"e24", "c2"}, {"e34", "c3"}};
  } else if (n == 5) {
    table = {{"e0", "a0"},     {"e23", "a1"},   {"e13", "a2"},   {"e12", "a3"},   {"e15", "a4"},   {"e45", "a5"},
             {"e25", "a6"},    {"e35", "a7"},   {"e14", "c1"},   {"e24", "c2"},   {"e34", "c3"},   {"e1235", "c4"},
             {"e1345", "c5"},  {"e1245", "c6"}, {"e2345", "c7"}, {"e1234", "c0"}};
  }
  Naming out;
  if (!table.empty()) {
    for (const auto& [blade, var] : table) out.emplace_back(parse_blade(blade).second, var);
    return out;
  }
  int k = 0;
  for (Blade b : even_blades(sig)) out.emplace_back(b, "a" + std::to_string(k++));
  return out;
}

/// Variable names sorted in natural order (a-block, then c-block).
inline std::vector<std::string> naming_variables(const Naming& naming) {
  std::vector<std::string> vars;
  for (const auto& [b, v] : naming) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), VariableOrder{});
  return vars;
}

struct GenericEvenElement {
  SymbolicMultivector element;
  Naming naming;
};

inline GenericEvenElement generic_even_element(const AlgebraSignature& sig) {
  GenericEvenElement g{SymbolicMultivector(sig), naming_convention(sig)};
  for (const auto& [b, v] : g.naming) g.element.add(b, Polynomial::variable(v));
  return g;
}

/// Exact element with the convention's coordinates; unnamed variables default to 0.
inline RationalMultivector even_element_from_coordinates(const AlgebraSignature& sig,
                                                         const std::map<std::string, Rational, std::less<>>& values) {
  auto naming = naming_convention(sig);
  RationalMultivector g(sig);
  for (const auto& [name, value] : values) {
    bool found = false;
    for (const auto& [b, v] : naming)
      if (v == name) {
        g.add(b, value);
        found = true;
      }
    if (!found) throw UnknownName("no coordinate '" + name + "' for signature " + to_string(sig));
  }
  return g;
}

/// Coordinates of an even element in the convention's natural variable order.
inline std::vector<Rational> even_coordinates(const RationalMultivector& g) {
  if (!g.is_even()) throw NotEven("odd-grade content in " + to_string(g));
  auto naming = naming_convention(g.signature());
  auto vars = naming_variables(naming);
  std::vector<Rational> out;
  for (const auto& var : vars)
    for (const auto& [b, v] : naming)
      if (v == var) out.push_back(g.coefficient(b));
  return out;
}

enum class VarietySource { spin_norm, kinematic_element };

inline std::string to_string(VarietySource s) { return s == VarietySource::spin_norm ? "spin_norm" : "kinematic_element"; }

/// A constraint quadric and the product coefficient it was read from, e.g. "gg*:e1235".
struct Constraint {
  QuadricForm form;
  std::string origin;
};

struct VarietySpec {
  AlgebraSignature signature;
  int ambient_dim = 0;
  QuadricForm exceptional;
  std::vector<Constraint> constraints;
  VarietySource source = VarietySource::spin_norm;

  [[nodiscard]] std::vector<QuadricForm> constraint_forms() const {
    std::vector<QuadricForm> out;
    for (const auto& c : constraints) out.push_back(c.form);
    return out;
  }
};

namespace detail {

inline void append_constraints(std::vector<Constraint>& out, const SymbolicMultivector& m, const std::string& label,
                               bool include_scalar) {
  for (const auto& [b, c] : m.terms()) {
    if (b == Blade::scalar() && !include_scalar) continue;
    QuadricForm q(c.normalized());
    bool seen = false;
    for (const auto& existing : out)
      if (existing.form == q) seen = true;
    if (!seen) out.push_back({std::move(q), label + ":" + blade_name(b)});
  }
}

inline int ambient_dimension(const AlgebraSignature& sig) { return (1 << (sig.n() - 1)) - 1; }

}  // namespace detail

/// Exceptional quadric = scalar part of g g*; constraints = non-scalar coefficients of g g* and g* g,
/// each divided by its content with a positive leading coefficient, duplicates dropped.
inline VarietySpec derive_spin_variety(const AlgebraSignature& sig) {
  auto g = generic_even_element(sig).element;
  auto gc = conjugate(g);
  auto left = g * gc;
  auto right = gc * g;
  if (!(left.scalar_part() == right.scalar_part())) throw Error("g g* and g* g differ in the scalar part");
  std::vector<Constraint> constraints;
  detail::append_constraints(constraints, left, "gg*", false);
  detail::append_constraints(constraints, right, "g*g", false);
  return {sig, detail::ambient_dimension(sig), QuadricForm(left.scalar_part()), std::move(constraints),
          VarietySource::spin_norm};
}

/// Quadrics of g^2 - tr(g) g + N(g) = 0, then the non-scalar coefficients of g g*.
inline VarietySpec derive_kinematic_variety(const AlgebraSignature& sig) {
  auto g = generic_even_element(sig).element;
  auto gc = conjugate(g);
  auto nrm = g * gc;
  auto kin = g * g - (g + gc) * g + nrm;
  std::vector<Constraint> constraints;
  detail::append_constraints(constraints, kin, "kin", true);
  detail::append_constraints(constraints, nrm, "gg*", false);
  return {sig, detail::ambient_dimension(sig), QuadricForm(nrm.scalar_part()), std::move(constraints),
          VarietySource::kinematic_element};
}

/// g^2 == tr(g) g - N(g) with tr(g) = g + g*.
template <class C>
bool kinematic_check(const Multivector<C>& g) {
  return g * g == (g + conjugate(g)) * g - norm(g);
}

/// (a0,a1,a2,a3,c0,c1,c2,c3) of a (projective) Spin(3,0,1) element.
inline std::array<Rational, 8> study_map(const RationalMultivector& g) {
  if (!(g.signature() == AlgebraSignature(3, 0, 1)))
    throw SignatureMismatch("study map needs signature (3,0,1), got " + to_string(g.signature()));
  if (!is_projective_spin(g)) throw NotASpinElement("not a Spin(3,0,1) element: " + to_string(g));
  auto coords = even_coordinates(g);
  std::array<Rational, 8> out;
  for (std::size_t i = 0; i < 8; ++i) out[i] = coords[i];
  return out;
}

/// Product of the given grade-1 mirrors; an even count gives a (projective) Spin element.
inline VersorWitness spin_from_reflections(const AlgebraSignature& sig, const std::vector<std::vector<Rational>>& planes) {
  std::vector<RationalMultivector> factors;
  for (const auto& p : planes) factors.push_back(RationalMultivector::vector(sig, p));
  return make_versor(sig, std::move(factors));
}

/// Image of the planar motion with half-angle pair (C, S) and translation (a, b):
/// (2C, aS - bC, aC + bS, 2S).
inline std::array<Rational, 4> blaschke_grunwald(const Rational& cos_half, const Rational& sin_half, const Rational& a,
                                                 const Rational& b) {
  if (cos_half * cos_half + sin_half * sin_half != 1)
    throw InvalidHalfAngle("(" + cos_half.get_str() + ", " + sin_half.get_str() + ") is not on the unit circle");
  return {Rational(2 * cos_half), Rational(a * sin_half - b * cos_half), Rational(a * cos_half + b * sin_half),
          Rational(2 * sin_half)};
}

/// The image point read as x0 + x3 e12 + x1 e23 + x2 e13 in Cl(2,0,1).
inline RationalMultivector blaschke_grunwald_to_spin(const std::array<Rational, 4>& x) {
  AlgebraSignature sig(2, 0, 1);
  return even_element_from_coordinates(sig, {{"a0", x[0]}, {"c0", x[1]}, {"c1", x[2]}, {"a1", x[3]}});
}

/// Homogeneous 3x3 matrix of x' = R(phi) x + (a, b), acting on (x0, x1, x2) with x0 the homogenizing coordinate.
inline Matrix<Rational> planar_motion_matrix(const Rational& cos_half, const Rational& sin_half, const Rational& a,
                                             const Rational& b) {
  Rational c = cos_half * cos_half - sin_half * sin_half;
  Rational s = 2 * cos_half * sin_half;
  Matrix<Rational> m(3, 3);
  m(0, 0) = 1;
  m(1, 0) = a;
  m(1, 1) = c;
  m(1, 2) = -s;
  m(2, 0) = b;
  m(2, 1) = s;
  m(2, 2) = c;
  return m;
}

/// Rational point on the unit circle: ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)).
inline std::pair<Rational, Rational> rational_half_angle(const Rational& t) {
  Rational d = 1 + t * t;
  return {Rational((1 - t * t) / d), Rational(2 * t / d)};
}

}  // namespace cliffkin
