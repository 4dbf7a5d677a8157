// Derives the image variety of spatial Euclidean motions and checks a screw motion lands on it.
#include <iostream>

#include "cliffkin/cliffkin.hpp"

using namespace cliffkin;

int main() {
  AlgebraSignature sig(3, 0, 1);
  VarietySpec v = derive_spin_variety(sig);
  std::cout << "exceptional: " << to_string(v.exceptional) << "\n";
  for (const auto& c : v.constraints) std::cout << "constraint:  " << to_string(c.form) << "\n";

  // Two reflections in parallel planes give a translation, two in intersecting planes a rotation.
  auto translation = spin_from_reflections(sig, {{1, 0, 0, 0}, {1, 0, 0, Rational(-1, 2)}}).element;
  auto rotation = spin_from_reflections(sig, {{1, 0, 0, 0}, {Rational(3, 5), Rational(4, 5), 0, 0}}).element;
  RationalMultivector screw = translation * rotation;

  auto p = study_map(screw);
  std::cout << "screw: " << to_string(screw) << "\nimage:";
  for (const auto& x : p) std::cout << " " << x;
  std::cout << "\n";

  auto m = point_collineation(screw, named_ordering(sig, "paper-se3"));
  std::cout << to_string(m.normalized());
}
