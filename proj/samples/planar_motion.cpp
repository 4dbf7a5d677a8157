// Blaschke-Gruenwald image of a planar motion, read back as a Spin(2,0,1) element.
#include <iostream>

#include "cliffkin/cliffkin.hpp"

using namespace cliffkin;

int main() {
  auto [c, s] = rational_half_angle(Rational(1, 3));
  Rational a = 2, b = -1;
  auto x = blaschke_grunwald(c, s, a, b);
  std::cout << "image point: (" << x[0] << ", " << x[1] << ", " << x[2] << ", " << x[3] << ")\n";

  AlgebraSignature sig(2, 0, 1);
  RationalMultivector g = blaschke_grunwald_to_spin(x);
  auto induced = point_collineation(g, named_ordering(sig, "paper-se2")).normalized();
  std::cout << "induced:\n" << to_string(induced);
  std::cout << "expected:\n" << to_string(planar_motion_matrix(c, s, a, b));
  std::cout << (induced == planar_motion_matrix(c, s, a, b) ? "match\n" : "differ\n");
}
