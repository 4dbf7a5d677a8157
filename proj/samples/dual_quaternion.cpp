#include <iostream>

#include "cliffkin/cliffkin.hpp"

using namespace cliffkin;

int main() {
  AlgebraSignature sig(3, 0, 1);
  auto g = spin_from_reflections(sig, {{0, 1, 0, 0}, {Rational(5, 13), Rational(12, 13), 0, 2}}).element;
  DualQuaternion q = to_dual_quaternion(g);
  std::cout << to_string(g) << "\n  -> " << to_string(q) << "\n";
  std::cout << "unit: " << (is_unit_dual_quaternion(q) ? "yes" : "no") << "\n";
  std::cout << to_json(q).dump() << "\n";
  std::cout << "round trip: " << (from_dual_quaternion(q) == g ? "ok" : "broken") << "\n";
}
