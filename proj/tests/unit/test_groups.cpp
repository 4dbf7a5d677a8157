#include <gtest/gtest.h>

#include "cliffkin/cliffkin.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace cliffkin;
using cliffkin::testing::Random;

namespace {

RationalMultivector mv(AlgebraSignature sig, std::string_view blade, Rational c = 1) {
  return RationalMultivector::blade(sig, blade, c);
}

const std::vector<AlgebraSignature> kSpinSignatures = {{3, 0, 0}, {2, 0, 1}, {3, 0, 1}, {2, 1, 0},
                                                       {1, 2, 0}, {2, 2, 0}, {4, 0, 1}, {1, 1, 2}};

}  // namespace

TEST(Norm, Examples) {
  AlgebraSignature s(3, 0, 0);
  EXPECT_EQ(norm(mv(s, "e1")), RationalMultivector::scalar(s, -1));
  EXPECT_EQ(norm(mv(s, "e12")), RationalMultivector::scalar(s, 1));

  auto g = generic_even_element({3, 0, 1}).element;
  auto n = norm(g);
  EXPECT_EQ(n.scalar_part(), parse_polynomial(golden::kStudyNormScalar));
  EXPECT_EQ(n.coefficient("e1234"), parse_polynomial(golden::kStudyNormPseudo));
  EXPECT_EQ(n.size(), 2u);
}

TEST(VersorInverse, Examples) {
  AlgebraSignature s(3, 0, 0);
  auto v = mv(s, "e1", 2) + mv(s, "e2");
  auto inv = versor_inverse(v);
  EXPECT_EQ(inv, mv(s, "e1", Rational(2, 5)) + mv(s, "e2", Rational(1, 5)));
  EXPECT_EQ(v * inv, RationalMultivector::one(s));

  AlgebraSignature s110(1, 1, 0);
  EXPECT_THROW(versor_inverse(mv(s110, "e1") + mv(s110, "e2")), NotInvertibleAsVersor);
  AlgebraSignature s201(2, 0, 1);
  EXPECT_THROW(versor_inverse(mv(s201, "e3")), NotInvertibleAsVersor);
  // (1 + e123)(1 + e123)* = 2 e123
  EXPECT_THROW(versor_inverse(mv(s, "e0") + mv(s, "e123")), NotInvertibleAsVersor);
}

TEST(GeneralInverse, Examples) {
  AlgebraSignature s(3, 0, 0);
  auto m = mv(s, "e0") + mv(s, "e1") + mv(s, "e12");
  auto inv = general_inverse(m);
  EXPECT_EQ(inv * m, RationalMultivector::one(s));
  EXPECT_EQ(m * inv, RationalMultivector::one(s));

  AlgebraSignature s110(1, 1, 0);
  EXPECT_THROW(general_inverse(mv(s110, "e1") + mv(s110, "e2")), NotInvertible);
  // 1 + e1 with e1^2 = 1 is a zero divisor: (1 + e1)(1 - e1) = 0
  EXPECT_THROW(general_inverse(mv(s, "e0") + mv(s, "e1")), NotInvertible);
  EXPECT_THROW(general_inverse(mv({2, 0, 1}, "e3")), NotInvertible);
}

TEST(GeneralInverse, AgreesWithVersorInverse) {
  Random rng(5150);
  for (auto sig : std::vector<AlgebraSignature>{{3, 0, 0}, {2, 0, 1}, {3, 0, 1}, {1, 2, 0}}) {
    for (int t = 0; t < 30; ++t) {
      auto w = rng.versor(sig);
      ASSERT_EQ(general_inverse(w.element), versor_inverse(w.element)) << to_string(w.element);
    }
  }
}

TEST(PinSpin, Examples) {
  AlgebraSignature s(3, 0, 0);
  EXPECT_TRUE(is_spin(RationalMultivector::one(s)));
  EXPECT_TRUE(is_spin(mv(s, "e12")));
  EXPECT_FALSE(is_pin(mv(s, "e1")));  // N(e1) = -1
  EXPECT_FALSE(is_spin(mv(s, "e12", 2)));
  EXPECT_TRUE(is_projective_spin(mv(s, "e12", 2)));
  EXPECT_FALSE(is_projective_spin(mv(s, "e1")));

  AlgebraSignature s210(2, 1, 0);
  EXPECT_TRUE(is_pin(mv(s210, "e3")));
  EXPECT_FALSE(is_spin(mv(s210, "e3")));

  EXPECT_TRUE(is_spin(mv(s, "e0", Rational(3, 5)) + mv(s, "e12", Rational(4, 5))));
  // translator 1 + t e14 in PGA
  AlgebraSignature pga(3, 0, 1);
  EXPECT_TRUE(is_spin(mv(pga, "e0") + mv(pga, "e14", Rational(5, 2))));
  // even, but the norm picks up a pseudoscalar part
  EXPECT_FALSE(is_spin(mv({4, 0, 0}, "e0") + mv({4, 0, 0}, "e1234")));
}

TEST(MatrixRep, IdentityAndHomomorphism) {
  Random rng(8);
  for (auto sig : kSpinSignatures) {
    auto full = BasisOrdering::full(sig);
    EXPECT_EQ(matrix_rep(RationalMultivector::one(sig), Side::left, full),
              Matrix<Rational>::identity(full.size()));
    for (int t = 0; t < 20; ++t) {
      auto a = rng.multivector(sig), b = rng.multivector(sig);
      ASSERT_EQ(matrix_rep(a * b, Side::left, full), matrix_rep(a, Side::left, full) * matrix_rep(b, Side::left, full));
      ASSERT_EQ(matrix_rep(a * b, Side::right, full),
                matrix_rep(b, Side::right, full) * matrix_rep(a, Side::right, full));
      auto ea = rng.even_multivector(sig), eb = rng.even_multivector(sig);
      auto even = BasisOrdering::even(sig);
      ASSERT_EQ(matrix_rep(ea * eb, Side::left, even),
                matrix_rep(ea, Side::left, even) * matrix_rep(eb, Side::left, even));
    }
  }
}

TEST(MatrixRep, GoldenImageMatrices) {
  AlgebraSignature pga3(3, 0, 1), pga2(2, 0, 1);
  auto g3 = generic_even_element(pga3).element;
  EXPECT_EQ(matrix_rep(g3, Side::left, named_ordering(pga3, "paper-se3-image")), golden::matrix(golden::kGPlus));
  auto g2 = generic_even_element(pga2).element;
  EXPECT_EQ(matrix_rep(g2, Side::left, named_ordering(pga2, "paper-se2-image")),
            golden::matrix(golden::kPlanarImage));
}

TEST(MatrixRep, RejectsNonClosedSubspace) {
  AlgebraSignature s(3, 0, 1);
  EXPECT_THROW(matrix_rep(mv(s, "e1"), Side::left, BasisOrdering::even(s)), SubspaceNotClosed);
  EXPECT_THROW(matrix_rep(mv({3, 0, 0}, "e1"), Side::left, BasisOrdering::even(s)), SignatureMismatch);
}

TEST(BasisOrdering, Construction) {
  AlgebraSignature s(3, 0, 1);
  auto b = BasisOrdering::from_names(s, {"e123", "e234", "e134", "e124"});
  EXPECT_EQ(to_string(b), "(e123,e234,e134,e124)");
  EXPECT_EQ(b.index_of(parse_blade("e134").second), 2u);
  EXPECT_FALSE(b.index_of(Blade::scalar()).has_value());
  EXPECT_THROW(BasisOrdering::from_names(s, {"e12", "e12"}), InvalidBlade);
  EXPECT_THROW(BasisOrdering::from_names(s, {"e21"}), ParseError);
  EXPECT_THROW(BasisOrdering::from_names(s, {"e15"}), InvalidBlade);
  std::vector<Rational> x = {1, 2, 3, 4};
  EXPECT_EQ(b.coordinates(b.element(x)), x);
}

TEST(Sandwich, Examples) {
  AlgebraSignature s(3, 0, 0);
  auto g = mv(s, "e0", 2) + mv(s, "e12");
  auto rotor = mv(s, "e0", Rational(3, 5)) + mv(s, "e12", Rational(4, 5));
  auto image = sandwich(rotor, mv(s, "e1"));
  EXPECT_TRUE(image.is_homogeneous(1));
  EXPECT_EQ(inner_product_vectors(image, image), Rational(1));
  EXPECT_EQ(sandwich(rotor, mv(s, "e3")), mv(s, "e3"));
  EXPECT_THROW(sandwich(g, mv(s, "e1")), NotAPinElement);
}

TEST(Sandwich, SymbolicPlanarPoint) {
  AlgebraSignature s(2, 0, 1);
  auto g = generic_even_element(s).element;
  auto x = [](const char* n) { return Polynomial::variable(n); };
  SymbolicMultivector p = SymbolicMultivector::blade(s, "e12", x("x0")) +
                          SymbolicMultivector::blade(s, "e23", x("x1")) +
                          SymbolicMultivector::blade(s, "e13", x("x2"));
  auto image = g * p * conjugate(g);
  EXPECT_TRUE(image.is_homogeneous(2));
  EXPECT_EQ(image.coefficient("e12"), parse_polynomial("(a0^2 + a1^2)*x0"));
  EXPECT_EQ(image.coefficient("e13"),
            parse_polynomial("2*(a1*c1 - c0*a0)*x0 + 2*a0*a1*x1 + (a0^2 - a1^2)*x2"));
}

TEST(Reflect, Examples) {
  AlgebraSignature s(2, 0, 0);
  EXPECT_EQ(reflect(mv(s, "e2"), mv(s, "e1")), mv(s, "e1"));
  EXPECT_EQ(reflect(mv(s, "e2"), mv(s, "e2")), mv(s, "e2", -1));
  EXPECT_EQ(reflect(mv(s, "e2", 5), mv(s, "e2")), mv(s, "e2", -1));
  EXPECT_THROW(reflect(mv(s, "e12"), mv(s, "e1")), NotInvertibleAsVersor);
  EXPECT_THROW(reflect(mv(s, "e1"), mv(s, "e12")), GradeError);
  EXPECT_THROW(reflect(mv({1, 1, 0}, "e1") + mv({1, 1, 0}, "e2"), mv({1, 1, 0}, "e1")), NotInvertibleAsVersor);
}

TEST(Reflect, NegatesComponentAlongMirror) {
  Random rng(44);
  for (auto sig : kSpinSignatures) {
    for (int t = 0; t < 30; ++t) {
      auto w = rng.anisotropic(sig);
      auto x = rng.coords(sig.n());
      auto v = RationalMultivector::vector(sig, w);
      auto a = RationalMultivector::vector(sig, x);
      Rational f = 2 * cliffkin::testing::metric(sig, x, w) / cliffkin::testing::metric(sig, w, w);
      ASSERT_EQ(reflect(v, a), a - f * v);
    }
  }
}

TEST(Reflect, TwoReflectionsAreASandwich) {
  Random rng(45);
  AlgebraSignature sig(3, 0, 0);
  for (int t = 0; t < 30; ++t) {
    auto u = RationalMultivector::vector(sig, rng.unit_vector(sig, 1));
    auto w = RationalMultivector::vector(sig, rng.unit_vector(sig, 1));
    auto a = rng.vector(sig);
    auto g = w * u;
    ASSERT_TRUE(is_spin(g));
    ASSERT_EQ(reflect(w, reflect(u, a)), sandwich(g, a));
  }
}

TEST(MakeVersor, Validation) {
  AlgebraSignature s(2, 0, 1);
  EXPECT_THROW(make_versor(s, {mv(s, "e3")}), NotInvertibleAsVersor);
  EXPECT_THROW(make_versor(s, {mv(s, "e12")}), GradeError);
  auto w = make_versor(s, {mv(s, "e1"), mv(s, "e2")});
  EXPECT_EQ(w.element, mv(s, "e12"));
  EXPECT_EQ(w.factors.size(), 2u);
}

TEST(PointCollineation, Identity) {
  for (auto sig : std::vector<AlgebraSignature>{{3, 0, 1}, {2, 0, 1}, {4, 0, 0}}) {
    auto basis = default_point_ordering(sig);
    auto pm = point_collineation(RationalMultivector::one(sig), basis);
    EXPECT_EQ(pm.delta, Rational(1));
    EXPECT_EQ(pm.normalized(), Matrix<Rational>::identity(basis.size()));
  }
}

TEST(PointCollineation, GoldenSymbolicMatrices) {
  AlgebraSignature pga2(2, 0, 1), pga3(3, 0, 1);
  auto planar = point_collineation(generic_even_element(pga2).element, named_ordering(pga2, "paper-se2"));
  EXPECT_EQ(planar.raw, golden::matrix(golden::kPlanarMotion));
  EXPECT_EQ(planar.delta, parse_polynomial("a0^2 + a1^2"));

  auto spatial = point_collineation(generic_even_element(pga3).element, named_ordering(pga3, "paper-se3"));
  EXPECT_EQ(spatial.raw, golden::matrix(golden::kSpatialMotion));
  EXPECT_EQ(spatial.delta, parse_polynomial(golden::kDelta));
}

TEST(PointCollineation, Errors) {
  AlgebraSignature s(3, 0, 1);
  auto basis = default_point_ordering(s);
  EXPECT_THROW(point_collineation(mv(s, "e1"), basis), NotASpinElement);
  EXPECT_THROW(point_collineation(mv(s, "e0") + mv(s, "e1234"), basis), NotASpinElement);
  EXPECT_THROW(point_collineation(RationalMultivector(s), basis), NotASpinElement);
}

class GroupProperties : public ::testing::TestWithParam<AlgebraSignature> {};

TEST_P(GroupProperties, SandwichPreservesScalarProducts) {
  const auto sig = GetParam();
  Random rng(700 + sig.p * 100 + sig.q * 10 + sig.r);
  for (int t = 0; t < 40; ++t) {
    auto g = rng.spin(sig);
    ASSERT_TRUE(is_spin(g)) << to_string(g);
    auto a = rng.vector(sig), b = rng.vector(sig);
    auto ga = sandwich(g, a), gb = sandwich(g, b);
    ASSERT_TRUE(ga.is_homogeneous(1));
    ASSERT_EQ(inner_product_vectors(ga, gb), inner_product_vectors(a, b));
  }
}

TEST_P(GroupProperties, DoubleCoverAndComposition) {
  const auto sig = GetParam();
  Random rng(800 + sig.p * 100 + sig.q * 10 + sig.r);
  auto basis = default_point_ordering(sig);
  for (int t = 0; t < 25; ++t) {
    auto g = rng.spin(sig), h = rng.spin(sig);
    auto pg = point_collineation(g, basis), ph = point_collineation(h, basis);
    ASSERT_EQ(pg.raw, point_collineation(RationalMultivector(-g), basis).raw);
    ASSERT_EQ(point_collineation(g * h, basis).normalized(), pg.normalized() * ph.normalized());
  }
}

INSTANTIATE_TEST_SUITE_P(Signatures, GroupProperties, ::testing::ValuesIn(kSpinSignatures),
                         [](const auto& info) {
                           const auto& s = info.param;
                           return "Cl" + std::to_string(s.p) + std::to_string(s.q) + std::to_string(s.r);
                         });
