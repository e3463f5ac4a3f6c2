#include <gtest/gtest.h>

#include "equicert/identities.hpp"

using namespace equicert;

TEST(ConstantReduce, Examples) {
  EXPECT_EQ(constant_reduce(UPoly({Rational(5), Rational(0)})), Rational(5));
  EXPECT_EQ(constant_reduce(UPoly::x() - UPoly::x()), Rational(0));
  EXPECT_FALSE(constant_reduce(UPoly({Rational(1), Rational(1)})).has_value());
  EXPECT_EQ(constant_reduce(MPoly::constant(3, Rational(2, 7))), Rational(2, 7));
  EXPECT_FALSE(constant_reduce(MPoly::variable(2, 1)).has_value());
}

TEST(Pell, HoldsWithConstantOne) {
  for (unsigned n : {1u, 2u, 17u, 50u}) {
    const auto r = verify_pell(n);
    EXPECT_TRUE(r.holds) << n;
    EXPECT_EQ(r.constant, Rational(1));
    EXPECT_EQ(r.residual_terms, 0u);
    EXPECT_EQ(r.identity, "pell");
  }
  EXPECT_THROW(verify_pell(0), std::invalid_argument);
}

TEST(UnityInterval, Examples) {
  EXPECT_EQ(verify_unity_interval(1, UnityVariant::Unity2).constant, Rational(3));
  EXPECT_EQ(verify_unity_interval(2, UnityVariant::Unity1).constant, Rational(1));
  const auto cheby2 = verify_unity_interval(8, UnityVariant::Cheby2);
  EXPECT_TRUE(cheby2.holds);
  EXPECT_EQ(cheby2.constant, Rational(17));
  EXPECT_TRUE(cheby2.matches_expected());
}

TEST(UnityInterval, Unity2AgreesWithCheby2) {
  for (unsigned n = 1; n <= 12; ++n) {
    EXPECT_EQ(verify_unity_interval(n, UnityVariant::Unity2).constant,
              verify_unity_interval(n, UnityVariant::Cheby2).constant)
        << n;
  }
}

TEST(UnityInterval, VariantNames) {
  EXPECT_EQ(parse_unity_variant("cheby2"), UnityVariant::Cheby2);
  EXPECT_EQ(to_string(UnityVariant::Unity1), "unity1");
  EXPECT_THROW(parse_unity_variant("unity3"), std::invalid_argument);
}

TEST(Unity01, Examples) {
  EXPECT_EQ(verify_unity_01(1).constant, Rational(3));
  EXPECT_EQ(verify_unity_01(2).constant, Rational(6));
  const auto r = verify_unity_01(20);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.constant, Rational(231));
}

TEST(SimplexUnity, Examples) {
  EXPECT_EQ(verify_simplex_unity(2, 1).constant, Rational(4));
  EXPECT_EQ(verify_simplex_unity(4, 2).constant, Rational(21));
  const auto r = verify_simplex_unity(1, 3);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.constant, Rational(10));
}

TEST(SimplexUnity, OneDimensionalCaseIsUnity01) {
  for (unsigned n = 1; n <= 20; ++n) {
    const auto r = verify_simplex_unity(1, n);
    EXPECT_TRUE(r.holds) << n;
    EXPECT_EQ(r.constant, interval_generator_count(n)) << n;
  }
}

TEST(SimplexUnity, ConjectureModeHasNoExpectedValue) {
  const auto r = verify_simplex_unity(2, 3);
  EXPECT_FALSE(r.expected_constant.has_value());
  EXPECT_TRUE(r.matches_expected());
}

TEST(SimplexEquilibrium, ComputedConstants) {
  const auto mass_two = verify_simplex_equilibrium(1, Normalization::PaperPi);
  EXPECT_TRUE(mass_two.holds);
  EXPECT_EQ(mass_two.constant, Rational(3));
  EXPECT_EQ(mass_two.expected_constant, Rational(4));
  EXPECT_FALSE(mass_two.matches_expected());
  EXPECT_EQ(verify_simplex_equilibrium(1, Normalization::Probability).constant, Rational(6));
}

TEST(SimplexEquilibrium, NormalizationCovariance) {
  for (unsigned n = 1; n <= 3; ++n) {
    const auto a = verify_simplex_equilibrium(n, Normalization::PaperPi);
    const auto b = verify_simplex_equilibrium(n, Normalization::Probability);
    ASSERT_TRUE(a.holds && b.holds) << n;
    EXPECT_EQ(*b.constant, *a.constant * Rational(2)) << n;
  }
}

TEST(GeneratorCounts, Values) {
  EXPECT_EQ(interval_generator_count(20), Rational(231));
  EXPECT_EQ(simplex_generator_count(3, 2), Rational(15));
  EXPECT_EQ(simplex_generator_count(1, 4), interval_generator_count(4));
}
