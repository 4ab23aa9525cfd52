#include <gtest/gtest.h>

#include <stdexcept>

#include "lopq/poly.hpp"
#include "lopq/scalar.hpp"
#include "support.hpp"

namespace lopq {
namespace {

TEST(Scalar, MakeScalarIsCanonical) {
  EXPECT_EQ(to_string(make_scalar(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_scalar(8, 4)), "2");
  EXPECT_THROW(make_scalar(1, 0), std::domain_error);
}

TEST(Scalar, ParseAcceptsSignedRationals) {
  EXPECT_EQ(parse_scalar("-12/8"), make_scalar(-3, 2));
  EXPECT_EQ(parse_scalar("+7"), Scalar(7));
  EXPECT_EQ(parse_scalar("0/5"), Scalar(0));
}

TEST(Scalar, ParseRejectsMalformedInput) {
  for (const char* bad : {"", "1.5", "1/", "/2", " 1", "1/0", "a", "1//2", "--1"}) {
    EXPECT_THROW(parse_scalar(bad), std::invalid_argument) << bad;
  }
}

TEST(Scalar, PowHandlesNegativeExponents) {
  EXPECT_EQ(pow(make_scalar(2, 3), 3), make_scalar(8, 27));
  EXPECT_EQ(pow(make_scalar(2, 3), -2), make_scalar(9, 4));
  EXPECT_EQ(pow(Scalar(5), 0), Scalar(1));
  EXPECT_THROW(pow(Scalar(0), -1), std::domain_error);
}

TEST(Poly, TrimsTrailingZeros) {
  const Poly p({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(Poly({0, 0}).is_zero());
  EXPECT_EQ(Poly().degree(), Poly::kZeroDegree);
  EXPECT_EQ((p - p).degree(), Poly::kZeroDegree);
}

TEST(Poly, BasicArithmetic) {
  const Poly f({1, 1});   // 1 + z
  const Poly g({-1, 1});  // -1 + z
  EXPECT_EQ(f * g, Poly({-1, 0, 1}));
  EXPECT_EQ(f + g, Poly({0, 2}));
  EXPECT_EQ(Poly::monomial(3, 2), Poly({0, 0, 0, 2}));
  EXPECT_EQ(Poly::linear_factor(3, 2), Poly({-6, 3}));
  EXPECT_EQ(Poly({1, 2, 3}).derivative(), Poly({2, 6}));
  EXPECT_EQ(Poly({0, 0, 1}).compose_affine(2, 1), Poly({1, 4, 4}));
  EXPECT_EQ(Poly({2, 4}) / Scalar(2), Poly({1, 2}));
}

TEST(Poly, EvaluationIsMultiplicative) {
  testing::RandomRationals rng(11);
  for (int i = 0; i < 60; ++i) {
    const Poly f = rng.poly(rng.index(0, 6));
    const Poly g = rng.poly(rng.index(0, 6));
    const Scalar z = rng.next();
    ASSERT_EQ((f * g)(z), f(z) * g(z));
    ASSERT_EQ((f + g)(z), f(z) + g(z));
    ASSERT_EQ(f.compose_affine(3, z)(2), f(6 + z));
  }
}

}  // namespace
}  // namespace lopq
