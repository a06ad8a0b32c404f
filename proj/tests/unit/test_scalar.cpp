#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "holo/scalar.hpp"
#include "oracles.hpp"

using holo::Rational;
using holo::Scalar;

TEST(Scalar, ImaginaryUnitSquaresToMinusOne) {
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
}

TEST(Scalar, LambdaPowers) {
  EXPECT_EQ(Scalar::lambda() * Scalar::lambda(), Scalar::lambda(2));
  EXPECT_EQ(Scalar::lambda(0), Scalar(1));
}

TEST(Scalar, Rendering) {
  EXPECT_EQ(Scalar(Rational(1, 2)) .to_string(), "1/2");
  EXPECT_EQ((Scalar::lambda(2) * Rational(1, 2)).to_string(), "1/2*L^2");
  EXPECT_EQ(Scalar::i().to_string(), "I");
  EXPECT_EQ(Scalar().to_string(), "0");
}

TEST(Scalar, ZeroCoefficientsVanish) {
  Scalar s = Scalar::lambda() + Scalar(3);
  s -= Scalar::lambda();
  EXPECT_TRUE(s.is_rational());
  EXPECT_EQ(s.as_rational(), 3);
  EXPECT_TRUE((s - s).is_zero());
}

TEST(Scalar, NumericLambdaIsTwoPiI) {
  auto [re, im] = Scalar::lambda().numeric();
  EXPECT_NEAR(re, 0.0, 1e-12);
  EXPECT_NEAR(im, 2 * M_PI, 1e-12);
  auto [re2, im2] = Scalar::lambda(2).numeric();
  EXPECT_NEAR(re2, -4 * M_PI * M_PI, 1e-9);
  EXPECT_NEAR(im2, 0.0, 1e-9);
}

TEST(ScalarProperty, RingAxioms) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 200; ++n) {
    Scalar a = oracle::random_scalar(rng), b = oracle::random_scalar(rng),
           c = oracle::random_scalar(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
  }
}

TEST(ScalarProperty, NumericIsAHomomorphism) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    Scalar a = oracle::random_scalar(rng), b = oracle::random_scalar(rng);
    auto [ar, ai] = a.numeric();
    auto [br, bi] = b.numeric();
    auto [pr, pi] = (a * b).numeric();
    EXPECT_NEAR(pr, ar * br - ai * bi, 1e-6 * (1 + std::abs(pr)));
    EXPECT_NEAR(pi, ar * bi + ai * br, 1e-6 * (1 + std::abs(pi)));
  }
}
