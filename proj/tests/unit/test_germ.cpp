#include <gtest/gtest.h>

#include <map>
#include <random>

#include "holo/germ.hpp"
#include "oracles.hpp"

using holo::CommutatorExpr;
using holo::Germ;
using holo::Scalar;
using holo::ZeroKind;

namespace {

Germ poly(std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c)
    v.emplace_back(x);
  return Germ::polynomial(v);
}

} // namespace

TEST(Germ, PolynomialBasics) {
  Germ p = poly({1, 0, 3});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.at_zero(), Scalar(1));
  EXPECT_EQ(p.coeff(7), Scalar());
  EXPECT_EQ(poly({0, 0, 0}).degree(), -1);
  EXPECT_EQ(Germ::t() * Germ::t(), Germ::monomial(Scalar(1), 2));
}

TEST(Germ, JetPrecisionIsMinimum) {
  Germ a = Germ::jet({Scalar(1), Scalar(2), Scalar(3)}, 2);
  Germ b = Germ::jet({Scalar(1)}, 4);
  Germ s = a + b;
  EXPECT_TRUE(s.is_jet());
  EXPECT_EQ(s.precision(), 2);
  EXPECT_EQ((a * poly({0, 1})).precision(), 2);
  EXPECT_EQ((a * poly({0, 1})).coeff(3), Scalar());
}

TEST(Germ, DerivativeLosesOneOrder) {
  Germ a = Germ::jet({Scalar(1), Scalar(2), Scalar(3)}, 2);
  Germ d = holo::germ_derive(a);
  EXPECT_EQ(d.precision(), 1);
  EXPECT_EQ(d.coeff(0), Scalar(2));
  EXPECT_EQ(d.coeff(1), Scalar(6));
  EXPECT_THROW(holo::germ_derive(Germ::jet({Scalar(1)}, 0)), std::domain_error);
}

TEST(Germ, ZeroVerdicts) {
  EXPECT_EQ(holo::germ_is_zero(Germ()).kind, ZeroKind::ExactZero);
  auto v = holo::germ_is_zero(Germ::jet({}, 3));
  EXPECT_EQ(v.kind, ZeroKind::ZeroToPrecision);
  EXPECT_EQ(v.precision, 3);
  EXPECT_TRUE(v.vanishes());
  EXPECT_EQ(holo::germ_is_zero(Germ::t()).kind, ZeroKind::Nonzero);
}

TEST(Germ, WronskianExamples) {
  Germ one(1);
  EXPECT_EQ(holo::wronskian(one, Germ::t()), one);
  EXPECT_TRUE(holo::wronskian(Germ::t(), Germ::t()).stored_zero());
  EXPECT_EQ(holo::wronskian(Germ::t(), Germ::monomial(Scalar(1), 2)),
            Germ::monomial(Scalar(1), 2));
}

TEST(Germ, NestedWronskian) {
  std::map<int, Germ> leaves{{1, Germ(1)}, {2, Germ::t()}, {3, Germ::monomial(Scalar(1), 2)}};
  using CE = CommutatorExpr;
  Germ w = holo::nested_wronskian(CE::commutator(CE::leaf(1), CE::commutator(CE::leaf(2),
                                                                             CE::leaf(3))),
                                  leaves);
  // W(1, W(t, t^2)) = W(1, t^2) = 2t
  EXPECT_EQ(w, poly({0, 2}));
  EXPECT_THROW(holo::nested_wronskian(CE::leaf(4), leaves), std::invalid_argument);
}

TEST(GermProperty, WronskianAgreesWithOracle) {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 200; ++n) {
    auto f = oracle::random_poly(rng, 5), g = oracle::random_poly(rng, 5);
    EXPECT_EQ(oracle::from_germ(holo::wronskian(oracle::to_germ(f), oracle::to_germ(g))),
              oracle::wronskian(f, g));
  }
}

TEST(GermProperty, ArithmeticAgreesWithOracle) {
  std::mt19937_64 rng(32);
  for (int n = 0; n < 200; ++n) {
    auto f = oracle::random_poly(rng, 6), g = oracle::random_poly(rng, 6);
    Germ a = oracle::to_germ(f), b = oracle::to_germ(g);
    EXPECT_EQ(oracle::from_germ(a * b), oracle::mul(f, g));
    EXPECT_EQ(oracle::from_germ(a - b), oracle::sub(f, g));
    EXPECT_EQ(oracle::from_germ(holo::germ_derive(a)), oracle::deriv(f));
  }
}

TEST(GermProperty, WronskianAntisymmetric) {
  std::mt19937_64 rng(33);
  for (int n = 0; n < 100; ++n) {
    Germ a = oracle::to_germ(oracle::random_poly(rng, 4));
    Germ b = oracle::to_germ(oracle::random_poly(rng, 4));
    EXPECT_EQ(holo::wronskian(a, b), -holo::wronskian(b, a));
    EXPECT_TRUE(holo::wronskian(a, a).stored_zero());
  }
}
