#include <gtest/gtest.h>

#include <random>

#include "holo/workbench.hpp"
#include "oracles.hpp"

using holo::Germ;
using holo::HolonomyCache;
using holo::Rational;
using holo::Scalar;

namespace {

Germ times(const oracle::QPoly &p, const Scalar &s) { return oracle::to_germ(p) * s; }

} // namespace

TEST(RandomPolynomial, ExactDegreeAndRange) {
  std::mt19937_64 rng(1);
  for (int d = 0; d <= 6; ++d) {
    Germ p = holo::random_polynomial(rng, d);
    EXPECT_EQ(p.degree(), d);
    for (const auto &c : p.coeffs()) {
      ASSERT_TRUE(c.is_rational());
      EXPECT_LE(abs(c.as_rational()), 9);
    }
  }
  for (int n = 0; n < 50; ++n)
    EXPECT_NE(holo::random_rational(rng), 0);
}

TEST(Triangle, M2IsLambdaSquaredWronskian) {
  std::mt19937_64 rng(91);
  HolonomyCache cache;
  for (int n = 0; n < 30; ++n) {
    auto p1 = oracle::random_poly(rng, 5), p2 = oracle::random_poly(rng, 5);
    Germ v = holo::triangle_m2(oracle::to_germ(p1), oracle::to_germ(p2), &cache);
    EXPECT_EQ(v, times(oracle::wronskian(p1, p2), Scalar::lambda(2)));
  }
}

TEST(Triangle, ProportionalPeriodsVanish) {
  Germ p1 = Germ::polynomial({Scalar(1), Scalar(2), Scalar(-3)});
  EXPECT_TRUE(holo::triangle_m2(p1, p1 * Rational(5, 7)).stored_zero());
}

TEST(Lines, M2OnEachPair) {
  std::mt19937_64 rng(92);
  std::vector<oracle::QPoly> ps;
  std::vector<Germ> gs;
  for (int k = 0; k < 3; ++k) {
    ps.push_back(oracle::random_poly(rng, 3));
    gs.push_back(oracle::to_germ(ps.back()));
  }
  HolonomyCache cache;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      EXPECT_EQ(holo::lines_m2(i, j, gs, &cache),
                times(oracle::wronskian(ps[static_cast<std::size_t>(i - 1)],
                                        ps[static_cast<std::size_t>(j - 1)]),
                      Scalar::lambda(2)));
  EXPECT_THROW(holo::lines_m2(0, 1, gs), std::out_of_range);
}

TEST(Square, OrbitGenerators) {
  EXPECT_EQ(holo::square_orbit_generator(2).to_string(), "[d1 d2,d2 d3]");
  EXPECT_EQ(holo::square_orbit_generator(3).to_string(), "[d1 d2,[d2,d2 d3]]");
  EXPECT_EQ(holo::weight(holo::square_orbit_generator(5)), 5);
}

TEST(Square, EulerFamilyWronskian) {
  for (int a = 2; a <= 5; ++a) {
    auto [p1, p2] = holo::square_euler_family(Rational(3, 2), Rational(-2), Rational(1, 3), a);
    auto q1 = oracle::from_germ(p1), q2 = oracle::from_germ(p2);
    EXPECT_EQ(oracle::wronskian(q2, q1), oracle::scale(oracle::sub(q1, q2), Rational(3, 2) * (a - 1)));
  }
}

TEST(Square, ChainAgainstOracle) {
  std::mt19937_64 rng(93);
  HolonomyCache cache;
  for (int n = 0; n < 8; ++n) {
    auto p1 = oracle::random_poly(rng, 4), p2 = oracle::random_poly(rng, 4),
         p3 = oracle::random_poly(rng, 4);
    Rational mu = holo::random_rational(rng);
    auto r = holo::square_chain(oracle::to_germ(p1), oracle::to_germ(p2), oracle::to_germ(p3),
                                Scalar(mu), 3, &cache);
    auto diff = oracle::sub(p1, p2);
    EXPECT_EQ(r.m2, times(oracle::wronskian(diff, p3), Scalar::lambda(2)));
    EXPECT_EQ(r.m3, times(oracle::wronskian(diff, oracle::wronskian(p2, p1)),
                          Scalar::lambda(3) * Scalar(-mu)));
  }
}

TEST(Square, TailVanishesOnEulerFamily) {
  HolonomyCache cache;
  auto [p1, p2] = holo::square_euler_family(Rational(2), Rational(1, 2), Rational(-1), 3);
  Scalar mu(Rational(3, 4));
  auto r = holo::square_chain(p1, p2, (p1 - p2) * mu, mu, 6, &cache);
  EXPECT_TRUE(r.tail_applicable);
  EXPECT_TRUE(r.holds()) << r.to_string();
  ASSERT_EQ(r.tail.size(), 3u);
  for (const auto &[j, v] : r.tail)
    EXPECT_TRUE(v.stored_zero()) << "j=" << j;
}

TEST(Square, TailNotApplicableForGenericData) {
  Germ p1 = Germ::polynomial({Scalar(0), Scalar(1), Scalar(0), Scalar(1)});
  Germ p2 = Germ::polynomial({Scalar(1), Scalar(0), Scalar(2)});
  auto r = holo::square_chain(p1, p2, p1, Scalar(1), 4);
  EXPECT_FALSE(r.tail_applicable);
  EXPECT_TRUE(r.tail.empty());
  EXPECT_THROW(holo::square_chain(p1, p2, p1, Scalar(1), 2), std::invalid_argument);
}

TEST(Stabilization, FirstDiagonalIndices) {
  HolonomyCache cache;
  const std::vector<std::pair<std::string, int>> expected{
      {"generic", 1}, {"triangle", 2}, {"lines", 2}, {"square", 3}};
  for (const auto &[name, n] : expected) {
    auto rep = holo::diagonal_stabilization(holo::template_by_name(name), 1, 6, 1, 3, &cache);
    EXPECT_TRUE(rep.confirmed) << rep.to_string();
    EXPECT_EQ(rep.index, n) << name;
    int witnesses = 0;
    for (const auto &row : rep.rows) {
      EXPECT_TRUE(row.vanishes_after);
      if (row.witness) {
        ++witnesses;
        EXPECT_FALSE(row.witness->value.stored_zero());
        EXPECT_FALSE(row.condition.empty());
      }
    }
    EXPECT_EQ(witnesses, n) << name;
    EXPECT_NE(rep.to_string().find("CONFIRMED (K=6)"), std::string::npos);
  }
}

TEST(Stabilization, SeedsDoNotChangeTheIndex) {
  HolonomyCache cache;
  for (std::uint64_t seed : {2u, 3u, 17u}) {
    auto rep = holo::diagonal_stabilization(holo::triangle_template(), 1, 5, seed, 2, &cache);
    EXPECT_TRUE(rep.confirmed) << rep.to_string();
  }
}

TEST(Stabilization, HigherDiagonalIsShifted) {
  HolonomyCache cache;
  auto rep = holo::diagonal_stabilization(holo::triangle_template(), 2, 6, 1, 3, &cache);
  EXPECT_TRUE(rep.confirmed) << rep.to_string();
  EXPECT_EQ(rep.index, 3);
  EXPECT_EQ(rep.rows.front().row, 2);
  EXPECT_NE(rep.to_string().find("shifted by 1"), std::string::npos);
}

TEST(Stabilization, LinesOnlyCarriesFirstDiagonal) {
  auto rep = holo::diagonal_stabilization(holo::lines_template(), 2, 6, 1);
  EXPECT_FALSE(rep.confirmed);
  EXPECT_FALSE(rep.failure.empty());
}

TEST(Stabilization, ArgumentErrors) {
  EXPECT_THROW(holo::diagonal_stabilization(holo::generic_template(), 0, 6, 1),
               std::invalid_argument);
  EXPECT_THROW(holo::diagonal_stabilization(holo::generic_template(), 4, 3, 1),
               std::invalid_argument);
  EXPECT_THROW(holo::template_by_name("hexagon"), std::invalid_argument);
}

TEST(Stabilization, TooSmallTruncationIsNotConfirmed) {
  auto rep = holo::diagonal_stabilization(holo::square_template(), 1, 3, 1);
  EXPECT_FALSE(rep.confirmed);
}
