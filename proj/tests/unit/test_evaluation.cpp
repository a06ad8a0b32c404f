#include <gtest/gtest.h>

#include <random>

#include "holo/evaluation.hpp"
#include "holo/liealg.hpp"
#include "oracles.hpp"

using holo::CommutatorExpr;
using holo::DiffPoly;
using holo::Germ;
using holo::OrbitSpec;
using holo::PeriodSpec;
using holo::Scalar;
using holo::Word;
using holo::ZeroKind;

namespace {

using CE = CommutatorExpr;
DiffPoly m(int j, int i, int a = 0) { return DiffPoly::var(j, i, a); }
CE d(int i) { return CE::leaf(i); }
CE br(CE a, CE b) { return CE::commutator(std::move(a), std::move(b)); }

Germ poly(std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c)
    v.emplace_back(x);
  return Germ::polynomial(v);
}

} // namespace

TEST(PeriodSpec, AssignAndLookup) {
  PeriodSpec s(2, 3);
  s.assign(1, 1, Germ::t());
  EXPECT_TRUE(s.has(1, 1));
  EXPECT_FALSE(s.has(2, 1));
  EXPECT_FALSE(s.is_total());
  EXPECT_THROW(s.assign(3, 1, Germ()), std::out_of_range);
  EXPECT_THROW(s.assign(1, 4, Germ()), std::out_of_range);
  try {
    s.at(2, 3);
    FAIL();
  } catch (const std::out_of_range &e) {
    EXPECT_NE(std::string(e.what()).find("m[3](d2)"), std::string::npos);
  }
  s.fill_zero();
  EXPECT_TRUE(s.is_total());
  EXPECT_EQ(s.at(1, 1), Germ::t());
}

TEST(OrbitSpec, LevelWeightCheck) {
  OrbitSpec o;
  o.set_level(1, {d(1)});
  o.set_level(2, {br(d(1), d(2))});
  EXPECT_EQ(o.depth(), 2);
  EXPECT_THROW(o.set_level(3, {br(d(1), d(2))}), std::invalid_argument);
  EXPECT_TRUE(o.level(7).empty());
}

TEST(Evaluation, HomomorphismOnExamples) {
  PeriodSpec s(2, 2);
  s.assign(1, 1, Germ(1));
  s.assign(2, 1, Germ::t());
  s.fill_zero();
  EXPECT_EQ(holo::evaluate_poly(m(1, 1) * m(1, 2, 1) - m(1, 1, 1) * m(1, 2), s), Germ(1));
  EXPECT_EQ(holo::evaluate_poly(DiffPoly(Scalar::lambda()) * m(1, 2), s),
            Germ::t() * Scalar::lambda());
}

TEST(Evaluation, MissingVariableIsNamed) {
  PeriodSpec s(2, 2);
  s.assign(1, 1, Germ(1));
  try {
    holo::evaluate_poly(m(2, 2), s);
    FAIL();
  } catch (const std::out_of_range &e) {
    EXPECT_NE(std::string(e.what()).find("m[2](d2)"), std::string::npos);
  }
}

TEST(Evaluation, JetTooShortThrows) {
  PeriodSpec s(1, 1);
  s.assign(1, 1, Germ::jet({Scalar(1), Scalar(1)}, 1));
  EXPECT_NO_THROW(holo::evaluate_poly(m(1, 1, 1), s));
  EXPECT_THROW(holo::evaluate_poly(m(1, 1, 2), s), std::domain_error);
}

TEST(Evaluation, DerivationCommutesWithEvaluation) {
  std::mt19937_64 rng(61);
  PeriodSpec s(2, 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      s.assign(i, j, oracle::to_germ(oracle::random_poly(rng, 4)));
  DiffPoly p = m(1, 1) * m(2, 2, 1) + m(1, 2) * m(1, 2) - m(2, 1, 2);
  EXPECT_EQ(holo::evaluate_poly(holo::dp_derive(p), s),
            holo::germ_derive(holo::evaluate_poly(p, s)));
}

TEST(EvaluationProperty, UniversalityAgainstSubstitutionOracle) {
  std::mt19937_64 rng(62);
  const int K = 3;
  holo::UniversalHolonomy engine(K);
  std::uniform_int_distribution<int> len(0, 6), g(1, 3), sg(0, 1);
  for (int n = 0; n < 25; ++n) {
    PeriodSpec spec(3, K);
    std::vector<oracle::Components> gens(3);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= K; ++j) {
        auto p = oracle::random_poly(rng, 3);
        spec.assign(i, j, oracle::to_germ(p));
        gens[static_cast<std::size_t>(i - 1)].push_back(p);
      }
    std::vector<holo::Letter> letters;
    for (int k = len(rng); k > 0; --k)
      letters.push_back({g(rng), sg(rng) ? 1 : -1});
    Word w(letters);
    auto universal = holo::evaluate_holonomy(engine.of_word(w), spec);
    auto direct = oracle::word_holonomy(oracle::letters_of(w), gens);
    ASSERT_EQ(universal.truncation(), K);
    for (int j = 1; j <= K; ++j)
      EXPECT_EQ(oracle::from_germ(universal.component(j)),
                direct[static_cast<std::size_t>(j - 1)])
          << w.to_string() << " j=" << j;
    EXPECT_EQ(holo::germ_holonomy(w, spec), universal);
  }
}

TEST(MelnikovTable, TriangleLikeTable) {
  PeriodSpec s(2, 2);
  s.assign(1, 1, Germ(1));
  s.assign(2, 1, Germ::t());
  s.fill_zero();
  OrbitSpec o;
  o.set_level(1, {d(1), d(2)});
  o.set_level(2, {br(d(1), d(2))});
  auto t = holo::melnikov_table(s, o, 2);
  EXPECT_FALSE(t.cell(1, 1).vanishes);
  EXPECT_TRUE(t.cell(1, 2).vanishes);
  EXPECT_EQ(t.cell(2, 2).entries.at(0).value, Germ(1));
  EXPECT_TRUE(t.cell(1, 1).well_defined);
  EXPECT_FALSE(t.cell(2, 1).well_defined);
  EXPECT_NE(t.to_rows().find("[d1,d2]"), std::string::npos);
}

TEST(OrbitLength, CountsNonvanishingLevels) {
  PeriodSpec s(2, 3);
  s.assign(1, 1, Germ(1));
  s.assign(2, 1, Germ::t());
  s.fill_zero();
  OrbitSpec o;
  o.set_level(1, {d(1), d(2)});
  o.set_level(2, {br(d(1), d(2))});
  o.set_level(3, {br(d(1), br(d(1), d(2)))});
  EXPECT_EQ(holo::orbit_length(1, s, o).length, 1);
  EXPECT_EQ(holo::orbit_length(2, s, o).length, 2);
  PeriodSpec z(2, 3);
  z.fill_zero();
  EXPECT_EQ(holo::orbit_length(3, z, o).length, 0);
}

TEST(OrbitLength, JetPrecisionReported) {
  PeriodSpec s(2, 2);
  s.assign(1, 1, Germ::jet({}, 4));
  s.assign(2, 1, Germ::jet({}, 4));
  s.fill_zero();
  OrbitSpec o;
  o.set_level(1, {d(1)});
  auto r = holo::orbit_length(1, s, o);
  EXPECT_EQ(r.length, 0);
  ASSERT_TRUE(r.precision.has_value());
  EXPECT_EQ(*r.precision, 4);
}

TEST(Witness, FindsNonzeroValueAndIsDeterministic) {
  DiffPoly p = m(1, 1) * m(1, 2, 1) - m(1, 1, 1) * m(1, 2);
  auto a = holo::random_jet_witness(p, 100, 5), b = holo::random_jet_witness(p, 100, 5);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->trial, b->trial);
  EXPECT_EQ(a->value_at_zero, b->value_at_zero);
  EXPECT_FALSE(a->value_at_zero.is_zero());
  // recompute the value from the reported jets
  const auto &x1 = a->values.at({1, 1}), &x2 = a->values.at({2, 1});
  EXPECT_EQ(Scalar(x1.at(0) * x2.at(1) - x1.at(1) * x2.at(0)), a->value_at_zero);
}

TEST(Witness, ZeroPolynomialNotFound) {
  EXPECT_FALSE(holo::random_jet_witness(DiffPoly(), 50, 1).has_value());
  EXPECT_FALSE(holo::random_jet_witness(m(1, 1) - m(1, 1), 50, 1).has_value());
  EXPECT_FALSE(holo::random_jet_witness(m(1, 1), 0, 1).has_value());
}

TEST(Witness, SummandsOfT4CancelEverywhere) {
  std::array<DiffPoly, 5> x;
  for (int i = 0; i < 5; ++i)
    x[static_cast<std::size_t>(i)] = m(1, i + 1);
  EXPECT_FALSE(holo::random_jet_witness(holo::t4_summands(x), 30, 9).has_value());
}
