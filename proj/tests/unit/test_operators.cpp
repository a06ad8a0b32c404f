#include <gtest/gtest.h>

#include <random>

#include "holo/operators.hpp"
#include "oracles.hpp"

using holo::CommutatorExpr;
using holo::DiffOperator;
using holo::DiffPoly;
using holo::Germ;
using holo::GermElt;
using holo::Rational;
using holo::Scalar;
using holo::ToeplitzMatrix;
using holo::UniversalElt;
using holo::UniversalHolonomy;
using holo::Word;

namespace {

using CE = CommutatorExpr;
using GOp = DiffOperator<Germ>;
using POp = DiffOperator<DiffPoly>;
DiffPoly m(int j, int i, int a = 0) { return DiffPoly::var(j, i, a); }
CE d(int i) { return CE::leaf(i); }
CE br(CE a, CE b) { return CE::commutator(std::move(a), std::move(b)); }

GermElt to_elt(const oracle::Components &c) {
  std::vector<Germ> v;
  for (const auto &p : c)
    v.push_back(oracle::to_germ(p));
  return GermElt::from_components(v);
}

Word random_word(std::mt19937_64 &rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), g(1, 3), s(0, 1);
  std::vector<holo::Letter> v;
  for (int n = len(rng); n > 0; --n)
    v.push_back({g(rng), s(rng) ? 1 : -1});
  return Word(v);
}

} // namespace

TEST(DiffOperator, CanonicalForm) {
  POp a({m(1, 1), DiffPoly(), DiffPoly()});
  EXPECT_EQ(a.order(), 0);
  EXPECT_TRUE(POp({DiffPoly()}).is_zero());
  EXPECT_EQ(POp::identity().to_string(), "Id");
  EXPECT_EQ(POp().to_string(), "0");
  EXPECT_EQ(POp::term(m(1, 1), 2).to_string(), "(m[1](d1)) * D^2");
}

TEST(DiffOperator, LeibnizComposition) {
  // (a D) o (b D) = a b' D + a b D^2
  POp a = POp::term(m(1, 1), 1), b = POp::term(m(1, 2), 1);
  POp expected({DiffPoly(), m(1, 1) * m(1, 2, 1), m(1, 1) * m(1, 2)});
  EXPECT_EQ(holo::op_compose(a, b), expected);
  EXPECT_EQ(holo::op_compose(POp::identity(), a), a);
}

TEST(DiffOperator, ComposeThenApplyMatchesDoubleApplication) {
  GOp tD = GOp::term(Germ::t(), 1);
  Germ t2 = Germ::monomial(Scalar(1), 2);
  EXPECT_EQ(holo::apply(holo::op_compose(tD, tD), t2), Germ::monomial(Scalar(4), 2));
  std::mt19937_64 rng(71);
  for (int n = 0; n < 50; ++n) {
    GOp a({oracle::to_germ(oracle::random_poly(rng, 2)), oracle::to_germ(oracle::random_poly(rng, 2)),
           oracle::to_germ(oracle::random_poly(rng, 2))});
    GOp b({oracle::to_germ(oracle::random_poly(rng, 2)), oracle::to_germ(oracle::random_poly(rng, 2))});
    Germ x = oracle::to_germ(oracle::random_poly(rng, 5));
    EXPECT_EQ(holo::apply(holo::op_compose(a, b), x), holo::apply(a, holo::apply(b, x)));
  }
}

TEST(FaaDiBruno, LowOrderFormulas) {
  auto f = holo::generator_holonomy(1, 3);
  EXPECT_EQ(holo::faa_di_bruno_S(f, 0), POp::identity());
  EXPECT_EQ(holo::faa_di_bruno_S(f, 1), POp::term(m(1, 1), 1));
  POp s2({DiffPoly(), m(2, 1), m(1, 1) * m(1, 1) * Rational(1, 2)});
  EXPECT_EQ(holo::faa_di_bruno_S(f, 2), s2);
  POp s3({DiffPoly(), m(3, 1), m(1, 1) * m(2, 1),
          m(1, 1) * m(1, 1) * m(1, 1) * Rational(1, 6)});
  EXPECT_EQ(holo::faa_di_bruno_S(f, 3), s3);
  EXPECT_THROW(holo::faa_di_bruno_S(f, 4), std::out_of_range);
}

TEST(FaaDiBruno, GermExample) {
  // F = id + e t, K = 2: column (Id, t D, 1/2 t^2 D^2)
  auto f = GermElt::from_components({Germ::t(), Germ()});
  auto t = holo::toeplitz_matrix(f, 2);
  EXPECT_EQ(t.S(0), GOp::identity());
  EXPECT_EQ(t.S(1), GOp::term(Germ::t(), 1));
  EXPECT_EQ(t.S(2), GOp::term(Germ::monomial(Scalar(Rational(1, 2)), 2), 2));
}

TEST(FaaDiBrunoProperty, AgreesWithPullbackOracle) {
  std::mt19937_64 rng(72);
  for (int n = 0; n < 30; ++n) {
    oracle::Components f;
    for (int j = 0; j < 4; ++j)
      f.push_back(oracle::random_poly(rng, 2, 4));
    auto t = holo::toeplitz_matrix(to_elt(f));
    for (int deg = 0; deg <= 6; ++deg) {
      oracle::QPoly phi = oracle::monomial(1, deg);
      for (int l = 0; l <= 4; ++l)
        EXPECT_EQ(oracle::from_germ(holo::apply(t.S(l), oracle::to_germ(phi))),
                  oracle::pullback(f, phi, l))
            << "deg=" << deg << " l=" << l;
    }
  }
}

TEST(Toeplitz, EntriesAndIdentity) {
  auto t = holo::toeplitz_matrix(holo::generator_holonomy(1, 2));
  EXPECT_EQ(t.order(), 2);
  EXPECT_EQ(t.entry(2, 1), t.S(1));
  EXPECT_TRUE(t.entry(0, 2).is_zero());
  EXPECT_EQ(holo::toeplitz_matrix(UniversalElt::identity(3)), ToeplitzMatrix<DiffPoly>::identity(3));
  EXPECT_EQ(holo::matrix_mul(t, ToeplitzMatrix<DiffPoly>::identity(2)), t);
  EXPECT_NE(t.to_string().find("S0 = Id"), std::string::npos);
}

// T(F o G) = T(G) T(F); with P(d1 d2) = P(d2) o P(d1) the product order is
// T(P(d1)) T(P(d2)). The reversed product differs already at K = 2.
TEST(Toeplitz, ProductOrderForTwoLetterWord) {
  const int K = 2;
  auto t1 = holo::toeplitz_matrix(holo::generator_holonomy(1, K));
  auto t2 = holo::toeplitz_matrix(holo::generator_holonomy(2, K));
  auto t12 = holo::toeplitz_matrix(holo::universal_holonomy(Word({{1, 1}, {2, 1}}), K));
  EXPECT_EQ(t12, holo::matrix_mul(t1, t2));
  EXPECT_NE(t12, holo::matrix_mul(t2, t1));
}

TEST(ToeplitzProperty, RepresentationOnRandomWords) {
  std::mt19937_64 rng(73);
  UniversalHolonomy engine(4);
  for (int n = 0; n < 25; ++n) {
    Word a = random_word(rng, 3), b = random_word(rng, 3);
    auto ta = holo::toeplitz_matrix(engine.of_word(a));
    auto tb = holo::toeplitz_matrix(engine.of_word(b));
    auto prod = holo::matrix_mul(ta, tb);
    EXPECT_EQ(holo::toeplitz_matrix(engine.of_word(a * b)), prod);
    EXPECT_EQ(prod.S(0), POp::identity());
    EXPECT_EQ(holo::matrix_commutator(ta, tb),
              holo::toeplitz_matrix(engine.of_expr(br(CE::from_word(a), CE::from_word(b)))));
    EXPECT_EQ(holo::matrix_mul(ta, holo::matrix_inverse(ta)), ToeplitzMatrix<DiffPoly>::identity(4));
  }
}

TEST(Toeplitz, InverseRequiresUnipotent) {
  ToeplitzMatrix<DiffPoly> z({POp(), POp()});
  EXPECT_THROW(holo::matrix_inverse(z), std::invalid_argument);
}

TEST(Coindex, Examples) {
  UniversalHolonomy engine(4);
  auto n1 = holo::minus_identity(holo::toeplitz_matrix(engine.of_expr(d(1))));
  auto n2 = holo::minus_identity(holo::toeplitz_matrix(engine.of_expr(br(d(1), d(2)))));
  EXPECT_EQ(holo::coindex(n1), 1);
  EXPECT_EQ(holo::coindex(n2), 2);
  EXPECT_EQ(holo::coindex(holo::minus_identity(ToeplitzMatrix<DiffPoly>::identity(4))),
            holo::kPlusInfinity);
  EXPECT_GE(holo::coindex(holo::matrix_mul(n1, n2)), 3);
}

TEST(KTriangular, Examples) {
  UniversalHolonomy engine(4);
  auto n1 = holo::minus_identity(holo::toeplitz_matrix(engine.of_expr(d(1))));
  auto n2 = holo::minus_identity(holo::toeplitz_matrix(engine.of_expr(br(d(1), d(2)))));
  EXPECT_TRUE(holo::is_k_triangular(n1, 1).holds);
  EXPECT_FALSE(holo::is_k_triangular(n1, 2).holds);
  EXPECT_TRUE(holo::is_k_triangular(n2, 2).holds);
  auto cert = holo::is_k_triangular(holo::matrix_mul(n1, n2), 3);
  EXPECT_TRUE(cert.holds) << cert.to_string();
}

TEST(Bridge, Examples) {
  UniversalHolonomy engine(4);
  auto r1 = holo::bridge_check(engine.of_expr(d(1)));
  EXPECT_TRUE(r1.consistent);
  EXPECT_EQ(r1.tau, 1);
  EXPECT_EQ(r1.max_triangular, 1);
  auto r3 = holo::bridge_check(engine.of_expr(br(d(1), br(d(1), d(2)))));
  EXPECT_TRUE(r3.consistent) << r3.to_string();
  EXPECT_GE(r3.tau, 3);
  EXPECT_GE(r3.max_triangular, 3);
  auto rid = holo::bridge_check(UniversalElt::identity(4));
  EXPECT_TRUE(rid.consistent);
  EXPECT_EQ(rid.tau, holo::kPlusInfinity);
  EXPECT_EQ(rid.max_triangular, 5);
}

TEST(ApplyToId, RecoversComponents) {
  auto f = holo::universal_holonomy(br(d(1), d(2)), 4);
  auto ids = holo::apply_matrix_to_id(holo::toeplitz_matrix(f));
  for (int l = 1; l <= 4; ++l)
    EXPECT_EQ(ids[static_cast<std::size_t>(l)], f.component(l));

  auto g = GermElt::from_components({Germ::monomial(Scalar(1), 2), Germ::t(), Germ(3)});
  auto gids = holo::apply_matrix_to_id(holo::toeplitz_matrix(g));
  EXPECT_EQ(gids[0], Germ::t());
  for (int l = 1; l <= 3; ++l)
    EXPECT_EQ(gids[static_cast<std::size_t>(l)], g.component(l));

  auto idm = holo::apply_matrix_to_id(ToeplitzMatrix<Germ>::identity(2));
  EXPECT_EQ(idm, (std::vector<Germ>{Germ::t(), Germ(), Germ()}));
}
