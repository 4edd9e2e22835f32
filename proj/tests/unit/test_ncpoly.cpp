#include <gtest/gtest.h>

#include <ncnull/ncpoly.hpp>
#include <ncnull/ratexpr.hpp>

#include "test_support.hpp"

using namespace ncnull;
using ncnull::testing::random_exact;
using ncnull::testing::random_poly;

namespace {

AlphabetPtr star2() {
  static const AlphabetPtr a = Alphabet::standard(2, true);
  return a;
}

NcPoly P(const std::string& s, const AlphabetPtr& a = star2()) { return parse_polynomial(s, a); }

}  // namespace

TEST(Alphabet, SlotsAndNames) {
  const auto a = star2();
  EXPECT_EQ(a->slots(), 4u);
  EXPECT_EQ(a->name(Letter{1, true}), "X2^*");
  EXPECT_EQ(a->letter("X2^*"), (Letter{1, true}));
  EXPECT_EQ(a->slot(Letter{1, true}), 3u);
  EXPECT_EQ(a->letter_at(3), (Letter{1, true}));
  EXPECT_THROW(a->letter("X3"), UnknownLetter);
  const auto plain = Alphabet::standard(2, false);
  EXPECT_THROW(plain->slot(Letter{0, true}), UnknownLetter);
}

TEST(Word, GradedLexOrder) {
  const Word a({Letter{1, false}});
  const Word b({Letter{0, false}, Letter{0, false}});
  EXPECT_TRUE(Word() < a);
  EXPECT_TRUE(a < b);
  EXPECT_EQ(words_of_length(*star2(), 2).size(), 16u);
  EXPECT_EQ(words_up_to(*star2(), 2).size(), 21u);
}

TEST(PolyArith, Expansion) {
  const NcPoly s = P("X1 + X2");
  const NcPoly sq = s * s;
  EXPECT_EQ(sq, P("X1 X1 + X1 X2 + X2 X1 + X2 X2"));
  EXPECT_EQ(degree_and_terms(sq), (std::pair<std::size_t, std::size_t>(2, 4)));
}

TEST(PolyArith, InverseAndIdentity) {
  CounterRng rng(1);
  const NcPoly f = random_poly(rng, star2(), 3, 5);
  EXPECT_TRUE((f + f * Scalar(-1)).is_zero());
  EXPECT_EQ(f * NcPoly::constant(star2(), Scalar(1)), f);
  EXPECT_THROW(f + NcPoly(Alphabet::standard(3, true)), AlphabetMismatch);
}

TEST(Involution, KnownValues) {
  const NcPoly f = NcPoly::monomial(star2(), Word({Letter{0, false}, Letter{1, true}}), Scalar(0, 2));
  const NcPoly expect = NcPoly::monomial(star2(), Word({Letter{1, false}, Letter{0, true}}), Scalar(0, -2));
  EXPECT_EQ(f.star(), expect);
}

TEST(Involution, LawsOnRandomPolys) {
  CounterRng rng(2);
  for (int t = 0; t < 40; ++t) {
    const NcPoly f = random_poly(rng, star2(), 3, 4), h = random_poly(rng, star2(), 3, 4);
    EXPECT_EQ(f.star().star(), f);
    EXPECT_EQ((f * h).star(), h.star() * f.star());
  }
}

TEST(DegreeAndTerms, KnownValues) {
  EXPECT_EQ(degree_and_terms(P("X1 X2^* X1 + 3 X1 - 1")), (std::pair<std::size_t, std::size_t>(3, 3)));
  EXPECT_EQ(degree_and_terms(P("5")), (std::pair<std::size_t, std::size_t>(0, 1)));
  EXPECT_EQ(degree_and_terms(P("1 - X1^* X1 - X2^* X2")), (std::pair<std::size_t, std::size_t>(2, 3)));
  EXPECT_THROW(degree_and_terms(P("X1 - X1")), ZeroPolynomial);
}

TEST(DegreeAndTerms, MonomialProductsAddDegrees) {
  CounterRng rng(3);
  for (int t = 0; t < 30; ++t) {
    const NcPoly f = random_poly(rng, star2(), 4, 1), h = random_poly(rng, star2(), 4, 1);
    if (f.is_zero() || h.is_zero()) continue;
    EXPECT_EQ((f * h).degree(), f.degree() + h.degree());
  }
}

TEST(EvalPoly, PaperStylePolynomial) {
  const auto a = Alphabet::standard(2, false);
  const NcPoly p = P("3 X1 X2 - X1^2", a);
  const MatrixExact A1{{1, 1}, {-1, 0}}, A2{{1, 0}, {2, -1}};
  EXPECT_EQ(eval_poly(p, {A1, A2}, StarRule::formal), (MatrixExact{{9, -4}, {-2, 1}}));
}

TEST(EvalPoly, UnitaryAdjointRule) {
  const auto a = Alphabet::standard(1, true);
  const MatrixExact U{{0, 1}, {-1, 0}};
  EXPECT_TRUE(eval_poly(P("1 - X1^* X1", a), {U}, StarRule::adjoint).is_zero());
  EXPECT_EQ(eval_poly(P("1", a), {U}, StarRule::adjoint), MatrixExact::identity(2));
  EXPECT_THROW(eval_poly(P("X1", a), std::vector<MatrixExact>{}, StarRule::adjoint), MissingLetter);
  EXPECT_THROW(eval_poly(P("X1", star2()), {U, MatrixExact::identity(3)}, StarRule::adjoint), SizeMismatch);
}

TEST(EvalPoly, RingHomomorphismAndStar) {
  CounterRng rng(4);
  for (int t = 0; t < 30; ++t) {
    const NcPoly f = random_poly(rng, star2(), 3, 4), h = random_poly(rng, star2(), 3, 4);
    const std::size_t n = 1 + rng.below(3);
    const std::vector<MatrixExact> pt{random_exact(rng, n, n, 2, true), random_exact(rng, n, n, 2, true)};
    const auto fv = eval_poly(f, pt, StarRule::adjoint), hv = eval_poly(h, pt, StarRule::adjoint);
    EXPECT_EQ(eval_poly(f + h, pt, StarRule::adjoint), fv + hv);
    EXPECT_EQ(eval_poly(f * h, pt, StarRule::adjoint), fv * hv);
    EXPECT_EQ(eval_poly(f.star(), pt, StarRule::adjoint), fv.conjugate_transpose());
  }
}

TEST(NcPolyText, PrintsAndReparses) {
  CounterRng rng(5);
  for (int t = 0; t < 50; ++t) {
    const NcPoly f = random_poly(rng, star2(), 3, 5);
    EXPECT_EQ(parse_polynomial(f.to_string(), star2()), f) << f.to_string();
  }
  EXPECT_EQ(P("1 - X1^* X1").to_string(), "1 - X1^* X1");
}
