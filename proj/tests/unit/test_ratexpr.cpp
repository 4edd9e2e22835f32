#include <gtest/gtest.h>

#include <ncnull/ratexpr.hpp>

#include "test_support.hpp"

using namespace ncnull;
using ncnull::testing::random_exact;

namespace {

AlphabetPtr xy2() {
  static const AlphabetPtr a = Alphabet::named({"X1", "X2", "Y1", "Y2"}, false);
  return a;
}

AlphabetPtr star2() {
  static const AlphabetPtr a = Alphabet::standard(2, true);
  return a;
}

RatExpr E(const std::string& s, const AlphabetPtr& a = star2()) { return parse_expression(s, a); }

}  // namespace

TEST(Parse, SingleInverse) {
  const RatExpr e = E("X1^-1");
  EXPECT_EQ(e.kind(), RatExpr::Kind::Inv);
  EXPECT_EQ(e.child().kind(), RatExpr::Kind::Var);
  EXPECT_EQ(height(e), 1u);
}

TEST(Parse, CommutatorInverse) {
  const RatExpr e = E("(X1*X2 - X2*X1)^-1");
  ASSERT_EQ(e.kind(), RatExpr::Kind::Inv);
  const RatExpr& sub = e.child();
  ASSERT_EQ(sub.kind(), RatExpr::Kind::Add);
  ASSERT_EQ(sub.children().size(), 2u);
  EXPECT_EQ(sub.children()[0].kind(), RatExpr::Kind::Mul);
  EXPECT_EQ(sub.children()[1].kind(), RatExpr::Kind::Neg);
}

TEST(Parse, Precedence) {
  const RatExpr e = E("X1 X2^-1 + 2");
  ASSERT_EQ(e.kind(), RatExpr::Kind::Add);
  EXPECT_EQ(e.children()[0].children()[1].kind(), RatExpr::Kind::Inv);
  EXPECT_EQ(E("X1^2"), E("X1 X1"));
  EXPECT_EQ(E("X1 * X2"), E("X1 X2"));
  EXPECT_EQ(E("(X1 X2)^*"), E("X2^* X1^*"));
  EXPECT_EQ(E("-3").value(), Scalar(-3));
  EXPECT_EQ(E("(1/2 + 1i)").value(), Scalar(Rational(1, 2), 1));
  EXPECT_EQ(E("- 3").kind(), RatExpr::Kind::Neg);
}

TEST(Parse, Errors) {
  try {
    E("X1 + + X2");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
  EXPECT_THROW(E(""), SyntaxError);
  EXPECT_THROW(E("X1^-2"), SyntaxError);
  EXPECT_THROW(E("(X1"), SyntaxError);
  EXPECT_THROW(E("X1 $"), SyntaxError);
  EXPECT_THROW(E("X7"), UnknownLetter);
  EXPECT_THROW(parse_expression("X1^*", Alphabet::standard(1, false)), UnknownLetter);
}

TEST(Parse, GridLetterNames) {
  const auto a = Alphabet::named({"X10_3", "X1"}, true);
  const RatExpr e = parse_expression("X10_3^* X1", a);
  EXPECT_EQ(format_expression(e), "X10_3^* X1");
  EXPECT_THROW(parse_expression("X10_", a), SyntaxError);
}

TEST(Format, KnownValues) {
  EXPECT_EQ(format_expression(E("X1^-1")), "X1^-1");
  EXPECT_EQ(format_expression(RatExpr::constant(star2(), Scalar(Rational(1, 2), 1))), "(1/2 + 1i)");
  const RatExpr x = E("X1");
  const RatExpr nn = RatExpr::neg(RatExpr::neg(x));
  EXPECT_EQ(format_expression(nn), "-(-X1)");
  EXPECT_EQ(E(format_expression(nn)), nn);
}

TEST(Format, RoundTripFixedStrings) {
  for (const char* s : {"X1^-1 * (1 - X2*Y2)", "(X1 + X2^-1)^-1", "-3 X1 + (2i) X2", "X1 - (-2) X2", "-(3)",
                        "((X1 X2) X1)^-1", "X1 X1^-1 - 1"}) {
    const RatExpr e = E(s, Alphabet::named({"X1", "X2", "Y2"}, true));
    EXPECT_EQ(parse_expression(format_expression(e), e.alphabet()), e) << s << " -> " << format_expression(e);
  }
}

TEST(Format, RoundTripRandomTrees) {
  CounterRng rng(77);
  RandomExprOptions opts;
  opts.max_depth = 6;
  for (int t = 0; t < 500; ++t) {
    const RatExpr e = random_expression(star2(), rng.as_function(), opts);
    const std::string s = format_expression(e);
    EXPECT_EQ(parse_expression(s, star2()), e) << s;
  }
}

TEST(Eval, CommutatorInverseAtUnits) {
  const auto a = Alphabet::standard(2, false);
  const RatExpr e = parse_expression("(X1 X2 - X2 X1)^-1", a);
  const MatrixExact v = eval_expression(e, {MatrixExact::unit(2, 0, 1), MatrixExact::unit(2, 1, 0)}, StarRule::formal);
  EXPECT_EQ(v, (MatrixExact{{1, 0}, {0, -1}}));
}

TEST(Eval, DomainErrorAndInverseLaw) {
  const auto a = Alphabet::standard(1, false);
  try {
    eval_expression(parse_expression("1 + X1^-1", a), {MatrixExact(1, 1)}, StarRule::formal);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.path(), (std::vector<std::size_t>{1}));
    EXPECT_EQ(e.subtree(), "X1^-1");
  }
  CounterRng rng(6);
  for (int t = 0; t < 20; ++t) {
    const MatrixExact m = random_exact(rng, 3, 3, 4);
    try {
      EXPECT_EQ(eval_expression(parse_expression("X1 X1^-1", a), {m}, StarRule::formal), MatrixExact::identity(3));
    } catch (const DomainError&) {
    }
  }
}

TEST(Eval, AgreesWithPolynomialEvaluation) {
  CounterRng rng(8);
  RandomExprOptions opts;
  opts.allow_inverse = false;
  for (int t = 0; t < 60; ++t) {
    const RatExpr e = random_expression(star2(), rng.as_function(), opts);
    const NcPoly p = expand_polynomial(e);
    const std::size_t n = 1 + rng.below(3);
    const std::vector<MatrixExact> pt{random_exact(rng, n, n, 2, true), random_exact(rng, n, n, 2, true)};
    EXPECT_EQ(eval_expression(e, pt, StarRule::adjoint), eval_poly(p, pt, StarRule::adjoint));
  }
}

TEST(Height, KnownValues) {
  EXPECT_EQ(height(E("X1 X2 + 3")), 0u);
  EXPECT_EQ(height(E("X1^-1")), 1u);
  EXPECT_EQ(height(E("(X1 + X2^-1)^-1")), 2u);
}

TEST(Substitute, KnownValues) {
  const RatExpr f = E("1 - X1^* X1");
  const RatExpr r = substitute_letters(f, {{Letter{0, true}, E("X1^-1")}});
  EXPECT_EQ(r, E("1 - X1^-1 X1"));
  const auto a = Alphabet::standard(1, false);
  EXPECT_TRUE(eval_expression(parse_expression("1 - X1^-1 X1", a), {MatrixExact{{2, 1}, {0, 3}}}, StarRule::formal)
                  .is_zero());
  EXPECT_EQ(substitute_letters(f, {}), f);
  const RatExpr x = E("X1");
  const std::map<Letter, RatExpr> inv{{Letter{0, false}, E("X1^-1")}};
  const RatExpr twice = substitute_letters(substitute_letters(x, inv), inv);
  EXPECT_EQ(twice, E("X1^-1^-1"));
  EXPECT_EQ(height(twice), 2u);
}

TEST(Substitute, HeightBound) {
  CounterRng rng(9);
  for (int t = 0; t < 100; ++t) {
    const RatExpr e = random_expression(star2(), rng.as_function());
    const RatExpr img = random_expression(star2(), rng.as_function());
    const RatExpr s = substitute_letters(e, {{Letter{0, false}, img}});
    EXPECT_LE(height(s), height(e) + height(img));
  }
  // equality on nested inverses
  const RatExpr e = E("(X1^-1 + X2)^-1");
  const RatExpr s = substitute_letters(e, {{Letter{0, false}, E("X1^-1")}});
  EXPECT_EQ(height(s), 3u);
}

TEST(Star, KnownValues) {
  EXPECT_EQ(star_expression(E("X1 X2")), E("X2^* X1^*"));
  EXPECT_EQ(star_expression(E("X1^-1")), E("(X1^*)^-1"));
  CounterRng rng(10);
  for (int t = 0; t < 100; ++t) {
    const RatExpr e = random_expression(star2(), rng.as_function());
    EXPECT_EQ(star_expression(star_expression(e)), e);
  }
}

TEST(Star, EvaluationIntertwinesAdjoint) {
  CounterRng rng(12);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 40; ++t) {
    const RatExpr e = random_expression(star2(), rng.as_function());
    const std::size_t n = 1 + rng.below(3);
    const std::vector<MatrixExact> q{random_exact(rng, n, n, 3, true), random_exact(rng, n, n, 3, true)};
    try {
      const MatrixExact v = eval_expression(e, q, StarRule::adjoint);
      const MatrixExact w = eval_expression(star_expression(e), q, StarRule::adjoint);
      EXPECT_EQ(w, v.conjugate_transpose());
      ++checked;
    } catch (const DomainError&) {
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(Expand, RejectsInverse) {
  EXPECT_THROW(expand_polynomial(E("X1 + X2^-1")), DomainError);
  EXPECT_EQ(expand_polynomial(E("(X1 + 1)^2")), parse_polynomial("X1 X1 + 2 X1 + 1", star2()));
  const NcPoly p = parse_polynomial("X1 X2 - 2 X2^* + (1/2 + 1i)", star2());
  EXPECT_EQ(expand_polynomial(poly_to_expr(p)), p);
  (void)xy2;
}
