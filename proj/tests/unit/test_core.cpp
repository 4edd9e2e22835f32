#include <gtest/gtest.h>

#include <ncnull/matrix.hpp>
#include <ncnull/matrix_io.hpp>
#include <ncnull/sparse.hpp>

#include "test_support.hpp"

using namespace ncnull;
using ncnull::testing::random_exact;
using ncnull::testing::random_scalar;

namespace {

MatrixExact M(std::initializer_list<std::initializer_list<Scalar>> rows) { return MatrixExact(rows); }

}  // namespace

TEST(Scalar, ParsesAndNormalizes) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational("/3"), Error);
  EXPECT_EQ(Scalar(parse_rational("2/4")).re().get_den(), 2);
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
  CounterRng rng(11);
  for (int t = 0; t < 300; ++t) {
    const Scalar a = random_scalar(rng, 5, true), b = random_scalar(rng, 5, true), c = random_scalar(rng, 5, true);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + (-a), Scalar());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Scalar(1));
  }
  EXPECT_THROW(Scalar().inverse(), SingularMatrix);
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
}

TEST(Scalar, Literals) {
  EXPECT_EQ(scalar_literal(Scalar(Rational(3, 2))), "3/2");
  EXPECT_EQ(scalar_literal(Scalar(Rational(-3, 2))), "(-3/2)");
  EXPECT_EQ(scalar_literal(Scalar(0, 2)), "(2i)");
  EXPECT_EQ(scalar_literal(Scalar(Rational(1, 2), 1)), "(1/2 + 1i)");
  EXPECT_EQ(scalar_literal(Scalar(Rational(1, 2), -1)), "(1/2 - 1i)");
}

TEST(MatrixProduct, IdentityAndUnits) {
  CounterRng rng(3);
  const MatrixExact a = random_exact(rng, 2, 2, 4, true);
  EXPECT_EQ(MatrixExact::identity(2) * a, a);
  EXPECT_EQ(MatrixExact::unit(2, 0, 1) * MatrixExact::unit(2, 1, 0), MatrixExact::unit(2, 0, 0));
}

TEST(MatrixProduct, PolynomialValueFromProducts) {
  const MatrixExact A1 = M({{1, 1}, {-1, 0}});
  const MatrixExact A2 = M({{1, 0}, {2, -1}});
  const MatrixExact p = A1 * A2 * Scalar(3) - A1 * A1;
  EXPECT_EQ(p, M({{9, -4}, {-2, 1}}));
}

TEST(MatrixProduct, DimensionMismatch) {
  EXPECT_THROW(MatrixExact(2, 3) * MatrixExact(2, 3), DimensionMismatch);
  EXPECT_THROW(MatrixExact(2, 2) + MatrixExact(3, 3), DimensionMismatch);
  EXPECT_THROW(MatrixExact(2, 2, std::vector<Scalar>(3)), DimensionMismatch);
}

TEST(MatrixInverse, KnownValues) {
  EXPECT_EQ(M({{1, 1}, {0, 1}}).inverse(), M({{1, -1}, {0, 1}}));
  EXPECT_EQ(MatrixExact::identity(4).inverse(), MatrixExact::identity(4));
  EXPECT_THROW(M({{1, 1}, {1, 1}}).inverse(), SingularMatrix);
  EXPECT_THROW(MatrixExact(2, 3).inverse(), DimensionMismatch);
}

TEST(MatrixInverse, RandomInvertibleBothSides) {
  CounterRng rng(2024);
  int tested = 0;
  while (tested < 200) {
    const std::size_t n = 1 + rng.below(6);
    const MatrixExact a = random_exact(rng, n, n, 4, rng.below(2) == 1);
    MatrixExact inv;
    try {
      inv = a.inverse();
    } catch (const SingularMatrix&) {
      continue;
    }
    EXPECT_EQ(a * inv, MatrixExact::identity(n));
    EXPECT_EQ(inv * a, MatrixExact::identity(n));
    ++tested;
  }
}

TEST(MatrixInverse, FloatPartialPivoting) {
  MatrixFloat a{{Complex(0, 0), Complex(1, 0)}, {Complex(2, 0), Complex(0, 1)}};
  const MatrixFloat r = a * a.inverse() - MatrixFloat::identity(2);
  EXPECT_LT(max_abs(r), 1e-14);
  MatrixFloat s{{Complex(1, 0), Complex(1, 0)}, {Complex(1, 0), Complex(1, 0)}};
  EXPECT_THROW(s.inverse(), SingularMatrix);
}

TEST(ConjugateTranspose, KnownValues) {
  EXPECT_EQ(M({{Scalar::i()}}).conjugate_transpose(), M({{-Scalar::i()}}));
  const MatrixExact sym = M({{1, 2}, {2, 5}});
  EXPECT_EQ(sym.conjugate_transpose(), sym);
}

TEST(ConjugateTranspose, InvolutionAndAntihomomorphism) {
  CounterRng rng(5);
  for (int t = 0; t < 50; ++t) {
    const MatrixExact a = random_exact(rng, 3, 3, 3, true), b = random_exact(rng, 3, 3, 3, true);
    EXPECT_EQ((a * b).conjugate_transpose(), b.conjugate_transpose() * a.conjugate_transpose());
    EXPECT_EQ(a.conjugate_transpose().conjugate_transpose(), a);
  }
  MatrixFloat f{{Complex(1, 2), Complex(3, -1)}, {Complex(0, 1), Complex(2, 0)}};
  EXPECT_EQ(f.conjugate_transpose()(0, 1), Complex(0, -1));
}

TEST(MatrixHelpers, KronAndBlocks) {
  const MatrixExact a = M({{1, 2}, {3, 4}});
  const MatrixExact k = a.kron_identity(2);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k(0, 2), Scalar(2));
  EXPECT_EQ(k(1, 3), Scalar(2));
  EXPECT_EQ(k(0, 1), Scalar());
  EXPECT_EQ(k.block(2, 2, 2, 2), MatrixExact::identity(2) * Scalar(4));
}

TEST(MatrixJson, RoundTrip) {
  CounterRng rng(8);
  const MatrixExact a = random_exact(rng, 2, 3, 5, true);
  EXPECT_EQ(exact_from_json(to_json(a)), a);
  const auto j = nlohmann::json::parse(R"({"rows":1,"cols":2,"entries":[["1/2","-1"],["3","0"]]})");
  const MatrixExact b = exact_from_json(j);
  EXPECT_EQ(b(0, 0), Scalar(Rational(1, 2), -1));
  const MatrixFloat f = to_float(a);
  const MatrixFloat g = float_from_json(to_json(f));
  EXPECT_LT(max_abs(f - g), 1e-15);
  EXPECT_THROW(exact_from_json(nlohmann::json::parse(R"({"rows":2,"cols":2,"entries":[]})")), DimensionMismatch);
}

TEST(Sparse, AgreesWithDense) {
  CounterRng rng(13);
  for (int t = 0; t < 30; ++t) {
    MatrixExact a = random_exact(rng, 5, 4, 2);
    for (std::size_t i = 0; i < 5; ++i) a(i, rng.below(4)) = Scalar();
    const SparseMatrix s = SparseMatrix::from_dense(a);
    EXPECT_EQ(s.to_dense(), a);
    const MatrixExact b = random_exact(rng, 4, 3, 2), c = random_exact(rng, 2, 5, 2);
    EXPECT_EQ(s.times(b), a * b);
    EXPECT_EQ(s.left_times(c), c * a);
    Vector v(4);
    for (auto& x : v) x = random_scalar(rng);
    const Vector av = s.apply(v);
    for (std::size_t i = 0; i < 5; ++i) {
      Scalar acc;
      for (std::size_t j = 0; j < 4; ++j) acc += a(i, j) * v[j];
      EXPECT_EQ(av[i], acc);
    }
  }
  SparseMatrix dup(2, 2, {{0, 0, Scalar(1)}, {0, 0, Scalar(-1)}, {1, 1, Scalar(2)}});
  EXPECT_EQ(dup.nonzeros(), 1u);
}
