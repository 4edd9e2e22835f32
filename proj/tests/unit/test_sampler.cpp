#include <gtest/gtest.h>

#include <ncnull/ideals.hpp>
#include <ncnull/sampler.hpp>

using namespace ncnull;

TEST(HaarUnitary, ResidualAndDeterminism) {
  for (std::size_t n : {1u, 2u, 5u, 16u, 64u}) {
    const MatrixFloat u = haar_unitary(n, 7);
    EXPECT_LE(unitary_residual(u), kFloatTolerance) << n;
    EXPECT_EQ(u, haar_unitary(n, 7));
  }
  EXPECT_NEAR(std::abs(haar_unitary(1, 3)(0, 0)), 1.0, 1e-14);
  EXPECT_NE(haar_unitary(3, 1), haar_unitary(3, 2));
}

TEST(SphericalIsometry, Residual) {
  for (std::size_t g = 1; g <= 3; ++g)
    for (std::size_t n : {1u, 4u, 32u}) {
      const auto a = spherical_isometry_tuple(g, n, 11);
      ASSERT_EQ(a.size(), g);
      EXPECT_LE(spherical_residual(a), kFloatTolerance);
    }
  EXPECT_LE(unitary_residual(spherical_isometry_tuple(1, 6, 2)[0]), kFloatTolerance);
  const auto alpha = Alphabet::standard(3, true);
  const NcPoly gen = parse_polynomial("1 - X1^* X1 - X2^* X2 - X3^* X3", alpha);
  EXPECT_LE(max_abs(eval_poly(gen, spherical_isometry_tuple(3, 5, 4), StarRule::adjoint)), kFloatTolerance);
}

TEST(PartitionedUnitary, Residual) {
  for (std::size_t g = 1; g <= 3; ++g)
    for (std::size_t n : {1u, 3u, 32u}) EXPECT_LE(partitioned_residual(partitioned_unitary(g, n, 5)), kFloatTolerance);
  EXPECT_EQ(partitioned_unitary(1, 4, 9)[0][0], haar_unitary(4, 9));
  EXPECT_EQ(partitioned_unitary(2, 3, 9)[1][0], partitioned_unitary(2, 3, 9)[1][0]);
}

TEST(XgnPoint, Residual) {
  for (std::size_t g = 1; g <= 3; ++g)
    for (std::size_t n : {1u, 4u, 32u}) {
      const auto [a, b] = xgn_point(g, n, 13);
      EXPECT_LE(xgn_residual(a, b), kFloatTolerance) << g << " " << n;
    }
  const auto [a, b] = xgn_point(1, 3, 2);
  EXPECT_LE(max_abs(a[0] - b[0].inverse()), 1e-10);
  EXPECT_EQ(xgn_point(2, 3, 8).first[1], xgn_point(2, 3, 8).first[1]);
}

TEST(HermitianEigenvalues, KnownSpectra) {
  const MatrixFloat d{{Complex(2), Complex(0)}, {Complex(0), Complex(-1)}};
  const auto ev = hermitian_eigenvalues(d);
  EXPECT_NEAR(ev[0], -1.0, 1e-12);
  EXPECT_NEAR(ev[1], 2.0, 1e-12);
  const MatrixFloat h{{Complex(1), Complex(0, -1)}, {Complex(0, 1), Complex(1)}};
  const auto eh = hermitian_eigenvalues(h);
  EXPECT_NEAR(eh[0], 0.0, 1e-12);
  EXPECT_NEAR(eh[1], 2.0, 1e-12);
  // antisymmetric part is dropped
  const MatrixFloat k{{Complex(0), Complex(1)}, {Complex(-1), Complex(0)}};
  for (double e : hermitian_eigenvalues(k)) EXPECT_NEAR(e, 0.0, 1e-12);
  CounterRng rng(3);
  const MatrixFloat u = haar_unitary(6, rng);
  MatrixFloat diag(6, 6);
  for (std::size_t i = 0; i < 6; ++i) diag(i, i) = Complex(static_cast<double>(i) - 2.5);
  const auto er = hermitian_eigenvalues(u * diag * u.conjugate_transpose());
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(er[i], static_cast<double>(i) - 2.5, 1e-9);
}

TEST(SamplePoint, BindsToAlphabet) {
  CounterRng rng(1);
  const auto star = Alphabet::standard(2, true);
  const auto p = sample_point({DomainKind::unitaries, 2}, *star, 3, rng);
  EXPECT_EQ(p.matrices.size(), 2u);
  EXPECT_EQ(p.rule, StarRule::adjoint);
  EXPECT_THROW(sample_point({DomainKind::unitaries, 3}, *star, 3, rng), SizeMismatch);
  EXPECT_THROW(sample_point({DomainKind::xgn, 1}, *star, 3, rng), SizeMismatch);
  const auto grid = Alphabet::named({"X11", "X12", "X21", "X22"}, true);
  EXPECT_EQ(sample_point({DomainKind::partitioned, 2}, *grid, 2, rng).matrices.size(), 4u);
  const auto plain = Alphabet::standard(4, false);
  const auto x = sample_point({DomainKind::xgn, 2}, *plain, 2, rng);
  EXPECT_EQ(x.rule, StarRule::formal);
  EXPECT_LE(xgn_residual({x.matrices[0], x.matrices[1]}, {x.matrices[2], x.matrices[3]}), kFloatTolerance);
}

TEST(ExactSamples, AreExactlyStructured) {
  CounterRng rng(2);
  for (std::size_t n = 1; n <= 5; ++n) {
    const MatrixExact u = exact_unitary(n, rng);
    EXPECT_EQ(u * u.conjugate_transpose(), MatrixExact::identity(n));
  }
  const auto star = Alphabet::standard(2, true);
  const auto s = sample_exact_point({DomainKind::spherical, 2}, *star, 3, rng);
  EXPECT_EQ(s.matrices[0].conjugate_transpose() * s.matrices[0] + s.matrices[1].conjugate_transpose() * s.matrices[1],
            MatrixExact::identity(3));
  EXPECT_THROW(sample_exact_point({DomainKind::xgn, 1}, *Alphabet::standard(2, false), 2, rng), Error);
}

TEST(Falsify, CommutatorOnUnitaries) {
  const auto alpha = Alphabet::standard(2, true);
  const NcPoly f = parse_polynomial("X1 X2 - X2 X1", alpha);
  FalsifyOptions o;
  o.max_size = 2;
  o.seed = 3;
  const auto w = falsify(f, {DomainKind::unitaries, 2}, o);
  ASSERT_TRUE(w.has_value());
  EXPECT_LE(w->size, 2u);
  EXPECT_GT(w->score, o.tol);
  // explicit pair: swap and diag(1, -1)
  const MatrixExact swap{{0, 1}, {1, 0}}, d{{1, 0}, {0, -1}};
  EXPECT_EQ(eval_poly(f, {swap, d}, StarRule::adjoint), (MatrixExact{{0, -2}, {2, 0}}));
  // replay from the recorded seed and trial
  CounterRng rng(w->seed, trial_stream(w->size, w->trial));
  const auto p = sample_point({DomainKind::unitaries, 2}, *alpha, w->size, rng);
  EXPECT_EQ(p.matrices, w->point);
}

TEST(Falsify, IdentitiesOnUnitariesHaveNoWitness) {
  const auto alpha = Alphabet::standard(1, true);
  FalsifyOptions o;
  o.max_size = 5;
  o.trials = 20;
  EXPECT_FALSE(falsify(parse_polynomial("1 - X1^* X1", alpha), {DomainKind::unitaries, 1}, o));
  o.mode = FalsifyMode::negative_eigenvalue;
  EXPECT_FALSE(falsify(parse_polynomial("2 - X1^* X1 - X1 X1^*", alpha), {DomainKind::unitaries, 1}, o));
  EXPECT_TRUE(falsify(parse_polynomial("-X1^* X1", alpha), {DomainKind::unitaries, 1}, o));
}

TEST(Falsify, RationalExpressions) {
  const auto alpha = Alphabet::standard(1, true);
  FalsifyOptions o;
  o.max_size = 4;
  o.trials = 10;
  EXPECT_FALSE(falsify(parse_expression("X1^* - X1^-1", alpha), {DomainKind::unitaries, 1}, o));
  EXPECT_TRUE(falsify(parse_expression("X1 - X1^-1", alpha), {DomainKind::unitaries, 1}, o));
}

TEST(Falsify, NoWitnessForIdealMembers) {
  FalsifyOptions o;
  o.max_size = 3;
  o.trials = 5;
  for (IdealKind k : {IdealKind::T, IdealKind::S, IdealKind::U}) {
    const RRIdeal I = builtin_ideal(k, 2);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const NcPoly f = random_ideal_element(I, seed, {2, 2, false});
      EXPECT_FALSE(falsify(f, I.domain(), o)) << to_string(k) << " " << f.to_string();
    }
  }
}

TEST(ZeroDivisor, Fixtures) {
  const auto [a, b] = zero_divisor_witness(1, 1);
  EXPECT_EQ(a, MatrixExact::unit(3, 0, 1));
  EXPECT_EQ(b, MatrixExact::unit(3, 2, 0));
  EXPECT_TRUE((a * b).is_zero());
  EXPECT_EQ(b * a, MatrixExact::unit(3, 2, 1));
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n) {
      if (m + n == 0) continue;
      const auto [x, y] = zero_divisor_witness(m, n);
      EXPECT_EQ(x.rows(), m + n + 1);
      EXPECT_TRUE(check_zero_divisor_relations(x, y, m, n)) << m << " " << n;
    }
  EXPECT_THROW(zero_divisor_witness(0, 0), Error);
}
