#include <gtest/gtest.h>

#include <cstdio>

#include <ncnull/positivity.hpp>

#include "test_support.hpp"

using namespace ncnull;

namespace {

const RRIdeal& T1() {
  static const RRIdeal t = builtin_ideal(IdealKind::T, 1);
  return t;
}

NcPoly P(const std::string& s) { return parse_polynomial(s, T1().alphabet()); }

SohsCertificate cert(std::vector<NcPoly> squares, NcPoly q) { return {std::move(squares), std::move(q), std::nullopt}; }

}  // namespace

TEST(Certificate, SingleSquare) {
  const auto r = check_certificate(P("X1^* X1"), cert({P("X1")}, P("0")), T1());
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.path, RemainderCheck::zero);
}

TEST(Certificate, GeneratorCombinationViaOracle) {
  const NcPoly f = P("2 - X1^* X1 - X1 X1^*");
  const auto r = check_certificate(f, cert({}, f), T1());
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.path, RemainderCheck::oracle);
}

TEST(Certificate, GeneratorCombinationViaCofactors) {
  const NcPoly f = P("2 - X1^* X1 - X1 X1^*");
  SohsCertificate c = cert({}, f);
  c.cofactors = std::vector<Cofactor>{{P("1"), 0, P("1")}, {P("1"), 1, P("1")}};
  const auto r = check_certificate(f, c, T1());
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.path, RemainderCheck::cofactors);
  c.cofactors = std::vector<Cofactor>{{P("1"), 0, P("1")}};
  EXPECT_FALSE(verify_certificate(f, c, T1()));
  c.cofactors = std::vector<Cofactor>{{P("1"), 7, P("1")}};
  EXPECT_FALSE(verify_certificate(f, c, T1()));
}

TEST(Certificate, SquareExpansion) {
  const NcPoly f = P("(1 - X1)^* (1 - X1)");
  EXPECT_EQ(f, P("1 - X1 - X1^* + X1^* X1"));
  EXPECT_TRUE(verify_certificate(f, cert({P("1 - X1")}, P("0")), T1()));
  EXPECT_FALSE(verify_certificate(f, cert({P("1 + X1")}, P("0")), T1()));
}

TEST(Certificate, RemainderOutsideIdeal) {
  const NcPoly f = P("X1^* X1 + X1");
  const auto r = check_certificate(f, cert({P("X1")}, P("X1")), T1());
  EXPECT_TRUE(r.identity_holds);
  EXPECT_FALSE(r.remainder_ok);
  EXPECT_FALSE(r.valid);
  EXPECT_THROW(verify_certificate(parse_polynomial("X1", Alphabet::standard(2, true)), cert({}, P("0")), T1()),
               AlphabetMismatch);
}

TEST(Certificate, InvariantUnderRotationOfSquares) {
  CounterRng rng(4);
  const auto& alpha = T1().alphabet();
  for (int t = 0; t < 10; ++t) {
    const NcPoly p1 = ncnull::testing::random_poly(rng, alpha, 2, 3), p2 = ncnull::testing::random_poly(rng, alpha, 2, 3);
    const NcPoly f = sum_of_hermitian_squares({p1, p2}, alpha);
    ASSERT_TRUE(verify_certificate(f, cert({p1, p2}, NcPoly(alpha)), T1()));
    // real rotation (3/5, 4/5; -4/5, 3/5) and the unitary (3i/5, 4/5; 4/5, 3i/5)
    const Scalar c(Rational(3, 5)), s(Rational(4, 5)), ci(0, Rational(3, 5));
    EXPECT_TRUE(verify_certificate(f, cert({c * p1 + s * p2, c * p2 - s * p1}, NcPoly(alpha)), T1()));
    EXPECT_TRUE(verify_certificate(f, cert({ci * p1 + s * p2, s * p1 + ci * p2}, NcPoly(alpha)), T1()));
    EXPECT_FALSE(verify_certificate(f, cert({p1 + p2, p1 - p2}, NcPoly(alpha)), T1()));
  }
}

TEST(Gram, SingleSquare) {
  const GramProblem g = gram_constraints(P("X1^* X1"), 1, P("0"));
  ASSERT_EQ(g.basis.size(), 3u);
  MatrixExact G(3, 3);
  G(1, 1) = Scalar(1);  // basis order: 1, X1, X1^*
  EXPECT_EQ(g.basis[1], Word::of(Letter{0, false}));
  EXPECT_TRUE(gram_satisfies(g, G));
  EXPECT_TRUE(is_positive_semidefinite(G));
}

TEST(Gram, ShiftedSquareFixture) {
  const NcPoly f = P("(1 - X1)^* (1 - X1)");
  const GramProblem g = gram_constraints(f, 1, P("0"));
  // restricted to W = [1, X1], padded with zeros for X1^*
  MatrixExact G(3, 3);
  G(0, 0) = Scalar(1);
  G(0, 1) = Scalar(-1);
  G(1, 0) = Scalar(-1);
  G(1, 1) = Scalar(1);
  EXPECT_TRUE(gram_satisfies(g, G));
  EXPECT_TRUE(is_positive_semidefinite(G));
  EXPECT_EQ(gram_from_squares(g, {P("1 - X1")}), G);
}

TEST(Gram, NegativeConstantIsInfeasibleForPsd) {
  const GramProblem g = gram_constraints(P("-1"), 1, P("0"));
  // the empty word only arises from (1, 1)
  for (const auto& c : g.constraints)
    if (c.word.empty()) {
      ASSERT_EQ(c.entries.size(), 1u);
      EXPECT_EQ(c.rhs, Scalar(-1));
    }
  MatrixExact G(3, 3);
  G(0, 0) = Scalar(-1);
  EXPECT_TRUE(gram_satisfies(g, G));
  EXPECT_FALSE(is_positive_semidefinite(G));
}

TEST(Gram, Errors) {
  EXPECT_THROW(gram_constraints(P("X1^* X1 X1"), 1, P("0")), DegreeTooHigh);
  EXPECT_THROW(gram_constraints(parse_polynomial("X1", Alphabet::standard(1, false)), 1,
                                parse_polynomial("0", Alphabet::standard(1, false))),
               AlphabetMismatch);
}

TEST(Gram, CorrespondenceOnRandomSquares) {
  CounterRng rng(8);
  for (std::size_t g = 1; g <= 2; ++g) {
    const auto alpha = Alphabet::standard(g, true);
    for (std::size_t d = 1; d <= 2; ++d)
      for (int t = 0; t < 4; ++t) {
        std::vector<NcPoly> ps;
        for (int i = 0; i < 3; ++i) ps.push_back(ncnull::testing::random_poly(rng, alpha, d, 3));
        const NcPoly f = sum_of_hermitian_squares(ps, alpha);
        const GramProblem prob = gram_constraints(f, d, NcPoly(alpha));
        const MatrixExact G = gram_from_squares(prob, ps);
        EXPECT_TRUE(gram_satisfies(prob, G));
        EXPECT_TRUE(is_positive_semidefinite(G));
      }
  }
}

TEST(Gram, HeaderCountsAndRhs) {
  for (std::size_t g = 1; g <= 2; ++g) {
    const auto alpha = Alphabet::standard(g, true);
    for (std::size_t d = 0; d <= 2; ++d) {
      std::size_t dim = 0, pw = 1;
      for (std::size_t k = 0; k <= d; ++k, pw *= 2 * g) dim += pw;
      const NcPoly f = parse_polynomial("1", alpha);
      const GramProblem p = gram_constraints(f, d, f);
      EXPECT_EQ(p.basis.size(), dim);
      const std::string text = format_gram(p);
      EXPECT_EQ(text.substr(0, text.find('\n')), "gram d " + std::to_string(d) + " basis " + std::to_string(dim) +
                                                      " constraints " + std::to_string(p.constraints.size()));
      // f = q gives an all-zero right-hand side
      for (const auto& c : p.constraints) EXPECT_TRUE(c.rhs.is_zero());
    }
  }
  const GramProblem nz = gram_constraints(P("X1^* X1"), 1, P("0"));
  std::size_t nonzero = 0;
  for (const auto& c : nz.constraints) nonzero += !c.rhs.is_zero();
  EXPECT_EQ(nonzero, 1u);
}

TEST(Gram, ExportImportRoundTrip) {
  const auto alpha = Alphabet::standard(2, true);
  const GramProblem p = gram_constraints(parse_polynomial("(1/2 + 1i) X1^* X2 + (1/2 - 1i) X2^* X1 + 3", alpha), 1,
                                         NcPoly(alpha));
  EXPECT_EQ(parse_gram(format_gram(p)), p);
  const std::string path = ::testing::TempDir() + "gram_roundtrip.txt";
  export_gram(p, path);
  EXPECT_EQ(import_gram(path), p);
  std::remove(path.c_str());
  EXPECT_THROW(parse_gram("nonsense"), SpecError);
}

TEST(Probe, KnownValues) {
  const SampleDomain u{DomainKind::unitaries, 1};
  EXPECT_NEAR(positivity_probe(P("X1^* X1"), u, 1, 4, 10, 1).min_eigenvalue, 1.0, 1e-10);
  EXPECT_NEAR(positivity_probe(P("2 - X1^* X1 - X1 X1^*"), u, 1, 4, 10, 1).min_eigenvalue, 0.0, 1e-10);
  const ProbeReport neg = positivity_probe(P("-X1^* X1"), u, 1, 4, 10, 1);
  EXPECT_NEAR(neg.min_eigenvalue, -1.0, 1e-10);
  EXPECT_FALSE(neg.positive);
}

TEST(Probe, CertificateSoundness) {
  const SampleDomain u{DomainKind::unitaries, 1};
  const std::vector<std::pair<NcPoly, SohsCertificate>> fixtures{
      {P("X1^* X1"), cert({P("X1")}, P("0"))},
      {P("2 - X1^* X1 - X1 X1^*"), cert({}, P("2 - X1^* X1 - X1 X1^*"))},
      {P("(1 - X1)^* (1 - X1)"), cert({P("1 - X1")}, P("0"))},
      {P("3 - X1 - X1^*"), cert({P("1 - X1"), P("1")}, P("1 - X1^* X1"))},
  };
  for (const auto& [f, c] : fixtures) {
    ASSERT_TRUE(verify_certificate(f, c, T1())) << f.to_string();
    EXPECT_GE(positivity_probe(f, u, 1, 8, 10, 2).min_eigenvalue, -1e-8) << f.to_string();
  }
}
