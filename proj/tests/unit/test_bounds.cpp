#include <gtest/gtest.h>

#include <cmath>

#include <ncnull/bounds.hpp>
#include <ncnull/errors.hpp>

using namespace ncnull;

namespace {

// independent ceiling: smallest k with 2k >= x
Size half_up(Size x) {
  Size k = 0;
  while (2 * k < x) ++k;
  return k;
}

}  // namespace

TEST(RiBound, KnownValues) {
  EXPECT_EQ(ri_bound(1, 1), 1u);
  EXPECT_EQ(ri_bound(2, 3), 6u);
  EXPECT_EQ(ri_bound(1, 2), 1u);
}

TEST(NssBound, KnownIdentities) {
  for (Size u = 1; u <= 10; ++u)
    for (Size v = 1; v <= 10; ++v) {
      EXPECT_EQ(nss_bound(1, 1, u, v), u * v);
      EXPECT_EQ(nss_bound(2, 3, u, v), 6 * u * v);
      for (Size g = 1; g <= 4; ++g) {
        EXPECT_EQ(nss_bound(1, g + 1, u, v), half_up((g + 1) * u * v));
        if (g >= 2) EXPECT_EQ(nss_bound(1, g, u, v), half_up(g * u * v));
      }
    }
}

TEST(NssDegreeBound, KnownValues) {
  EXPECT_EQ(nss_degree_bound(1, 1, 1, 1), 2u);
  EXPECT_EQ(nss_degree_bound(1, 2, 2, 2), 18u);
  for (Size m = 1; m <= 3; ++m)
    for (Size n = 1; n <= 3; ++n)
      for (Size d = 1; d <= 3; ++d)
        for (Size g = 1; g <= 3; ++g) {
          const Size terms = static_cast<Size>(std::pow(g + 1, d));
          EXPECT_GE(nss_degree_bound(m, n, d, g), nss_bound(m, n, d, terms));
        }
}

TEST(StarBound, KnownValues) {
  EXPECT_EQ(star_bound(StarKind::unitaries, 2, 3, 2), 6u);
  EXPECT_EQ(star_bound(StarKind::spherical, 2, 2, 3), 9u);
  EXPECT_THROW(star_bound(StarKind::spherical, 1, 2, 3), GOutOfRange);
  EXPECT_THROW(star_bound(StarKind::partitioned, 1, 2, 3), GOutOfRange);
  EXPECT_EQ(star_bound(StarKind::partitioned, 3, 1, 3), 5u);
}

TEST(StarBound, RealCaseDoubles) {
  for (StarKind k : {StarKind::unitaries, StarKind::spherical, StarKind::partitioned})
    for (Size g = 2; g <= 4; ++g)
      for (Size u = 1; u <= 5; ++u)
        for (Size v = 1; v <= 5; ++v) EXPECT_EQ(star_bound(k, g, u, v, true), 2 * star_bound(k, g, u, v));
}

TEST(PosSize, KnownValues) {
  EXPECT_EQ(pos_size(StarKind::unitaries, 1, 2), 9u);
  EXPECT_EQ(pos_size(StarKind::partitioned, 2, 1), 9u);
  EXPECT_EQ(pos_size(StarKind::spherical, 2, 1), 5u);
  EXPECT_THROW(pos_size(StarKind::unitaries, 3, 40), Overflow);
}

TEST(Bounds, MonotoneOnGrid) {
  for (Size a = 1; a <= 5; ++a)
    for (Size b = 1; b <= 5; ++b)
      for (Size c = 1; c <= 5; ++c)
        for (Size d = 1; d <= 4; ++d) {
          EXPECT_LE(nss_bound(a, b, c, d), nss_bound(a + 1, b, c, d));
          EXPECT_LE(nss_bound(a, b, c, d), nss_bound(a, b + 1, c, d));
          EXPECT_LE(nss_bound(a, b, c, d), nss_bound(a, b, c + 1, d));
          EXPECT_LE(nss_bound(a, b, c, d), nss_bound(a, b, c, d + 1));
          EXPECT_LE(ri_bound(a, b), ri_bound(a + 1, b));
          EXPECT_LE(ri_bound(a, b), ri_bound(a, b + 1));
          if (a >= 2)
            for (StarKind k : {StarKind::unitaries, StarKind::spherical, StarKind::partitioned}) {
              EXPECT_LE(star_bound(k, a, b, c), star_bound(k, a + 1, b, c));
              EXPECT_LE(star_bound(k, a, b, c), star_bound(k, a, b + 1, c));
              EXPECT_LE(star_bound(k, a, b, c), star_bound(k, a, b, c + 1));
              EXPECT_LE(pos_size(k, a, d), pos_size(k, a + 1, d));
              EXPECT_LE(pos_size(k, a, d), pos_size(k, a, d + 1));
            }
        }
}

TEST(Bounds, RejectZeroArguments) {
  EXPECT_THROW(ri_bound(0, 1), Error);
  EXPECT_THROW(nss_bound(1, 1, 0, 1), Error);
  EXPECT_THROW(nss_bound(1ULL << 40, 1ULL << 40, 1ULL << 40, 2), Overflow);
  EXPECT_EQ(to_string(star_kind_from_string("spherical")), "spherical");
  EXPECT_THROW(star_kind_from_string("cubes"), Error);
}
