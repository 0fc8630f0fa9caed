#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "rankmetric/enumerative.hpp"

using namespace rankmetric;

TEST(SphereVolume, RadiusZeroIsOne) { EXPECT_EQ(sphere_volume(SpaceParams(2, 2, 2), 0), 1); }

TEST(SphereVolume, RankOneBinaryTwoByTwo) {
  EXPECT_EQ(oracle::rank_census(2, 2, 2)[1], 9u);
  EXPECT_EQ(sphere_volume(SpaceParams(2, 2, 2), 1), 9);
}

TEST(SphereVolume, InvertibleBinaryFourByFour) {
  EXPECT_EQ(sphere_volume(SpaceParams(2, 4, 4), 4), 20160);
  EXPECT_EQ(oracle::sphere_product_formula(2, 4, 4, 4), 20160);
}

TEST(SphereVolume, MatchesLiteralProductFormula) {
  for (Residue q : {2u, 3u, 5u})
    for (std::size_t m = 1; m <= 7; ++m)
      for (std::size_t n = 1; n <= 7; ++n)
        for (std::size_t t = 0; t <= std::min(m, n); ++t)
          EXPECT_EQ(sphere_volume(SpaceParams(q, m, n), long(t)), oracle::sphere_product_formula(q, m, n, t));
}

TEST(SphereVolume, MatchesExhaustiveCensus) {
  for (auto [q, m, n] : std::vector<std::tuple<Residue, std::size_t, std::size_t>>{{2, 2, 2}, {2, 3, 3}, {3, 2, 2}, {2, 2, 4}, {5, 1, 2}}) {
    const auto census = oracle::rank_census(q, m, n);
    for (std::size_t t = 0; t < census.size(); ++t) EXPECT_EQ(sphere_volume(SpaceParams(q, m, n), long(t)), census[t]);
  }
}

TEST(SphereVolume, SymmetricInMAndN) {
  for (Residue q : {2u, 3u})
    for (std::size_t m = 1; m <= 6; ++m)
      for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t t = 0; t <= std::min(m, n); ++t)
          EXPECT_EQ(sphere_volume(SpaceParams(q, m, n), long(t)), sphere_volume(SpaceParams(q, n, m), long(t)));
}

TEST(SphereVolume, RadiusOutOfRange) {
  EXPECT_THROW(sphere_volume(SpaceParams(2, 3, 2), 3), InvalidArgument);
  EXPECT_THROW(sphere_volume(SpaceParams(2, 3, 2), -1), InvalidArgument);
  EXPECT_THROW(ball_volume(SpaceParams(2, 3, 2), 3), InvalidArgument);
  EXPECT_THROW(volume_bounds(SpaceParams(2, 3, 2), 3), InvalidArgument);
}

TEST(BallVolume, Examples) {
  EXPECT_EQ(ball_volume(SpaceParams(2, 2, 2), 2), 16);
  EXPECT_EQ(ball_volume(SpaceParams(2, 4, 4), 1), 226);
  EXPECT_EQ(ball_volume(SpaceParams(2, 4, 4), 2), 7576);
  EXPECT_EQ(ball_volume(SpaceParams(2, 4, 4), 3), 45376);
  EXPECT_EQ(sphere_volume(SpaceParams(2, 4, 4), 2), 7350);
  EXPECT_EQ(sphere_volume(SpaceParams(2, 4, 4), 3), 37800);
}

TEST(BallVolume, FullBallIsWholeSpace) {
  for (Residue q : {2u, 3u})
    for (std::size_t m = 1; m <= 6; ++m)
      for (std::size_t n = 1; n <= 6; ++n) {
        const SpaceParams sp(q, m, n);
        EXPECT_EQ(ball_volume(sp, long(sp.min_dim())), space_size(sp));
      }
}

TEST(VolumeBounds, SandwichExample) {
  const auto b = volume_bounds(SpaceParams(2, 2, 2), 1);
  EXPECT_EQ(b.sphere_lo, 2);
  EXPECT_EQ(b.sphere_hi, 16);
  EXPECT_LE(b.sphere_lo, Rational(9));
  EXPECT_GE(b.sphere_hi, Rational(9));
}

TEST(VolumeBounds, RadiusZero) {
  const auto b = volume_bounds(SpaceParams(3, 4, 2), 0);
  EXPECT_EQ(b.sphere_lo, 1);
  EXPECT_EQ(b.sphere_hi, 1);
  EXPECT_EQ(b.ball_lo, 1);
  EXPECT_EQ(b.ball_hi, 3);  // q^1; the stated pair (1, 2) is for q = 2
  const auto b2 = volume_bounds(SpaceParams(2, 4, 2), 0);
  EXPECT_EQ(b2.ball_hi, 2);
}

TEST(VolumeBounds, BallExample) {
  const auto b = volume_bounds(SpaceParams(2, 4, 4), 2);
  EXPECT_EQ(b.ball_lo, 256);
  EXPECT_EQ(b.ball_hi, 32768);
  EXPECT_LE(b.ball_lo, Rational(7576));
  EXPECT_GE(b.ball_hi, Rational(7576));
}

TEST(VolumeBounds, NegativeExponentForUnitSpace) {
  const auto b = volume_bounds(SpaceParams(2, 1, 1), 1);
  EXPECT_EQ(b.sphere_lo, Rational(1, 2));
  EXPECT_LE(b.sphere_lo, Rational(sphere_volume(SpaceParams(2, 1, 1), 1)));
}

TEST(VolumeBounds, HoldEverywhereUpToEight) {
  for (Residue q : {2u, 3u})
    for (std::size_t m = 1; m <= 8; ++m)
      for (std::size_t n = 1; n <= 8; ++n) {
        const SpaceParams sp(q, m, n);
        for (long t = 0; t <= long(sp.min_dim()); ++t) {
          const auto b = volume_bounds(sp, t);
          const Rational s(sphere_volume(sp, t)), ball(ball_volume(sp, t));
          EXPECT_LE(b.sphere_lo, s);
          EXPECT_LE(s, b.sphere_hi);
          EXPECT_LE(b.ball_lo, ball);
          EXPECT_LE(ball, b.ball_hi);
        }
      }
}

TEST(GaussianBinomial, Examples) {
  EXPECT_EQ(gaussian_binomial(5, 0, 2), 1);
  EXPECT_EQ(gaussian_binomial(2, 1, 2), 3);
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
}

TEST(GaussianBinomial, MatchesSubspaceEnumeration) {
  for (auto [n, k, q] : std::vector<std::tuple<long, long, Residue>>{{2, 1, 2}, {4, 2, 2}, {3, 1, 3}, {3, 2, 3}, {4, 1, 2}, {4, 3, 2}, {2, 1, 5}})
    EXPECT_EQ(gaussian_binomial(n, k, q), oracle::subspace_count(std::size_t(n), std::size_t(k), q)) << n << " " << k << " " << q;
}

TEST(GaussianBinomial, ZeroOutsideRange) {
  EXPECT_EQ(gaussian_binomial(3, -1, 2), 0);
  EXPECT_EQ(gaussian_binomial(3, 4, 2), 0);
}

TEST(GaussianBinomial, SymmetricAndDominatesBinomial) {
  for (Residue q : {2u, 3u, 7u})
    for (long n = 0; n <= 12; ++n) {
      BigCount binom = 1;
      for (long k = 0; k <= n; ++k) {
        EXPECT_EQ(gaussian_binomial(n, k, q), gaussian_binomial(n, n - k, q));
        EXPECT_GE(gaussian_binomial(n, k, q), binom);
        binom = binom * (n - k) / (k + 1);
      }
    }
}

TEST(LogView, MatchesDoubleLog) {
  EXPECT_NEAR(log_q(BigCount(1024), 2), 10.0, 1e-12);
  EXPECT_NEAR(log_q(ipow(3, 500), 3), 500.0, 1e-9);
  EXPECT_NEAR(log_q(ipow(2, 4000) * 3, 2), 4000.0 + std::log2(3.0), 1e-9);
  EXPECT_NEAR(to_double(Rational(ipow(2, 2000), ipow(2, 2003))), 0.125, 1e-15);
}
