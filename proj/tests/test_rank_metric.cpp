#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "rankmetric/enumerative.hpp"
#include "rankmetric/rank_metric.hpp"
#include "rankmetric/rng.hpp"

using namespace rankmetric;

namespace {

FieldElement random_element(const Field& f, Rng& rng) {
  std::vector<Residue> c(f->m());
  for (auto& v : c) v = static_cast<Residue>(rng.below(f->q()));
  return FieldElement(f, c);
}

RankVector random_vector(const Field& f, std::size_t n, Rng& rng) {
  std::vector<FieldElement> e;
  for (std::size_t j = 0; j < n; ++j) e.push_back(random_element(f, rng));
  return RankVector(e);
}

Basis random_basis(const Field& f, Rng& rng) {
  while (true) {
    std::vector<FieldElement> e;
    for (std::size_t i = 0; i < f->m(); ++i) e.push_back(random_element(f, rng));
    try {
      return Basis(e);
    } catch (const InvalidArgument&) {
    }
  }
}

std::vector<Residue> flat(const QMatrix& m) { return {m.data().begin(), m.data().end()}; }

}  // namespace

TEST(ToMatrix, ZeroVectorGivesZeroMatrix) {
  const Field f = field_new(2, 4);
  EXPECT_TRUE(to_matrix(RankVector::zero(f, 3)).is_zero());
}

TEST(ToMatrix, BasisColumnsGiveIdentity) {
  const Field f = field_new(2, 2);
  const Basis b = Basis::polynomial(f);
  const RankVector x({b.elements()[0], b.elements()[1]}, b);
  EXPECT_EQ(to_matrix(x), QMatrix::identity(2, 2));
}

TEST(ToMatrix, ColumnsAreExpansionsUnderNonPolynomialBasis) {
  const Field f = field_new(3, 3);
  Rng rng(11);
  const Basis b = random_basis(f, rng);
  const RankVector x({b.elements()[2], b.elements()[0]}, b);
  const QMatrix mat = to_matrix(x);
  EXPECT_EQ(mat(2, 0), 1u);
  EXPECT_EQ(mat(0, 1), 1u);
  EXPECT_EQ(rank(x), 2u);
}

TEST(ToMatrix, RoundTripOnRandomVectors) {
  const Field f = field_new(2, 4);
  Rng rng(7);
  const Basis b = random_basis(f, rng);
  for (int i = 0; i < 100; ++i) {
    const RankVector x(random_vector(f, 3, rng).entries(), b);
    EXPECT_EQ(to_vector(to_matrix(x), b), x);
  }
}

TEST(Rank, ZeroHasRankZero) { EXPECT_EQ(rank(RankVector::zero(field_new(2, 4), 4)), 0u); }

TEST(Rank, ProportionalEntriesHaveRankOne) {
  const Field f = field_new(3, 3);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    FieldElement g = random_element(f, rng);
    if (g.is_zero()) continue;
    for (Residue lambda = 1; lambda < 3; ++lambda) EXPECT_EQ(rank(RankVector({g, g.scaled(lambda)})), 1u);
  }
}

TEST(Rank, CensusOfF4SquaredIs1_9_6) {
  const Field f = field_new(2, 2);
  std::vector<std::uint64_t> census(3, 0);
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b)
      ++census[rank(RankVector({FieldElement::from_index(f, a), FieldElement::from_index(f, b)}))];
  EXPECT_EQ(census, (std::vector<std::uint64_t>{1, 9, 6}));
}

TEST(Rank, FullSpaceCensusMatchesSphereVolumes) {
  for (auto [q, m, n] : std::vector<std::tuple<Residue, std::size_t, std::size_t>>{{2, 2, 2}, {2, 3, 3}, {3, 2, 2}, {2, 3, 2}}) {
    const Field f = field_new(q, m);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m * n; ++i) total *= q;
    std::vector<std::uint64_t> census(std::min(m, n) + 1, 0);
    std::uint64_t per_entry = 1;
    for (std::size_t i = 0; i < m; ++i) per_entry *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<FieldElement> e;
      std::uint64_t rest = idx;
      for (std::size_t j = 0; j < n; ++j) {
        e.push_back(FieldElement::from_index(f, rest % per_entry));
        rest /= per_entry;
      }
      ++census[rank(RankVector(e))];
    }
    EXPECT_EQ(census, oracle::rank_census(q, m, n));
    const SpaceParams sp(q, m, n);
    for (std::size_t t = 0; t < census.size(); ++t) EXPECT_EQ(BigCount(census[t]), sphere_volume(sp, long(t)));
  }
}

TEST(Rank, BoundedByWeightAndDimensions) {
  const Field f = field_new(2, 3);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    RankVector x = random_vector(f, 5, rng);
    std::size_t weight = 0;
    for (const auto& e : x.entries()) weight += !e.is_zero();
    EXPECT_LE(rank(x), weight);
    EXPECT_LE(rank(x), 3u);
    EXPECT_EQ(rank(x) == 0, x.is_zero());
  }
}

TEST(Rank, EliminationAgreesWithSpanOracle) {
  Rng rng(99);
  for (Residue q : {2u, 3u, 5u})
    for (int i = 0; i < 100; ++i) {
      const std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
      QMatrix mat(q, rows, cols);
      for (auto& v : mat.data()) v = static_cast<Residue>(rng.below(q) * (rng.below(3) != 0));
      EXPECT_EQ(rank_of(mat), oracle::span_rank(flat(mat), rows, cols, q));
    }
}

TEST(RankDistance, SelfDistanceIsZero) {
  const Field f = field_new(2, 4);
  Rng rng(1);
  const auto x = random_vector(f, 4, rng);
  EXPECT_EQ(rank_distance(x, x), 0u);
}

TEST(RankDistance, DistanceToZeroIsRank) {
  const Field f = field_new(2, 4);
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_vector(f, 4, rng);
    EXPECT_EQ(rank_distance(x, RankVector::zero(f, 4)), rank(x));
  }
}

TEST(RankDistance, MetricAxiomsOnRandomSample) {
  const Field f = field_new(2, 4);
  Rng rng(20);
  std::vector<RankVector> sample;
  for (int i = 0; i < 20; ++i) sample.push_back(random_vector(f, 4, rng));
  for (const auto& x : sample)
    for (const auto& y : sample) {
      EXPECT_EQ(rank_distance(x, y), rank_distance(y, x));
      EXPECT_EQ(rank_distance(x, y) == 0, x == y);
      for (const auto& z : sample) EXPECT_LE(rank_distance(x, z), rank_distance(x, y) + rank_distance(y, z));
    }
}

TEST(RankDistance, TranslationInvariant) {
  const Field f = field_new(3, 2);
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_vector(f, 3, rng), y = random_vector(f, 3, rng), z = random_vector(f, 3, rng);
    EXPECT_EQ(rank_distance(x + z, y + z), rank_distance(x, y));
  }
}

TEST(RankDistance, RejectsMismatch) {
  const Field f = field_new(2, 4);
  EXPECT_THROW(rank_distance(RankVector::zero(f, 3), RankVector::zero(f, 4)), InvalidArgument);
  EXPECT_THROW(rank_distance(RankVector::zero(f, 3), RankVector::zero(field_new(2, 3), 3)), InvalidArgument);
}

TEST(Transpose, ZeroMapsToZero) {
  const Field f = field_new(2, 4);
  const Basis target = Basis::polynomial(field_new(2, 3));
  const auto t = transpose_vector(RankVector::zero(f, 3), target);
  EXPECT_EQ(t.size(), 4u);
  EXPECT_TRUE(t.is_zero());
}

TEST(Transpose, MatrixIsTransposedAndRankPreserved) {
  const Field f = field_new(2, 4);
  const Basis target = Basis::polynomial(field_new(2, 3));
  Rng rng(200);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_vector(f, 3, rng);
    const auto t = transpose_vector(x, target);
    EXPECT_EQ(to_matrix(t), to_matrix(x).transposed());
    EXPECT_EQ(rank(t), rank(x));
  }
}

TEST(Transpose, DoubleTransposeRestoresMatrix) {
  const Field f = field_new(3, 3);
  Rng rng(4);
  const Basis target = random_basis(field_new(3, 2), rng);
  const Basis back = Basis::polynomial(f);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_vector(f, 2, rng);
    EXPECT_EQ(to_matrix(transpose_vector(transpose_vector(x, target), back)), to_matrix(x));
  }
}

TEST(Transpose, IsFqLinear) {
  const Field f = field_new(3, 2);
  const Basis target = Basis::polynomial(field_new(3, 3));
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_vector(f, 3, rng), y = random_vector(f, 3, rng);
    const auto lhs = transpose_vector(FieldElement::from_base(f, 2) * x + y, target);
    const auto rhs = FieldElement::from_base(target.field(), 2) * transpose_vector(x, target) + transpose_vector(y, target);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Transpose, RejectsWrongTargetDegree) {
  const Field f = field_new(2, 4);
  EXPECT_THROW(transpose_vector(RankVector::zero(f, 3), Basis::polynomial(field_new(2, 4))), InvalidArgument);
  EXPECT_THROW(transpose_vector(RankVector::zero(f, 3), Basis::polynomial(field_new(3, 3))), InvalidArgument);
}

TEST(Transpose, LazyCodeViewPreservesRanks) {
  const Field f = field_new(2, 3);
  const Basis target = Basis::polynomial(field_new(2, 2));
  Rng rng(12);
  std::vector<RankVector> code;
  for (int i = 0; i < 10; ++i) code.push_back(random_vector(f, 2, rng));
  std::size_t i = 0;
  for (const auto& t : transposed_code(code, target)) EXPECT_EQ(rank(t), rank(code[i++]));
  EXPECT_EQ(i, code.size());
}

TEST(MinRankDistance, TwoWordCodeIsRankOfWord) {
  const Field f = field_new(2, 4);
  Rng rng(13);
  const auto x = random_vector(f, 3, rng);
  std::vector<RankVector> code{RankVector::zero(f, 3), x};
  EXPECT_EQ(min_rank_distance(code, CodeForm::nonlinear), rank(x));
}

TEST(MinRankDistance, FullSpaceOfLengthOne) {
  const Field f = field_new(2, 2);
  std::vector<RankVector> code;
  for (std::uint64_t a = 0; a < 4; ++a) code.push_back(RankVector({FieldElement::from_index(f, a)}));
  EXPECT_EQ(min_rank_distance(code, CodeForm::nonlinear), 1u);
  EXPECT_EQ(min_rank_distance(code, CodeForm::linear_codewords), 1u);
}

TEST(MinRankDistance, SpanEnumerationMatchesExplicitList) {
  const Field f = field_new(2, 3);
  Rng rng(14);
  std::vector<RankVector> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(random_vector(f, 3, rng));
  // Materialize the F_2-span by hand.
  std::vector<RankVector> words;
  for (unsigned mask = 0; mask < 16; ++mask) {
    RankVector w = RankVector::zero(f, 3);
    for (int i = 0; i < 4; ++i)
      if (mask >> i & 1u) w = w + gens[i];
    words.push_back(w);
  }
  const auto from_basis = min_rank_distance(gens, CodeForm::linear_basis);
  EXPECT_EQ(from_basis, min_rank_distance(words, CodeForm::linear_codewords));
  for (unsigned threads : {1u, 2u, 7u}) EXPECT_EQ(min_rank_distance(gens, CodeForm::linear_basis, threads), from_basis);
}

TEST(MinRankDistance, DegenerateInputsRejected) {
  const Field f = field_new(2, 3);
  std::vector<RankVector> empty;
  EXPECT_THROW(min_rank_distance(empty, CodeForm::nonlinear), InvalidArgument);
  std::vector<RankVector> one{RankVector::zero(f, 2)};
  EXPECT_THROW(min_rank_distance(one, CodeForm::nonlinear), InvalidArgument);
  EXPECT_THROW(min_rank_distance(one, CodeForm::linear_codewords), InvalidArgument);
  EXPECT_THROW(min_rank_distance(one, CodeForm::linear_basis), InvalidArgument);
  std::vector<RankVector> dup{RankVector::zero(f, 2), RankVector::zero(f, 2)};
  EXPECT_THROW(min_rank_distance(dup, CodeForm::nonlinear), InvalidArgument);
}

TEST(MinRankDistance, SpanGuard) {
  FlatGenerators g;
  g.q = 2;
  g.rows = 5;
  g.cols = 5;
  g.words.assign(25, std::vector<Residue>(25, 0));
  EXPECT_THROW(span_min_rank(g), GuardExceeded);
}

TEST(SpanCensus, ThreadCountDoesNotChangeResult) {
  FlatGenerators g;
  g.q = 3;
  g.rows = 3;
  g.cols = 3;
  Rng rng(15);
  for (int i = 0; i < 6; ++i) {
    std::vector<Residue> w(9);
    for (auto& v : w) v = static_cast<Residue>(rng.below(3));
    g.words.push_back(w);
  }
  const auto serial = span_rank_census(g, 1);
  std::uint64_t total = 0;
  for (auto c : serial) total += c;
  EXPECT_EQ(total, 729u);
  for (unsigned threads : {2u, 3u, 16u}) EXPECT_EQ(span_rank_census(g, threads), serial);
}
