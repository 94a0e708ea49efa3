#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "shieldbic/cheng_church.hpp"

using namespace shieldbic;

namespace {

ExpressionMatrix randomMatrix(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(0.0, 800.0);
  std::vector<double> v(n * m);
  for (auto& x : v) x = d(rng);
  return ExpressionMatrix::fromReal(n, m, v);
}

bool subset(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// No outside line clearly qualifies for addition.
void expectAdditionMaximal(const ExpressionMatrix& m, const Bicluster& b) {
  const double h = oracle::realMsr(m, b.rows, b.cols);
  const double tol = 1e-9 * (1.0 + h);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!b.containsRow(i)) EXPECT_GT(oracle::outsideRowScore(m, b.rows, b.cols, i), h - tol) << "row " << i;
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!b.containsCol(j)) EXPECT_GT(oracle::outsideColScore(m, b.rows, b.cols, j), h - tol) << "col " << j;
  }
}

}  // namespace

TEST(GreedyParams, Validation) {
  EXPECT_NO_THROW(GreedyParams{}.validate());
  EXPECT_THROW((GreedyParams{-1.0, 1.2, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((GreedyParams{1.0, 1.0, 0}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((GreedyParams{0.0, 1.01, 0}.validate()));
}

TEST(MultipleNodeDeletion, RemovesOutlierLine) {
  const auto m = ExpressionMatrix::fromRows({{0, 0, 0}, {0, 0, 0}, {0, 0, 100}});
  const GreedyParams p{1.0, 1.2, 0};
  const auto whole = wholeMatrix(m);
  const double h = oracle::msr(m, whole.rows, whole.cols);
  const auto out = multipleNodeDeletion(m, whole, p);
  EXPECT_EQ(out.msr, 0.0);
  EXPECT_EQ(oracle::msr(m, out.rows, out.cols), 0.0);
  EXPECT_TRUE(!out.containsRow(2) || !out.containsCol(2));
  // Row 2 goes in the first rows pass, so its score cleared the threshold.
  EXPECT_FALSE(out.containsRow(2));
  EXPECT_GT(oracle::rowScore(m, whole.rows, whole.cols, 2), 1.2 * h);
}

TEST(MultipleNodeDeletion, NoOpWithinBudget) {
  const auto m = ExpressionMatrix::fromRows({{1, 2}, {3, 5}});
  const auto b = wholeMatrix(m);
  EXPECT_EQ(multipleNodeDeletion(m, b, GreedyParams{0.0625, 1.2, 0}), b);
}

TEST(MultipleNodeDeletion, OnlyShrinksAndEndsInBudgetOrStalls) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto m = randomMatrix(20, 10, rng);
    const auto whole = wholeMatrix(m);
    const auto out = multipleNodeDeletion(m, whole, GreedyParams{300.0, 1.2, 0});
    EXPECT_TRUE(subset(out.rows, whole.rows));
    EXPECT_TRUE(subset(out.cols, whole.cols));
    if (out.msr > 300.0) {
      const auto s = scoreLines(m, out, ScoreForm::Modulus);
      const bool rows_stuck = std::none_of(s.rows.begin(), s.rows.end(), [&](double x) { return x > 1.2 * s.total; }) ||
                              std::all_of(s.rows.begin(), s.rows.end(), [&](double x) { return x > 1.2 * s.total; });
      EXPECT_TRUE(rows_stuck);
    }
  }
}

TEST(SingleNodeDeletion, OutlierRowGoesFirst) {
  const auto m = ExpressionMatrix::fromRows({{5, 5, 5}, {5, 5, 50}, {5, 5, 5}});
  const auto out = singleNodeDeletion(m, wholeMatrix(m), GreedyParams{0.1, 1.2, 0});
  // Row 1 and column 2 tie; rows win.
  EXPECT_EQ(out.rows, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(out.cols, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(out.msr, 0.0);
}

TEST(SingleNodeDeletion, TwoByTwoEndsAtSingleLine) {
  const auto m = ExpressionMatrix::fromRows({{1, 2}, {3, 5}});
  const auto out = singleNodeDeletion(m, wholeMatrix(m), GreedyParams{0.01, 1.2, 0});
  EXPECT_EQ(out.rows, (std::vector<std::size_t>{1}));
  EXPECT_EQ(out.cols, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(out.msr, 0.0);
}

TEST(SingleNodeDeletion, NoOpWithinBudget) {
  std::mt19937_64 rng(4);
  const auto m = randomMatrix(5, 5, rng);
  const auto b = makeBicluster(m, {0, 1}, {2});
  EXPECT_EQ(singleNodeDeletion(m, b, GreedyParams{0.0, 1.2, 0}), b);
}

TEST(NodeAddition, ConstantMatrixGrowsToFull) {
  const auto m = ExpressionMatrix::fromReal(4, 5, std::vector<double>(20, 7.5));
  const auto out = nodeAddition(m, makeBicluster(m, {1, 2}, {0, 3}));
  EXPECT_TRUE(out.sameCells(wholeMatrix(m)));
  EXPECT_EQ(out.msr, 0.0);
}

TEST(NodeAddition, FixedPointLeavesBiclusterAlone) {
  const auto m = ExpressionMatrix::fromRows({{0, 0, 0}, {0, 0, 0}, {0, 0, 100}});
  const auto b = makeBicluster(m, {0, 1}, {0, 1, 2});
  EXPECT_EQ(nodeAddition(m, b), b);
}

TEST(NodeAddition, RecoversPlantedBlockColumns) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const oracle::Block block{oracle::randomSubset(60, 15, rng), oracle::randomSubset(20, 6, rng)};
    const auto planted = oracle::plantAdditiveBlocks(60, 20, {block}, 0.0, seed);
    const auto seed_b = makeBicluster(planted.matrix, {block.rows.begin(), block.rows.begin() + 5},
                                      {block.cols.begin(), block.cols.begin() + 3});
    const auto out = nodeAddition(planted.matrix, seed_b);
    EXPECT_TRUE(subset(block.cols, out.cols)) << "seed " << seed;
    EXPECT_TRUE(subset(block.rows, out.rows)) << "seed " << seed;
    expectAdditionMaximal(planted.matrix, out);
  }
}

TEST(NodeAddition, ScoreDoesNotRiseAndResultIsMaximal) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    const auto m = randomMatrix(12, 8, rng);
    const auto b = makeBicluster(m, oracle::randomSubset(12, 4, rng), oracle::randomSubset(8, 3, rng));
    const auto out = nodeAddition(m, b);
    EXPECT_TRUE(subset(b.rows, out.rows));
    EXPECT_TRUE(subset(b.cols, out.cols));
    EXPECT_LE(msr(m, out), b.msr + 1e-9 * (1.0 + b.msr));
    EXPECT_NEAR(out.msr, msr(m, out), 1e-9 * (1.0 + out.msr));
    expectAdditionMaximal(m, out);
  }
}

TEST(MaskRandom, RangeDeterminismAndUntouchedEntries) {
  std::mt19937_64 rng(7);
  const auto m = randomMatrix(10, 6, rng);
  const auto b = makeBicluster(m, {1, 4, 5}, {0, 3});
  const GreedyParams p{300.0, 1.2, 99};
  const auto a1 = maskRandom(m, b, p);
  const auto a2 = maskRandom(m, b, p);
  EXPECT_EQ(a1, a2);
  EXPECT_NE(a1, maskRandom(m, b, GreedyParams{300.0, 1.2, 100}));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (b.containsRow(i) && b.containsCol(j)) {
        EXPECT_GE(a1(i, j).real(), m.minReal());
        EXPECT_LE(a1(i, j).real(), m.maxReal());
        EXPECT_EQ(a1(i, j).imag(), 0.0);
      } else {
        EXPECT_EQ(a1(i, j), m(i, j));
      }
    }
  }
}

TEST(MaskRandom, DegenerateRange) {
  const auto m = ExpressionMatrix::fromReal(2, 2, std::vector<double>(4, 3.0));
  std::mt19937_64 rng(1);
  EXPECT_EQ(maskRandom(m, wholeMatrix(m), ValueRange{3.0, 3.0}, rng), m);
  EXPECT_THROW(maskRandom(m, wholeMatrix(m), ValueRange{4.0, 3.0}, rng), std::invalid_argument);
}

TEST(FindBicluster, ConstantAndAdditiveMatricesComeBackWhole) {
  const auto c = ExpressionMatrix::fromReal(5, 4, std::vector<double>(20, 2.0));
  EXPECT_TRUE(findBicluster(c, GreedyParams{}).sameCells(wholeMatrix(c)));
  const auto a = ExpressionMatrix::fromRows({{1, 2}, {3, 4}});
  for (double delta : {0.0, 1.0, 300.0}) {
    const auto out = findBicluster(a, GreedyParams{delta, 1.2, 0});
    EXPECT_TRUE(out.sameCells(wholeMatrix(a)));
    EXPECT_EQ(out.msr, 0.0);
  }
}

TEST(FindBicluster, OutputIsWithinBudget) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    const auto m = randomMatrix(30, 12, rng);
    for (double delta : {0.0, 50.0, 300.0, 5000.0}) {
      const auto out = findBicluster(m, GreedyParams{delta, 1.2, 0});
      validateBicluster(m, out);
      EXPECT_LE(oracle::msr(m, out.rows, out.cols), delta + 1e-9 * (1.0 + delta));
      EXPECT_LE(out.msr, delta);
      expectAdditionMaximal(m, out);
    }
  }
}

TEST(FindBicluster, IsDeterministic) {
  std::mt19937_64 rng(9);
  const auto m = randomMatrix(40, 10, rng);
  EXPECT_EQ(findBicluster(m, GreedyParams{}), findBicluster(m, GreedyParams{}));
}
