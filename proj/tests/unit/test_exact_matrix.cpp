#include <gtest/gtest.h>

#include <random>

#include "deckwork/exact_matrix.hpp"
#include "deckwork/graph.hpp"

using namespace deckwork;

namespace {

// Rank by Gaussian elimination over mpq_class.
std::size_t rational_rank(const ExactMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

ExactMatrix random_matrix(std::size_t rows, std::size_t cols, std::size_t true_rank, std::mt19937_64& rng) {
  // Product of rows x r and r x cols integer factors.
  std::uniform_int_distribution<int> d(-4, 4);
  ExactMatrix a(rows, true_rank), b(true_rank, cols), m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < true_rank; ++k) a.at(i, k) = d(rng);
  for (std::size_t k = 0; k < true_rank; ++k)
    for (std::size_t j = 0; j < cols; ++j) b.at(k, j) = d(rng);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < true_rank; ++k) m.at(i, j) += a.at(i, k) * b.at(k, j);
  return m;
}

}  // namespace

TEST(ExactMatrix, Basics) {
  EXPECT_EQ(rank(identity_matrix(5)), 5u);
  EXPECT_EQ(rank(ExactMatrix(0, 4)), 0u);
  EXPECT_EQ(rank(ExactMatrix(3, 3)), 0u);
  ExactMatrix m(0, 3);
  std::vector<BigInt> row{1, 2, 3};
  m.append_row(row, "a");
  m.append_row(row, "b");
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(m.rows(), 2u);
  std::vector<BigInt> bad{1};
  EXPECT_ANY_THROW(m.append_row(bad));
}

TEST(ExactMatrix, RankAgreesWithRationalElimination) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    const std::size_t r = rng() % (std::min(rows, cols) + 1);
    ExactMatrix m = random_matrix(rows, cols, r, rng);
    const std::size_t expect = rational_rank(m);
    EXPECT_EQ(rank(m), expect);
    EXPECT_EQ(rank(m.transposed()), expect);
    // Scaling a row by a nonzero constant and permuting rows keep the rank.
    ExactMatrix scaled = m;
    for (std::size_t c = 0; c < cols; ++c) scaled.at(0, c) *= -7;
    EXPECT_EQ(rank(scaled), expect);
    ExactMatrix flipped(0, cols);
    for (std::size_t i = rows; i-- > 0;) flipped.append_row(m.row(i));
    EXPECT_EQ(rank(flipped), expect);
    IncrementalRank inc(cols);
    for (std::size_t i = 0; i < rows; ++i) inc.add(m.row(i));
    EXPECT_EQ(inc.rank(), expect);
  }
}

TEST(ExactMatrix, LargeEntries) {
  ExactMatrix m(2, 2);
  m.at(0, 0) = BigInt("123456789012345678901234567890");
  m.at(0, 1) = 1;
  m.at(1, 0) = m.at(0, 0) * 3;
  m.at(1, 1) = 3;
  EXPECT_EQ(rank(m), 1u);
  m.at(1, 1) = 4;
  EXPECT_EQ(rank(m), 2u);
}

TEST(ExactMatrix, IncrementalRankReportsIndependence) {
  IncrementalRank inc(3);
  std::vector<BigInt> a{1, 0, 2}, b{2, 0, 4}, c{0, 1, 0};
  EXPECT_TRUE(inc.independent(a));
  EXPECT_TRUE(inc.add(a));
  EXPECT_FALSE(inc.independent(b));
  EXPECT_FALSE(inc.add(b));
  EXPECT_TRUE(inc.add(c));
  EXPECT_EQ(inc.rank(), 2u);
}

TEST(ExactMatrix, Matvec) {
  ExactMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 2) = 2;
  m.at(1, 1) = -1;
  std::vector<BigInt> x{3, 4, 5};
  auto y = matvec(m, x);
  EXPECT_EQ(y[0], 13);
  EXPECT_EQ(y[1], -4);
}

TEST(ExactMatrix, CsvLayout) {
  ExactMatrix m(0, 2);
  std::vector<BigInt> row{24, 0};
  m.append_row(row, "A? A?");
  m.set_col_labels({canonical_key(empty_graph(3)), canonical_key(complete_graph(3))});
  EXPECT_EQ(to_csv(m), "sequence,B?,Bw\nA? A?,24,0\n");
  EXPECT_NE(to_text(m).find("24"), std::string::npos);
}

TEST(ExactMatrix, Stacked) {
  ExactMatrix a = identity_matrix(2);
  ExactMatrix s = a.stacked(a);
  EXPECT_EQ(s.rows(), 4u);
  EXPECT_EQ(rank(s), 2u);
}
