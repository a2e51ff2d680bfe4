#include <gtest/gtest.h>

#include <random>

#include "necklace/exact_linalg.hpp"
#include "oracles.hpp"

using namespace necklace;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> entry(lo, hi);
  ExactMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

std::vector<std::vector<Rational>> rows_of(const ExactMatrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

SkewMatrix random_skew(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> entry(-4, 4);
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = entry(rng);
      m(j, i) = -m(i, j);
    }
  return SkewMatrix(m);
}

}  // namespace

TEST(WordMatrix, Examples) {
  EXPECT_EQ(word_matrix(Word{0, 1, 2}), ExactMatrix::identity(3));
  EXPECT_EQ(word_matrix(Word{0, 1, 2, 0}), (ExactMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  EXPECT_EQ(word_matrix(Word{0, 0}), (ExactMatrix{{1}, {1}}));
}

TEST(NormalizedWordMatrix, Examples) {
  const Rational h(1, 2);
  const Rational t(1, 3);
  EXPECT_EQ(normalized_word_matrix(Word{0, 1, 2}), ExactMatrix::identity(3));
  EXPECT_EQ(normalized_word_matrix(Word{0, 1, 2, 0}), (ExactMatrix{{h, 0, 0}, {0, 1, 0}, {0, 0, 1}, {h, 0, 0}}));
  EXPECT_EQ(normalized_word_matrix(Word{0, 0, 0}), (ExactMatrix{{t}, {t}, {t}}));
}

TEST(ApplyAsOperator, Examples) {
  const Rational t(1, 3);
  const std::vector<Rational> centre{t, t, t};
  EXPECT_EQ(apply_as_operator(ExactMatrix::identity(3), centre), centre);
  EXPECT_EQ(apply_as_operator(normalized_word_matrix(Word{0, 1, 2, 0}), centre),
            (std::vector<Rational>{Rational(1, 6), t, t, Rational(1, 6)}));
  const std::vector<Rational> one{1};
  EXPECT_EQ(apply_as_operator(normalized_word_matrix(Word{0, 0, 0}), one), centre);
  const std::vector<Rational> short_point{1};
  EXPECT_THROW(apply_as_operator(ExactMatrix::identity(3), short_point), error);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(ExactMatrix::identity(3)), 1);
  EXPECT_EQ(determinant(ExactMatrix{{0, 1}, {1, 0}}), -1);
  const int rows[] = {1, 2, 3};
  EXPECT_EQ(determinant(normalized_word_matrix(Word{0, 1, 2, 0}).select_rows(rows)), Rational(1, 2));
  EXPECT_THROW(determinant(ExactMatrix(2, 3)), error);
}

TEST(Determinant, MatchesLeibniz) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const auto m = random_matrix(rng, n, n);
    ASSERT_EQ(determinant(m), oracle::leibniz_det(rows_of(m)));
  }
}

TEST(Rank, Basics) {
  EXPECT_EQ(rank(ExactMatrix::identity(4)), 4);
  EXPECT_EQ(rank(ExactMatrix{{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(rank(ExactMatrix(3, 2)), 0);
}

TEST(SumMaximalMinors, Examples) {
  EXPECT_EQ(sum_maximal_minors(ExactMatrix::identity(3)), 1);
  EXPECT_EQ(sum_maximal_minors(normalized_word_matrix(Word{0, 1, 2, 0})), 1);
  EXPECT_EQ(sum_maximal_minors(normalized_word_matrix(Word{0, 1, 0, 1})), Rational(1, 2));
  EXPECT_THROW(sum_maximal_minors(ExactMatrix(2, 3)), error);
}

TEST(SumMaximalMinors, EqualsRationalParityOfWords) {
  for (int len = 1; len <= 7; ++len)
    for (int k1 = 1; k1 <= std::min(len, 4); ++k1)
      for (const auto& letters : oracle::surjective_words(len, k1)) {
        const Word w(letters);
        ASSERT_EQ(sum_maximal_minors(normalized_word_matrix(w)), rational_parity(w)) << w.str();
        ASSERT_EQ(matrix_parity(word_matrix(w)), rational_parity(w)) << w.str();
      }
}

TEST(Pfaffian, Examples) {
  EXPECT_EQ(pfaffian(SkewMatrix(ExactMatrix{{0, 5}, {-5, 0}})), 5);
  const Rational a01 = 2, a02 = 3, a03 = 5, a12 = 7, a13 = 11, a23 = 13;
  const SkewMatrix m(ExactMatrix{{0, a01, a02, a03}, {-a01, 0, a12, a13}, {-a02, -a12, 0, a23}, {-a03, -a13, -a23, 0}});
  EXPECT_EQ(pfaffian(m), a01 * a23 - a02 * a13 + a03 * a12);
  EXPECT_EQ(pfaffian(SkewMatrix(ExactMatrix(0, 0))), 1);
  try {
    pfaffian(SkewMatrix(ExactMatrix(3, 3)));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::odd_size);
  }
  EXPECT_THROW(SkewMatrix(ExactMatrix{{0, 1}, {1, 0}}), error);
}

TEST(Pfaffian, SquareIsDeterminantAndMatchesMatchings) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * (1 + trial % 4);
    const auto s = random_skew(rng, n);
    const Rational pf = pfaffian(s);
    ASSERT_EQ(pf * pf, determinant(s.matrix()));
    ASSERT_EQ(pf, oracle::matching_pfaffian(rows_of(s.matrix())));
  }
}

TEST(OkadaMatrix, Examples) {
  const auto m = okada_matrix(ExactMatrix::identity(3));
  EXPECT_EQ(m.size(), 4);
  EXPECT_EQ(m(0, 1), 1);
  EXPECT_EQ(m(0, 2), 1);
  EXPECT_EQ(m(0, 3), 1);
  EXPECT_EQ(pfaffian(m), 1);
  const auto l = okada_matrix(normalized_word_matrix(Word{0, 1, 2, 0}));
  EXPECT_EQ(l.size(), 4);
  EXPECT_EQ(pfaffian(l), 1);
  EXPECT_THROW(okada_matrix(ExactMatrix(2, 3)), error);
}

TEST(OkadaMatrix, PfaffianEqualsMinorSum) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int cols = 1 + trial % 5;
    const int rows = cols + static_cast<int>(rng() % (8 - cols));
    const auto x = random_matrix(rng, rows, cols);
    ASSERT_EQ(pfaffian(okada_matrix(x)), sum_maximal_minors(x)) << x.str();
  }
}

TEST(MatrixParity, Examples) {
  EXPECT_EQ(matrix_parity(word_matrix(Word{0, 1, 0, 1})), Rational(1, 2));
  EXPECT_EQ(matrix_parity(ExactMatrix::identity(4)), 1);
  try {
    matrix_parity(ExactMatrix{{1, 0}, {1, 0}});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::zero_column_sum);
  }
}

TEST(MatrixParity, ColumnScaleInvariant) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int cols = 1 + trial % 4;
    auto x = random_matrix(rng, cols + 2, cols, 0, 4);
    bool zero = false;
    for (int c = 0; c < cols; ++c) {
      Rational s = 0;
      for (int r = 0; r < x.rows(); ++r) s += x(r, c);
      zero = zero || s == 0;
    }
    if (zero) continue;
    auto y = x;
    const int c = static_cast<int>(rng() % cols);
    const Rational factor = ratio(static_cast<long>(1 + rng() % 5), static_cast<long>(1 + rng() % 7));
    for (int r = 0; r < y.rows(); ++r) y(r, c) *= factor;
    ASSERT_EQ(matrix_parity(x), matrix_parity(y));
  }
}

TEST(MatrixParity, CyclicRowInvarianceForOddColumns) {
  std::mt19937_64 rng(6);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 150; ++trial) {
    const int cols = trial % 2 ? 3 : 5;
    const auto x = random_matrix(rng, cols + static_cast<int>(rng() % 3), cols, 0, 3);
    Rational p;
    try {
      p = matrix_parity(x);
    } catch (const error&) {
      continue;
    }
    ++checked;
    for (int s = 1; s < x.rows(); ++s) ASSERT_EQ(matrix_parity(x.rotate_rows(s)), p);
  }
  EXPECT_GE(checked, 100);
}

TEST(MatrixParity, AlternatingColumnDeletion) {
  // sum_j (-1)^j P(X without column j) is P(X) for odd and 0 for even column
  // counts.
  auto check = [](const ExactMatrix& x) {
    Rational alt = 0;
    for (int j = 0; j < x.cols(); ++j) {
      const Rational p = matrix_parity(x.delete_column(j));
      alt += j % 2 ? -p : p;
    }
    return alt == (x.cols() % 2 ? matrix_parity(x) : Rational(0));
  };
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int cols = 2 + trial % 4;
    const auto x = random_matrix(rng, cols + static_cast<int>(rng() % 3), cols, -2, 3);
    try {
      matrix_parity(x);
    } catch (const error&) {
      continue;
    }
    ++checked;
    ASSERT_TRUE(check(x)) << x.str();
  }
  EXPECT_GE(checked, 300);
  for (int len = 2; len <= 8; ++len)
    for (int k1 = 2; k1 <= std::min(len, 4); ++k1)
      for (const auto& letters : oracle::surjective_words(len, k1))
        ASSERT_TRUE(check(word_matrix(Word(letters)))) << Word(letters).str();
}

TEST(MatrixParity, MinorSumExpansionForOddColumns) {
  // s = sum_j (-1)^j s_{j} s(X without column j)
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int cols = trial % 2 ? 3 : 5;
    const auto x = random_matrix(rng, cols + static_cast<int>(rng() % 3), cols);
    Rational rhs = 0;
    for (int j = 0; j < x.cols(); ++j) {
      const int c[] = {j};
      const Rational term = column_minor_sum(x, c) * sum_maximal_minors(x.delete_column(j));
      rhs += j % 2 ? -term : term;
    }
    ASSERT_EQ(sum_maximal_minors(x), rhs);
  }
}
