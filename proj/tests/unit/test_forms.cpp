#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "necklace/forms.hpp"

using namespace necklace;

namespace {

// Sum over increasing index tuples i_1 < ... < i_d <= n of dl_{i_1}^...^dl_{i_d},
// written with the eliminated dl_n before reduction.
ExteriorForm unreduced_volume_sum(int n, int d) {
  ExteriorForm total(n, d);
  std::vector<int> idx(d);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == d) {
      ExteriorForm t = ExteriorForm::constant(n, 1);
      for (int i : idx) t = wedge(t, ExteriorForm::dl(n, i));
      total += t;
      return;
    }
    for (int i = from; i <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return total;
}

ExteriorForm dt_volume(int k, int d) {
  ExteriorForm v = ExteriorForm::constant(k, 1);
  for (int a = 0; a < d; ++a) v = wedge(v, ExteriorForm::dl(k, a));
  return v;
}

ExactMatrix random_stochastic(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> entry(0, 4);
  ExactMatrix m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    int sum = 0;
    while (sum == 0) {
      sum = 0;
      for (int r = 0; r < rows; ++r) {
        const int e = entry(rng);
        m(r, c) = e;
        sum += e;
      }
    }
    for (int r = 0; r < rows; ++r) m(r, c) /= sum;
  }
  return m;
}

ExteriorForm random_form(std::mt19937_64& rng, int n, int degree) {
  ExteriorForm f(n, degree);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (DiffMask m = 0; m < (DiffMask{1} << (n + 1)); ++m) {
    if (std::popcount(m) != degree || rng() % 2) continue;
    Polynomial p(n);
    for (int a = 0; a < n; ++a) p += Polynomial::constant(n, coef(rng)) * Polynomial::variable(n, a);
    p += Polynomial::constant(n, coef(rng));
    if (n > 0) p += Polynomial::variable(n, 0) * Polynomial::variable(n, n - 1);
    f.add(m, p);
  }
  return f;
}

}  // namespace

TEST(ConnectionForm, Examples) {
  EXPECT_EQ(connection_form(0), -ExteriorForm::dx(0));
  const int n = 2;
  const auto l0 = Polynomial::variable(n, 0);
  const auto l1 = Polynomial::variable(n, 1);
  const auto d0 = ExteriorForm::dl(n, 0);
  const auto d1 = ExteriorForm::dl(n, 1);
  const auto expected = -ExteriorForm::dx(n) - l0 * d1 + (l0 + l1) * (d0 + d1);
  EXPECT_EQ(connection_form(2), expected) << connection_form(2).str();
  EXPECT_EQ(connection_form(3).coefficient(kDx), Polynomial::constant(3, -1));
}

TEST(ExteriorDerivative, Examples) {
  const auto f = Polynomial::variable(2, 0) * ExteriorForm::dl(2, 1);
  EXPECT_EQ(exterior_derivative(f), wedge(ExteriorForm::dl(2, 0), ExteriorForm::dl(2, 1)));
  EXPECT_TRUE(exterior_derivative(ExteriorForm::constant(3, 7)).is_zero());
}

TEST(Curvature, Examples) {
  EXPECT_EQ(curvature(2), -wedge(ExteriorForm::dl(2, 0), ExteriorForm::dl(2, 1)));
  EXPECT_TRUE(curvature(1).is_zero());
  EXPECT_TRUE(curvature(0).is_zero());
}

TEST(Curvature, IsDerivativeOfConnectionAndClosed) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(exterior_derivative(connection_form(n)), curvature(n)) << n;
    EXPECT_TRUE(exterior_derivative(curvature(n)).is_zero());
  }
}

TEST(ExteriorDerivative, SquaresToZero) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    const auto f = random_form(rng, n, trial % 3);
    EXPECT_TRUE(exterior_derivative(exterior_derivative(f)).is_zero());
  }
}

TEST(WedgePower, MatchesClosedForm) {
  for (int n = 0; n <= 6; ++n) {
    for (int h = 1; h <= 3; ++h) {
      const Rational c = Rational(h % 2 ? -1 : 1) * factorial(h);
      const auto expected = c * unreduced_volume_sum(n, 2 * h);
      EXPECT_EQ(wedge_power(curvature(n), h), expected) << "n=" << n << " h=" << h;
    }
  }
  EXPECT_EQ(wedge_power(curvature(2), 1), curvature(2));
  EXPECT_TRUE(wedge_power(curvature(2), 2).is_zero());
}

TEST(PullbackAffine, Examples) {
  const auto vol = dt_volume(2, 2);
  EXPECT_EQ(pullback_affine(curvature(2), AffineSimplexMap(ExactMatrix::identity(3))), -vol);
  EXPECT_EQ(pullback_affine(curvature(3), AffineSimplexMap(normalized_word_matrix(Word{0, 1, 2, 0}))), -vol);
  EXPECT_EQ(pullback_affine(curvature(3), AffineSimplexMap(normalized_word_matrix(Word{0, 2, 1, 0}))), vol);
  EXPECT_THROW(pullback_affine(curvature(2), AffineSimplexMap(ExactMatrix::identity(4))), error);
  EXPECT_THROW(AffineSimplexMap(ExactMatrix{{1, 0}, {1, 1}}), error);
}

TEST(PullbackAffine, CurvaturePowerIsMinorSum) {
  std::mt19937_64 rng(10);
  for (int h = 1; h <= 2; ++h) {
    const int cols = 2 * h + 1;
    for (int rows = cols; rows <= 7; ++rows) {
      const auto omega = wedge_power(curvature(rows - 1), h);
      for (int trial = 0; trial < 8; ++trial) {
        const auto a = random_stochastic(rng, rows, cols);
        const Rational c = Rational(h % 2 ? -1 : 1) * factorial(h) * sum_maximal_minors(a);
        ASSERT_EQ(pullback_affine(omega, AffineSimplexMap(a)), c * dt_volume(cols - 1, 2 * h)) << a.str();
      }
    }
  }
}

TEST(Pullback, IsRingMapCommutingWithD) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    const auto a = AffineSimplexMap(random_stochastic(rng, n + 1, 2 + trial % 2));
    const auto f = random_form(rng, n, 1);
    const auto g = random_form(rng, n, trial % 2);
    EXPECT_EQ(pullback_affine(wedge(f, g), a), wedge(pullback_affine(f, a), pullback_affine(g, a)));
    EXPECT_EQ(pullback_affine(exterior_derivative(f), a), exterior_derivative(pullback_affine(f, a)));
    const int i = static_cast<int>(rng() % (n + 1));
    EXPECT_EQ(pullback_cyclic_gauge(wedge(f, g), n, i),
              wedge(pullback_cyclic_gauge(f, n, i), pullback_cyclic_gauge(g, n, i)));
    EXPECT_EQ(pullback_cyclic_gauge(exterior_derivative(f), n, i), exterior_derivative(pullback_cyclic_gauge(f, n, i)));
  }
}

TEST(PullbackCyclicGauge, ConnectionIsInvariant) {
  for (int n = 0; n <= 6; ++n) {
    const auto alpha = connection_form(n);
    const auto omega = curvature(n);
    for (int i = 0; i <= n; ++i) {
      EXPECT_EQ(pullback_cyclic_gauge(alpha, n, i), alpha) << "n=" << n << " i=" << i;
      EXPECT_EQ(pullback_cyclic_gauge(omega, n, i), omega);
    }
  }
  EXPECT_EQ(pullback_cyclic_gauge(-ExteriorForm::dx(3), 3, 0), -ExteriorForm::dx(3));
}

TEST(PullbackCyclicGauge, GeneratorPowersComposeToIdentity) {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 4; ++n) {
    const auto f = random_form(rng, n, 1);
    auto g = f;
    for (int step = 0; step <= n; ++step) g = pullback_cyclic_gauge(g, n, 1);
    // x shifts by the full sum of coordinates, which is 1: dx is unchanged.
    EXPECT_EQ(g, f);
  }
}

TEST(PullbackFace, ConnectionRestrictsToFaces) {
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i <= n; ++i)
      EXPECT_EQ(pullback_face(connection_form(n), n, FaceOperator::elementary(n + 1, i)), connection_form(n - 1))
          << "n=" << n << " i=" << i;
  EXPECT_TRUE(pullback_face(ExteriorForm::dl(3, 1), 3, FaceOperator::elementary(4, 1)).is_zero());
  EXPECT_TRUE(pullback_face(curvature(2), 2, FaceOperator::elementary(3, 0)).is_zero());
}
