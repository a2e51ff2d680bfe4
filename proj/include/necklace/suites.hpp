#pragma once

/**
 * Verification suites behind `necklace verify` and `necklace forms-verify`.
 * Each suite returns one Check per identity; a check fails on the first
 * counterexample and keeps it as the witness.
 */

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "necklace/cyclic_category.hpp"
#include "necklace/exact_linalg.hpp"
#include "necklace/forms.hpp"
#include "necklace/words.hpp"

namespace necklace::suites {

struct Check {
  explicit Check(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  long cases = 0;
  std::string witness;

  void fail(std::string w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
};

namespace detail {

inline std::vector<FaceOperator> faces_of(int domain, int codomain) {
  std::vector<FaceOperator> out;
  std::vector<int> image(static_cast<std::size_t>(domain));
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == domain) {
      out.emplace_back(image, codomain);
      return;
    }
    for (int x = from; x <= codomain - (domain - pos); ++x) {
      image[pos] = x;
      self(self, pos + 1, x + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline std::string face_str(const FaceOperator& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.image().size(); ++i) s += (i ? "," : "") + std::to_string(d.image()[i]);
  return s + "]->" + std::to_string(d.codomain_size());
}

inline ExactMatrix random_integer_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> entry(-5, 5);
  ExactMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

inline ExactMatrix random_stochastic(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> entry(0, 5);
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

}  // namespace detail

/// Cyclic-category identities on all faces into [k] with k + 1 <= max_k:
/// duals of elementary faces, contravariance of the dual, and uniqueness of
/// the shift factorization against a search over every (face, shift) pair.
inline std::vector<Check> identities(int max_k) {
  Check elementary{"dual of an elementary face is a degeneracy"};
  Check reverse{"dual reverses composition"};
  Check factor{"shift factorization exists, is unique and is returned"};
  for (int k1 = 1; k1 <= max_k; ++k1) {
    for (int i = 0; i < k1; ++i) {
      if (k1 < 2) break;
      std::vector<int> s(static_cast<std::size_t>(k1));
      for (int x = 0; x < k1; ++x) s[x] = x <= i ? x : x - 1;
      if (i == k1 - 1) s[k1 - 1] = 0;
      ++elementary.cases;
      const auto d = FaceOperator::elementary(k1, i);
      if (dual_degeneracy(d).values() != s) elementary.fail(detail::face_str(d));
    }
    for (int m1 = 1; m1 <= k1; ++m1) {
      const auto outer = detail::faces_of(m1, k1);
      for (int l1 = 1; l1 <= m1; ++l1) {
        const auto inner = detail::faces_of(l1, m1);
        for (const auto& a : outer)
          for (const auto& b : inner) {
            ++reverse.cases;
            if (dual_degeneracy(compose(a, b)) != compose(dual_degeneracy(b), dual_degeneracy(a))) {
              reverse.fail(detail::face_str(a) + " o " + detail::face_str(b));
            }
          }
      }
      for (const auto& d : outer) {
        for (int i = 0; i < k1; ++i) {
          ++factor.cases;
          int matches = 0;
          FaceOperator found;
          int found_j = -1;
          for (const auto& e : outer)
            for (int j = 0; j < m1; ++j) {
              bool same = true;
              for (int y = 0; y < m1 && same; ++y) same = mod(d(y) - i, k1) == e(mod(y - j, m1));
              if (same) {
                ++matches;
                found = e;
                found_j = j;
              }
            }
          const auto [f, j] = factorize_shift(d, i);
          if (matches != 1 || f != found || j != found_j) {
            factor.fail(detail::face_str(d) + " shift " + std::to_string(i));
          }
        }
      }
    }
  }
  return {elementary, reverse, factor};
}

/// Pf(okada_matrix(X)) == sum of maximal minors on random integer matrices
/// of the given shape, and Pf^2 == det as a sanity check of the Pfaffian.
inline std::vector<Check> okada(int rows, int cols, int samples, std::uint64_t seed) {
  if (rows < cols || cols < 1) throw error(errc::dimension_mismatch, "okada suite needs rows >= cols >= 1");
  Check identity{"Pfaffian of the Okada matrix equals the sum of maximal minors (" + std::to_string(rows) + "x" +
                 std::to_string(cols) + ")"};
  Check square{"Pf^2 equals det on the Okada matrix"};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples; ++t) {
    const auto x = detail::random_integer_matrix(rng, rows, cols);
    const auto m = okada_matrix(x);
    const Rational pf = pfaffian(m);
    ++identity.cases;
    if (pf != sum_maximal_minors(x)) identity.fail(x.str());
    ++square.cases;
    if (pf * pf != determinant(m.matrix())) square.fail(x.str());
  }
  return {identity, square};
}

/// Symbolic identities of the universal connection for every n <= max_n and
/// powers h <= max_h.
inline std::vector<Check> forms(int max_n, int max_h, int samples, std::uint64_t seed) {
  Check invariance{"connection is invariant under every cyclic gauge"};
  Check curvature_check{"d(connection) equals the curvature and d(curvature) = 0"};
  Check faces{"connection restricts to faces"};
  Check power{"curvature power equals (-1)^h h! times the sum of 2h-volumes"};
  Check matrixpull{"pullback of curvature^h along a stochastic matrix is (-1)^h h! s(A) dt"};
  std::mt19937_64 rng(seed);
  for (int n = 0; n <= max_n; ++n) {
    const auto alpha = connection_form(n);
    const auto omega = curvature(n);
    for (int i = 0; i <= n; ++i) {
      ++invariance.cases;
      if (pullback_cyclic_gauge(alpha, n, i) != alpha) invariance.fail("n=" + std::to_string(n) + " i=" + std::to_string(i));
      if (n > 0) {
        ++faces.cases;
        if (pullback_face(alpha, n, FaceOperator::elementary(n + 1, i)) != connection_form(n - 1)) {
          faces.fail("n=" + std::to_string(n) + " face " + std::to_string(i));
        }
      }
    }
    ++curvature_check.cases;
    if (exterior_derivative(alpha) != omega || !exterior_derivative(omega).is_zero()) {
      curvature_check.fail("n=" + std::to_string(n));
    }
    for (int h = 1; h <= max_h; ++h) {
      // sum over index sets i_1 < ... < i_2h <= n, dl_n eliminated
      ExteriorForm expected(n, 2 * h);
      for (std::uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
        if (std::popcount(mask) != 2 * h) continue;
        ExteriorForm t = ExteriorForm::constant(n, 1);
        for (int a = 0; a <= n; ++a)
          if (mask & (1u << a)) t = wedge(t, ExteriorForm::dl(n, a));
        expected += t;
      }
      Rational c = factorial(h);
      if (h % 2) c = -c;
      expected *= c;
      ++power.cases;
      if (wedge_power(omega, h) != expected) power.fail("n=" + std::to_string(n) + " h=" + std::to_string(h));

      const int cols = 2 * h + 1;
      if (cols > n + 1) continue;
      const auto omega_h = wedge_power(omega, h);
      ExteriorForm vol = ExteriorForm::constant(cols - 1, 1);
      for (int a = 0; a < 2 * h; ++a) vol = wedge(vol, ExteriorForm::dl(cols - 1, a));
      for (int t = 0; t < samples; ++t) {
        const auto a = detail::random_stochastic(rng, n + 1, cols);
        ++matrixpull.cases;
        if (pullback_affine(omega_h, AffineSimplexMap(a)) != Rational(c * sum_maximal_minors(a)) * vol) matrixpull.fail(a.str());
      }
    }
  }
  return {invariance, curvature_check, faces, power, matrixpull};
}

}  // namespace necklace::suites
