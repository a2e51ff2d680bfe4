#pragma once

/**
 * Exact rational matrices: word matrices, maximal-minor sums, Pfaffians,
 * the sum-of-minors Pfaffian (Okada) layout and matrix parity.
 */

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "necklace/error.hpp"
#include "necklace/rational.hpp"
#include "necklace/words.hpp"

namespace necklace {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw error(errc::dimension_mismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static ExactMatrix identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  ExactMatrix select_rows(std::span<const int> rows) const {
    ExactMatrix m(static_cast<int>(rows.size()), cols_);
    for (int i = 0; i < m.rows(); ++i)
      for (int c = 0; c < cols_; ++c) m(i, c) = (*this)(rows[i], c);
    return m;
  }

  ExactMatrix select_cols(std::span<const int> cols) const {
    ExactMatrix m(rows_, static_cast<int>(cols.size()));
    for (int r = 0; r < rows_; ++r)
      for (int i = 0; i < m.cols(); ++i) m(r, i) = (*this)(r, cols[i]);
    return m;
  }

  /// delta_j^* X: column j removed.
  ExactMatrix delete_column(int j) const {
    std::vector<int> keep;
    for (int c = 0; c < cols_; ++c)
      if (c != j) keep.push_back(c);
    return select_cols(keep);
  }

  /// Rows rotated so that row i of the result is row (i - shift) of this.
  ExactMatrix rotate_rows(int shift) const {
    ExactMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) m(r, c) = (*this)(mod(r - shift, rows_), c);
    return m;
  }

  std::string str() const {
    std::string s;
    for (int r = 0; r < rows_; ++r) {
      s += "[";
      for (int c = 0; c < cols_; ++c) {
        if (c) s += ", ";
        s += to_string((*this)(r, c));
      }
      s += "]\n";
    }
    return s;
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Even-sized antisymmetric matrix with zero diagonal.
class SkewMatrix {
 public:
  explicit SkewMatrix(ExactMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw error(errc::dimension_mismatch, "skew matrix must be square");
    for (int i = 0; i < m_.rows(); ++i)
      for (int j = 0; j < m_.cols(); ++j)
        if (m_(i, j) != -m_(j, i)) throw error(errc::malformed_input, "matrix is not antisymmetric");
  }

  int size() const noexcept { return m_.rows(); }
  const Rational& operator()(int i, int j) const { return m_(i, j); }
  const ExactMatrix& matrix() const noexcept { return m_; }

 private:
  ExactMatrix m_;
};

/// L(w): entry (i, j) is 1 iff w(i) = j.
inline ExactMatrix word_matrix(const Word& w) {
  ExactMatrix m(w.length(), w.alphabet_size());
  for (int i = 0; i < w.length(); ++i) m(i, w[i]) = 1;
  return m;
}

/// Column-normalized word matrix: entry (i, j) is 1/m_j iff w(i) = j.
inline ExactMatrix normalized_word_matrix(const Word& w) {
  const auto mult = w.multiplicities();
  ExactMatrix m(w.length(), w.alphabet_size());
  for (int i = 0; i < w.length(); ++i) m(i, w[i]) = Rational(1, mult[w[i]]);
  return m;
}

/// Applies m to a barycentric point of the column simplex.
inline std::vector<Rational> apply_as_operator(const ExactMatrix& m, std::span<const Rational> t) {
  if (static_cast<int>(t.size()) != m.cols()) {
    throw error(errc::dimension_mismatch, "point has " + std::to_string(t.size()) + " coordinates, matrix has " +
                                              std::to_string(m.cols()) + " columns");
  }
  Rational total = 0;
  for (const auto& x : t) {
    if (x < 0) throw error(errc::malformed_input, "barycentric coordinate is negative");
    total += x;
  }
  if (total != 1) throw error(errc::malformed_input, "barycentric coordinates do not sum to 1");
  std::vector<Rational> out(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r] += m(r, c) * t[c];
  return out;
}

/// Gaussian elimination over Q with first-nonzero pivoting.
inline Rational determinant(ExactMatrix a) {
  if (a.rows() != a.cols()) throw error(errc::dimension_mismatch, "determinant of a non-square matrix");
  const int n = a.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int k = c; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      const Rational f = a(r, c) / a(c, c);
      for (int k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

/// Rank over Q.
inline int rank(ExactMatrix a) {
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (int k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(r, k));
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (int k = c; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
    }
    ++r;
  }
  return r;
}

/// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(std::span<const int>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Sum over all row subsets of size cols of the minor with rows kept in
/// increasing order.
inline Rational sum_maximal_minors(const ExactMatrix& m) {
  if (m.rows() < m.cols()) {
    throw error(errc::dimension_mismatch, "sum of maximal minors needs rows >= cols, got " +
                                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  Rational s = 0;
  for_each_subset(m.rows(), m.cols(), [&](std::span<const int> rows) { s += determinant(m.select_rows(rows)); });
  return s;
}

namespace detail {

inline Rational pfaffian_rec(const SkewMatrix& m, std::vector<int>& live) {
  if (live.empty()) return 1;
  const int first = live.front();
  Rational pf = 0;
  // Expansion along the first live row; the j-th partner (1-based j >= 2)
  // carries sign (-1)^j.
  for (std::size_t pos = 1; pos < live.size(); ++pos) {
    const int partner = live[pos];
    if (m(first, partner) == 0) continue;
    std::vector<int> rest;
    rest.reserve(live.size() - 2);
    for (std::size_t q = 1; q < live.size(); ++q)
      if (q != pos) rest.push_back(live[q]);
    const Rational sub = pfaffian_rec(m, rest);
    if (pos % 2 == 1) {
      pf += m(first, partner) * sub;
    } else {
      pf -= m(first, partner) * sub;
    }
  }
  return pf;
}

}  // namespace detail

/// Pfaffian by first-row expansion. Cost grows like (2m-1)!!; intended for
/// sizes up to about 12.
inline Rational pfaffian(const SkewMatrix& s) {
  if (s.size() % 2) throw error(errc::odd_size, "Pfaffian of a " + std::to_string(s.size()) + "x" +
                                                    std::to_string(s.size()) + " matrix");
  std::vector<int> live(s.size());
  for (int i = 0; i < s.size(); ++i) live[i] = i;
  return detail::pfaffian_rec(s, live);
}

/// s_u: sum of maximal minors of the columns u of x.
inline Rational column_minor_sum(const ExactMatrix& x, std::span<const int> columns) {
  return sum_maximal_minors(x.select_cols(columns));
}

/// Skew matrix whose Pfaffian is the sum of maximal minors of x. Odd column
/// count: size cols+1 with the single-column sums bordering the first row.
/// Even column count: size cols built from the column-pair sums.
inline SkewMatrix okada_matrix(const ExactMatrix& x) {
  if (x.rows() < x.cols()) throw error(errc::dimension_mismatch, "okada matrix needs rows >= cols");
  const int k1 = x.cols();
  const int offset = k1 % 2;
  const int size = k1 + offset;
  ExactMatrix m(size, size);
  if (offset) {
    for (int j = 0; j < k1; ++j) {
      const int col[] = {j};
      m(0, j + 1) = column_minor_sum(x, col);
      m(j + 1, 0) = -m(0, j + 1);
    }
  }
  for (int i = 0; i < k1; ++i) {
    for (int j = i + 1; j < k1; ++j) {
      const int cols[] = {i, j};
      m(i + offset, j + offset) = column_minor_sum(x, cols);
      m(j + offset, i + offset) = -m(i + offset, j + offset);
    }
  }
  return SkewMatrix(std::move(m));
}

/// s / prod_j s_{j}; invariant under rescaling individual columns.
inline Rational matrix_parity(const ExactMatrix& x) {
  if (x.rows() < x.cols()) throw error(errc::dimension_mismatch, "matrix parity needs rows >= cols");
  Rational denominator = 1;
  for (int j = 0; j < x.cols(); ++j) {
    Rational column = 0;
    for (int r = 0; r < x.rows(); ++r) column += x(r, j);
    if (column == 0) throw error(errc::zero_column_sum, "column " + std::to_string(j) + " sums to zero");
    denominator *= column;
  }
  return sum_maximal_minors(x) / denominator;
}

}  // namespace necklace
