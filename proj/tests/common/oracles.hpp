#pragma once

// Independent reference computations used by the unit and acceptance tests.
// They deliberately avoid the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

/// Sign of a permutation of 0..n-1 from its cycle decomposition.
inline int permutation_sign(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// Parity expectation over position subsets that hit every letter once.
inline Q subword_parity(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  const int k1 = *std::max_element(w.begin(), w.end()) + 1;
  long even = 0;
  long odd = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k1) continue;
    std::vector<int> read;
    std::vector<bool> hit(k1, false);
    bool ok = true;
    for (int p = 0; p < n && ok; ++p) {
      if (!(mask & (1u << p))) continue;
      if (hit[w[p]]) ok = false;
      hit[w[p]] = true;
      read.push_back(w[p]);
    }
    if (!ok) continue;
    (permutation_sign(read) > 0 ? even : odd) += 1;
  }
  Q q(Z(even - odd), Z(even + odd));
  q.canonicalize();
  return q;
}

/// Leibniz expansion.
inline Q leibniz_det(const std::vector<std::vector<Q>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Q det = 0;
  do {
    Q term = permutation_sign(p);
    for (int i = 0; i < n && term != 0; ++i) term *= a[i][p[i]];
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

/// Pfaffian as a signed sum over perfect matchings; the sign of a matching
/// is (-1)^(number of crossing pairs).
inline Q matching_pfaffian(const std::vector<std::vector<Q>>& a) {
  const int n = static_cast<int>(a.size());
  if (n % 2) return 0;
  Q total = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&] {
    int first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      int crossings = 0;
      for (std::size_t x = 0; x < pairs.size(); ++x)
        for (std::size_t y = x + 1; y < pairs.size(); ++y) {
          auto [a1, b1] = pairs[x];
          auto [a2, b2] = pairs[y];
          if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1)) ++crossings;
        }
      Q term = crossings % 2 ? -1 : 1;
      for (auto [i, j] : pairs) term *= a[i][j];
      total += term;
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.push_back({first, j});
      rec();
      pairs.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec();
  return total;
}

/// Every surjective word of the given length over exactly k1 letters.
inline std::vector<std::vector<int>> surjective_words(int length, int k1) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(length, 0);
  std::function<void(int)> rec = [&](int p) {
    if (p == length) {
      std::vector<bool> hit(k1, false);
      for (int x : w) hit[x] = true;
      if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) out.push_back(w);
      return;
    }
    for (int x = 0; x < k1; ++x) {
      w[p] = x;
      rec(p + 1);
    }
  };
  rec(0);
  return out;
}

/// Random surjective word: every letter once, the rest uniform, shuffled.
inline std::vector<int> random_word(std::mt19937_64& rng, int length, int k1) {
  std::vector<int> w;
  for (int x = 0; x < k1; ++x) w.push_back(x);
  std::uniform_int_distribution<int> letter(0, k1 - 1);
  while (static_cast<int>(w.size()) < length) w.push_back(letter(rng));
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

/// Rank of an integer matrix over Q and its nonzero invariant factors, by
/// Smith normal form over Z.
struct SmithForm {
  int rank = 0;
  std::vector<Z> factors;
};

inline SmithForm smith_form(std::vector<std::vector<Z>> a) {
  SmithForm out;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    int pr = -1;
    int pc = -1;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c)
        if (a[r][c] != 0 && (pr < 0 || abs(a[r][c]) < abs(a[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        Z q = a[r][t] / a[t][t];
        for (int c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) {
          std::swap(a[t], a[r]);
          clean = false;
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        Z q = a[t][c] / a[t][t];
        for (int r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) {
          for (auto& row : a) std::swap(row[t], row[c]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility of the rest of the block
        for (int r = t + 1; r < rows && clean; ++r)
          for (int c = t + 1; c < cols && clean; ++c)
            if (a[r][c] % a[t][t] != 0) {
              for (int k = t; k < cols; ++k) a[t][k] += a[r][k];
              clean = false;
            }
      }
    }
    out.factors.push_back(abs(a[t][t]));
    ++t;
  }
  out.rank = t;
  return out;
}

/// First integral homology of a simplicial complex given by its simplices
/// (sorted vertex tuples): free rank and torsion factors.
struct H1 {
  int betti = 0;
  std::vector<Z> torsion;
};

inline H1 first_homology(const std::vector<std::vector<int>>& simplices) {
  std::map<std::vector<int>, int> vertices;
  std::map<std::vector<int>, int> edges;
  std::map<std::vector<int>, int> triangles;
  for (const auto& s : simplices) {
    if (s.size() == 1) vertices.emplace(s, static_cast<int>(vertices.size()));
    if (s.size() == 2) edges.emplace(s, static_cast<int>(edges.size()));
    if (s.size() == 3) triangles.emplace(s, static_cast<int>(triangles.size()));
  }
  std::vector<std::vector<Z>> d1(vertices.size(), std::vector<Z>(edges.size(), 0));
  for (const auto& [e, j] : edges) {
    d1[vertices.at({e[0]})][j] -= 1;
    d1[vertices.at({e[1]})][j] += 1;
  }
  std::vector<std::vector<Z>> d2(edges.size(), std::vector<Z>(triangles.size(), 0));
  for (const auto& [t, j] : triangles) {
    d2[edges.at({t[1], t[2]})][j] += 1;
    d2[edges.at({t[0], t[2]})][j] -= 1;
    d2[edges.at({t[0], t[1]})][j] += 1;
  }
  const int r1 = smith_form(d1).rank;
  const auto s2 = smith_form(d2);
  H1 h;
  h.betti = static_cast<int>(edges.size()) - r1 - s2.rank;
  for (const auto& f : s2.factors)
    if (f != 1) h.torsion.push_back(f);
  return h;
}

/// Euler characteristic from simplex counts.
inline long euler_characteristic(const std::vector<std::vector<int>>& simplices) {
  long chi = 0;
  for (const auto& s : simplices) chi += s.size() % 2 ? 1 : -1;
  return chi;
}

}  // namespace oracle
