#pragma once

/**
 * Words in ordered alphabets, their cyclic rotations and boundaries, necklace
 * canonical forms, and the brute-force rational parity.
 *
 * A word of length n+1 over the alphabet {0..k} is a surjective map
 * [n] -> [k]. Rotations follow the convention tau(i) = i - 1 mod (n+1), so
 * cyclic_shift(w, i)(j) = w(j - i).
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "necklace/error.hpp"
#include "necklace/rational.hpp"

namespace necklace {

class Word {
 public:
  Word() = default;

  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw error(errc::malformed_input, "empty word");
    int top = -1;
    for (int x : letters_) {
      if (x < 0) throw error(errc::malformed_input, "negative letter");
      top = std::max(top, x);
    }
    std::vector<bool> seen(top + 1, false);
    for (int x : letters_) seen[x] = true;
    for (int j = 0; j <= top; ++j) {
      if (!seen[j]) {
        throw error(errc::malformed_input,
                    "word is not surjective: letter " + std::to_string(j) + " missing");
      }
    }
    alphabet_size_ = top + 1;
  }

  Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

  const std::vector<int>& letters() const noexcept { return letters_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  int alphabet_size() const noexcept { return alphabet_size_; }
  int operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }

  /// m_j, the number of occurrences of each letter.
  std::vector<int> multiplicities() const {
    std::vector<int> m(alphabet_size_, 0);
    for (int x : letters_) ++m[x];
    return m;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(letters_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<int> letters_;
  int alphabet_size_ = 0;
};

/// Monotone injection [m] -> [k], stored as its image.
class FaceOperator {
 public:
  FaceOperator() = default;

  FaceOperator(std::vector<int> image, int codomain_size)
      : image_(std::move(image)), codomain_size_(codomain_size) {
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] < 0 || image_[i] >= codomain_size_ || (i && image_[i - 1] >= image_[i])) {
        throw error(errc::malformed_input, "face operator image must be strictly increasing within codomain");
      }
    }
  }

  static FaceOperator identity(int size) {
    std::vector<int> image(size);
    for (int i = 0; i < size; ++i) image[i] = i;
    return {std::move(image), size};
  }

  /// The elementary boundary delta_j : [k-1] -> [k] missing j, where
  /// codomain_size = k+1.
  static FaceOperator elementary(int codomain_size, int j) {
    std::vector<int> image;
    for (int i = 0; i < codomain_size; ++i) {
      if (i != j) image.push_back(i);
    }
    return {std::move(image), codomain_size};
  }

  const std::vector<int>& image() const noexcept { return image_; }
  int domain_size() const noexcept { return static_cast<int>(image_.size()); }
  int codomain_size() const noexcept { return codomain_size_; }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }

  bool contains(int x) const { return std::binary_search(image_.begin(), image_.end(), x); }

  /// Position of x in the image, or -1.
  int preimage(int x) const {
    auto it = std::lower_bound(image_.begin(), image_.end(), x);
    return (it != image_.end() && *it == x) ? static_cast<int>(it - image_.begin()) : -1;
  }

  friend bool operator==(const FaceOperator&, const FaceOperator&) = default;

 private:
  std::vector<int> image_;
  int codomain_size_ = 0;
};

/// (outer o inner)(i) = outer(inner(i)).
inline FaceOperator compose(const FaceOperator& outer, const FaceOperator& inner) {
  if (inner.codomain_size() != outer.domain_size()) {
    throw error(errc::dimension_mismatch, "face operators do not compose");
  }
  std::vector<int> image(inner.domain_size());
  for (int i = 0; i < inner.domain_size(); ++i) image[i] = outer(inner(i));
  return {std::move(image), outer.codomain_size()};
}

inline int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

inline Word cyclic_shift(const Word& w, int i) {
  const int n = w.length();
  std::vector<int> out(n);
  for (int j = 0; j < n; ++j) out[j] = w[mod(j - i, n)];
  return Word(std::move(out));
}

/// delta^* w together with the embedding of positions of the surviving
/// letters.
inline std::pair<Word, FaceOperator> boundary_word(const Word& w, const FaceOperator& delta) {
  if (delta.codomain_size() != w.alphabet_size()) {
    throw error(errc::dimension_mismatch, "face codomain " + std::to_string(delta.codomain_size()) +
                                              " != alphabet size " + std::to_string(w.alphabet_size()));
  }
  std::vector<int> letters;
  std::vector<int> positions;
  for (int p = 0; p < w.length(); ++p) {
    const int q = delta.preimage(w[p]);
    if (q >= 0) {
      letters.push_back(q);
      positions.push_back(p);
    }
  }
  if (letters.empty()) throw error(errc::empty_result, "no letter of " + w.str() + " survives the face");
  return {Word(std::move(letters)), FaceOperator(std::move(positions), w.length())};
}

struct Necklace {
  Word canonical_word;

  friend bool operator==(const Necklace&, const Necklace&) = default;
  friend auto operator<=>(const Necklace& a, const Necklace& b) {
    return a.canonical_word <=> b.canonical_word;
  }
};

/// Lexicographically least rotation.
inline Necklace canonical_necklace(const Word& w) {
  const int n = w.length();
  const auto& x = w.letters();
  int best = 0;
  for (int r = 1; r < n; ++r) {
    for (int i = 0; i < n; ++i) {
      const int a = x[(r + i) % n];
      const int b = x[(best + i) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = x[(best + i) % n];
  return {Word(std::move(out))};
}

inline bool is_canonical_necklace(const Word& w) { return canonical_necklace(w).canonical_word == w; }

/// Product of multiplicities above which proper-subword enumeration refuses.
inline constexpr std::int64_t kMaxProperSubwords = 1'000'000;

/// Expected parity of the proper subwords of w: choose one position per
/// letter, read the letters in position order, take the sign of the
/// resulting permutation.
inline Rational rational_parity(const Word& w) {
  const int k1 = w.alphabet_size();
  std::vector<std::vector<int>> positions(k1);
  for (int p = 0; p < w.length(); ++p) positions[w[p]].push_back(p);

  std::int64_t total = 1;
  for (const auto& ps : positions) {
    total *= static_cast<std::int64_t>(ps.size());
    if (total > kMaxProperSubwords) {
      throw error(errc::resource_limit, "more than 10^6 proper subwords in " + w.str());
    }
  }

  std::vector<int> choice(k1, 0);
  std::vector<int> pos(k1);
  std::int64_t even = 0;
  std::int64_t odd = 0;
  while (true) {
    for (int j = 0; j < k1; ++j) pos[j] = positions[j][choice[j]];
    int inversions = 0;
    for (int a = 0; a < k1; ++a) {
      for (int b = a + 1; b < k1; ++b) inversions += pos[a] > pos[b];
    }
    (inversions % 2 ? odd : even) += 1;

    int j = 0;
    while (j < k1 && ++choice[j] == static_cast<int>(positions[j].size())) choice[j++] = 0;
    if (j == k1) break;
  }
  Rational p{Integer(static_cast<long>(even - odd)), Integer(static_cast<long>(total))};
  p.canonicalize();
  return p;
}

/// Rotation-invariant only for odd alphabets.
inline Rational necklace_parity(const Necklace& n) {
  if (n.canonical_word.alphabet_size() % 2 == 0) {
    throw error(errc::even_alphabet, "parity of " + n.canonical_word.str() +
                                         " depends on the rotation (even alphabet)");
  }
  return rational_parity(n.canonical_word);
}

}  // namespace necklace
