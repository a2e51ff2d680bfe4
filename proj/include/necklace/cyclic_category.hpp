#pragma once

/**
 * The boundary half of the cyclic category: dual cyclic degeneracies,
 * moving a cyclic shift across a face operator, and cyclic morphisms of
 * words.
 *
 * Shifts act on [n] as tau_n^i(x) = x - i mod (n+1). A cyclic morphism of
 * words V -> U is the position map x -> tau^shift(d(x)) where d is the
 * monotone embedding of the surviving positions of cyclic_shift(w_U, shift).
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "necklace/error.hpp"
#include "necklace/words.hpp"

namespace necklace {

/// Surjection [m] -> [k] given by its value table.
class DegeneracyMap {
 public:
  DegeneracyMap() = default;

  DegeneracyMap(std::vector<int> values, int codomain_size)
      : values_(std::move(values)), codomain_size_(codomain_size) {
    std::vector<bool> hit(codomain_size_, false);
    for (int v : values_) {
      if (v < 0 || v >= codomain_size_) throw error(errc::malformed_input, "degeneracy value out of range");
      hit[v] = true;
    }
    for (bool h : hit) {
      if (!h) throw error(errc::malformed_input, "degeneracy map is not surjective");
    }
    if (!is_cyclic_monotone()) {
      throw error(errc::malformed_input, "degeneracy map is not a rotation of a monotone surjection");
    }
  }

  const std::vector<int>& values() const noexcept { return values_; }
  int domain_size() const noexcept { return static_cast<int>(values_.size()); }
  int codomain_size() const noexcept { return codomain_size_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const DegeneracyMap&, const DegeneracyMap&) = default;

 private:
  bool is_cyclic_monotone() const {
    const int n = domain_size();
    for (int r = 0; r < n; ++r) {
      bool ok = values_[r] == 0;
      for (int i = 1; ok && i < n; ++i) ok = values_[(r + i) % n] >= values_[(r + i - 1) % n];
      if (ok) return true;
    }
    return n == 0;
  }

  std::vector<int> values_;
  int codomain_size_ = 0;
};

/// Composition of set maps, (outer o inner)(i) = outer(inner(i)).
inline DegeneracyMap compose(const DegeneracyMap& outer, const DegeneracyMap& inner) {
  if (inner.codomain_size() != outer.domain_size()) {
    throw error(errc::dimension_mismatch, "degeneracies do not compose");
  }
  std::vector<int> v(inner.domain_size());
  for (int i = 0; i < inner.domain_size(); ++i) v[i] = outer(inner(i));
  return {std::move(v), outer.codomain_size()};
}

/// d^op(i) = 0 if every d(j) < i, else the least j with d(j) >= i.
inline DegeneracyMap dual_degeneracy(const FaceOperator& d) {
  if (d.domain_size() == 0) throw error(errc::malformed_input, "dual of an empty face");
  std::vector<int> v(d.codomain_size());
  for (int i = 0; i < d.codomain_size(); ++i) {
    int value = 0;
    for (int j = 0; j < d.domain_size(); ++j) {
      if (d(j) >= i) {
        value = j;
        break;
      }
    }
    v[i] = value;
  }
  return {std::move(v), d.domain_size()};
}

/// For d : [k] -> [m] and a shift i of [m], the unique face d' and shift
/// j = d^op(i) of [k] with tau_m^i o d == d' o tau_k^j.
inline std::pair<FaceOperator, int> factorize_shift(const FaceOperator& d, int i) {
  const int m1 = d.codomain_size();
  const int k1 = d.domain_size();
  i = mod(i, m1);
  const int j = dual_degeneracy(d)(i);
  std::vector<int> image(k1);
  for (int y = 0; y < k1; ++y) image[y] = mod(d(mod(y + j, k1)) - i, m1);
  return {FaceOperator(std::move(image), m1), j};
}

/// Cyclic morphism of words from a face word (domain) into a word over a
/// larger alphabet (codomain).
struct WordMorphism {
  int shift = 0;
  FaceOperator alphabet_face;
  FaceOperator induced_domain_face;

  int domain_length() const { return induced_domain_face.domain_size(); }
  int codomain_length() const { return induced_domain_face.codomain_size(); }

  /// Position in the codomain word of domain position x.
  int operator()(int x) const { return mod(induced_domain_face(x) - shift, codomain_length()); }

  std::vector<int> position_map() const {
    std::vector<int> out(domain_length());
    for (int x = 0; x < domain_length(); ++x) out[x] = (*this)(x);
    return out;
  }

  friend bool operator==(const WordMorphism&, const WordMorphism&) = default;
};

/// Least shift s for which x -> position_map[x] + s is increasing mod N, with
/// the resulting monotone face. Nullopt when the map is not cyclic-monotone.
inline std::optional<std::pair<int, FaceOperator>> canonical_codomain_shift(const std::vector<int>& position_map,
                                                                            int codomain_length) {
  const int k1 = static_cast<int>(position_map.size());
  for (int s = 0; s < codomain_length; ++s) {
    std::vector<int> image(k1);
    bool increasing = true;
    for (int x = 0; x < k1 && increasing; ++x) {
      image[x] = mod(position_map[x] + s, codomain_length);
      increasing = x == 0 || image[x - 1] < image[x];
    }
    if (increasing) return std::make_pair(s, FaceOperator(std::move(image), codomain_length));
  }
  return std::nullopt;
}

/// The morphism delta^*(cyclic_shift(w, shift)) -> w, with the shift
/// normalized to its least equivalent value.
inline WordMorphism make_word_morphism(const Word& w, const FaceOperator& alphabet_face, int shift) {
  auto [sub, positions] = boundary_word(cyclic_shift(w, shift), alphabet_face);
  WordMorphism raw{mod(shift, w.length()), alphabet_face, positions};
  auto canon = canonical_codomain_shift(raw.position_map(), w.length());
  return {canon->first, alphabet_face, canon->second};
}

/// outer o inner for inner : W -> V and outer : V -> U. The composite
/// position map is brought to the form d'' o tau^j by moving both shifts to
/// the domain with factorize_shift, then re-expressed with the least
/// codomain shift.
inline WordMorphism compose_word_morphisms(const WordMorphism& outer, const WordMorphism& inner) {
  if (inner.codomain_length() != outer.domain_length() ||
      inner.alphabet_face.codomain_size() != outer.alphabet_face.domain_size()) {
    throw error(errc::dimension_mismatch, "word morphisms do not compose");
  }
  // inner = tau^{s2} o d2 = d2' o tau^{j2}
  auto [d2p, j2] = factorize_shift(inner.induced_domain_face, inner.shift);
  // outer o inner = tau^{s1} o (d1 o d2') o tau^{j2} = d'' o tau^{j1} o tau^{j2}
  auto [dpp, j1] = factorize_shift(compose(outer.induced_domain_face, d2p), outer.shift);
  const int k1 = inner.domain_length();
  const int j = mod(j1 + j2, k1);
  std::vector<int> map(k1);
  for (int x = 0; x < k1; ++x) map[x] = dpp(mod(x - j, k1));

  auto canon = canonical_codomain_shift(map, outer.codomain_length());
  if (!canon) throw error(errc::malformed_input, "composite is not a cyclic morphism");
  return {canon->first, compose(outer.alphabet_face, inner.alphabet_face), canon->second};
}

}  // namespace necklace
