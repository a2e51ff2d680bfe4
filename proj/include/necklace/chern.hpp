#pragma once

/**
 * The local formula for powers of the first Chern class, its cochain over a
 * decorated base, coboundaries, fundamental cycles of closed surfaces and
 * Chern numbers.
 *
 *   C(U) = (-1)^h h!/(2h)! P(necklace of w_U)   on every 2h-simplex U.
 */

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "necklace/complex.hpp"
#include "necklace/decorations.hpp"
#include "necklace/error.hpp"
#include "necklace/rational.hpp"
#include "necklace/words.hpp"

namespace necklace {

inline Rational local_chern(const Word& w, int h) {
  if (h < 1) throw error(errc::malformed_input, "power h must be positive");
  if (w.alphabet_size() != 2 * h + 1) {
    throw error(errc::wrong_alphabet, "word " + w.str() + " has alphabet size " + std::to_string(w.alphabet_size()) +
                                          ", power " + std::to_string(h) + " needs " + std::to_string(2 * h + 1));
  }
  Rational factor = factorial(h) / factorial(2 * h);
  if (h % 2) factor = -factor;
  return factor * necklace_parity(canonical_necklace(w));
}

struct RationalCochain {
  std::shared_ptr<const LocallyOrderedComplex> base;
  int degree = 0;
  std::map<int, Rational> values;  // simplex id -> value, every simplex of the degree

  const Rational& operator()(int id) const { return values.at(id); }

  bool is_zero() const {
    for (const auto& [id, v] : values)
      if (v != 0) return false;
    return true;
  }
};

/// (delta c)(V) = sum_j (-1)^j c(face_j V).
inline RationalCochain coboundary(const RationalCochain& c) {
  RationalCochain out{c.base, c.degree + 1, {}};
  const auto& b = *c.base;
  for (int v : b.of_dim(c.degree + 1)) {
    Rational s = 0;
    for (int j = 0; j <= c.degree + 1; ++j) {
      if (j % 2) {
        s -= c(b.face(v, j));
      } else {
        s += c(b.face(v, j));
      }
    }
    out.values.emplace(v, s);
  }
  return out;
}

/// Local formula on every 2h-simplex of the decorated base.
inline RationalCochain chern_cochain(const Decoration& d, int h) {
  auto report = validate_decoration(d);
  if (!report.ok()) throw error(errc::invalid_decoration, report.issues.front().str());
  if (h < 1) throw error(errc::malformed_input, "power h must be positive");
  RationalCochain c{d.base, 2 * h, {}};
  for (int u : d.complex().of_dim(2 * h)) c.values.emplace(u, local_chern(d.words[u], h));
  return c;
}

struct FundamentalCycle {
  std::map<int, int> signs;  // triangle id -> +1 or -1
};

/// Simplicial boundary of the signed chain of triangles, per edge id.
inline std::map<int, int> chain_boundary(const LocallyOrderedComplex& base, const FundamentalCycle& fc) {
  std::map<int, int> out;
  for (const auto& [t, sign] : fc.signs) {
    for (int j = 0; j < 3; ++j) out[base.face(t, j)] += j % 2 ? -sign : sign;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline ValidationReport check_fundamental_cycle(const LocallyOrderedComplex& base, const FundamentalCycle& fc) {
  ValidationReport r;
  if (base.dimension() != 2) r.add("base is not 2-dimensional");
  for (int t : base.of_dim(2)) {
    auto it = fc.signs.find(t);
    if (it == fc.signs.end() || (it->second != 1 && it->second != -1)) r.add("triangle without a +1/-1 sign", base[t]);
  }
  for (const auto& [t, sign] : fc.signs)
    if (t < 0 || t >= base.size() || base.dim(t) != 2) r.add("sign on a simplex that is not a triangle");
  if (!r.ok()) return r;
  for (const auto& [e, coefficient] : chain_boundary(base, fc))
    r.add("boundary coefficient " + std::to_string(coefficient), base[e]);
  return r;
}

/// Coherent signs on a closed orientable surface. Signs propagate across
/// edges shared by exactly two triangles; in each connected piece the
/// triangle with the largest id gets +1, which gives the boundary
/// orientation sum_j (-1)^j face_j on the boundary of a simplex.
inline FundamentalCycle fundamental_cycle(const LocallyOrderedComplex& base) {
  if (base.dimension() != 2) {
    throw error(errc::malformed_input, "fundamental cycle needs a 2-dimensional base, got dimension " +
                                           std::to_string(base.dimension()));
  }
  FundamentalCycle fc;
  const auto& triangles = base.of_dim(2);
  for (auto it = triangles.rbegin(); it != triangles.rend(); ++it) {
    if (fc.signs.count(*it)) continue;
    fc.signs[*it] = 1;
    std::deque<int> queue{*it};
    while (!queue.empty()) {
      const int t = queue.front();
      queue.pop_front();
      for (int j = 0; j < 3; ++j) {
        const int e = base.face(t, j);
        const auto& around = base.cofaces(e);
        if (around.size() != 2) continue;
        for (const auto& [other, k] : around) {
          if (other == t) continue;
          // the two contributions to e must cancel
          const int want = ((j + k) % 2 ? 1 : -1) * fc.signs[t];
          auto found = fc.signs.find(other);
          if (found == fc.signs.end()) {
            fc.signs[other] = want;
            queue.push_back(other);
          } else if (found->second != want) {
            throw error(errc::non_orientable, "orientations clash across edge " + simplex_str(base[e]));
          }
        }
      }
    }
  }
  for (int e : base.of_dim(1)) {
    if (base.cofaces(e).size() != 2) {
      throw error(errc::not_closed, "edge " + simplex_str(base[e]) + " lies in " +
                                        std::to_string(base.cofaces(e).size()) + " triangles");
    }
  }
  return fc;
}

/// Pairing of a degree-2 cochain with the fundamental cycle.
inline Rational evaluate(const RationalCochain& c, const FundamentalCycle& fc) {
  if (c.degree != 2) throw error(errc::dimension_mismatch, "fundamental cycle pairs with degree 2 cochains");
  Rational s = 0;
  for (const auto& [t, sign] : fc.signs) s += sign * c(t);
  return s;
}

inline Integer chern_number(const Decoration& d, const FundamentalCycle& fc) {
  auto report = check_fundamental_cycle(d.complex(), fc);
  if (!report.ok()) throw error(errc::malformed_input, "not a fundamental cycle: " + report.issues.front().str());
  const Rational value = evaluate(chern_cochain(d, 1), fc);
  if (!is_integer(value)) throw error(errc::non_integral, "Chern number evaluates to " + to_string(value));
  return value.get_num();
}

inline Integer chern_number(const Decoration& d) { return chern_number(d, fundamental_cycle(d.complex())); }

/// Chern numbers of all decorations of a closed oriented surface found by
/// the search.
inline std::set<long> achievable_chern_numbers(std::shared_ptr<const LocallyOrderedComplex> base,
                                               const EnumerationOptions& opts) {
  const FundamentalCycle fc = fundamental_cycle(*base);
  struct Acc {
    const FundamentalCycle* fc;
    std::set<long> found;
    std::map<std::vector<int>, Rational> cache;

    void operator()(const Decoration& d) {
      Rational s = 0;
      for (const auto& [t, sign] : fc->signs) {
        const Word& w = d.words[t];
        auto it = cache.find(w.letters());
        if (it == cache.end()) it = cache.emplace(w.letters(), local_chern(w, 1)).first;
        s += sign * it->second;
      }
      if (!is_integer(s)) throw error(errc::non_integral, "Chern number evaluates to " + to_string(s));
      found.insert(s.get_num().get_si());
    }
  };
  auto accs = enumerate_decorations_into(std::move(base), opts, [&] { return Acc{&fc, {}, {}}; });
  std::set<long> all;
  for (const auto& a : accs) all.insert(a.found.begin(), a.found.end());
  return all;
}

inline std::set<long> achievable_chern_numbers(const LocallyOrderedComplex& base, int max_len) {
  EnumerationOptions opts;
  opts.max_len = max_len;
  return achievable_chern_numbers(std::make_shared<const LocallyOrderedComplex>(base), opts);
}

}  // namespace necklace
