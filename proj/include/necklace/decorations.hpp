#pragma once

/**
 * Cyclic decorations: a word on every base simplex plus, for every
 * codimension-one face, the shift of the cyclic morphism from the face word
 * into the simplex word.
 *
 * Shift convention: the morphism of face j of U is make_word_morphism(w_U,
 * delta_j, s), so boundary_word(cyclic_shift(w_U, s), delta_j) must equal the
 * face word. Several s can give the same position map; decorations store the
 * least one.
 *
 * Two decorations are equivalent when they differ by rotating the words
 * (a change of 0-sections). enumerate_decorations produces one decoration per
 * equivalence class, in gauge-normal form: maximal simplices carry their
 * necklace representative and every other simplex is aligned with its first
 * coface by a zero shift.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "necklace/complex.hpp"
#include "necklace/cyclic_category.hpp"
#include "necklace/error.hpp"
#include "necklace/parallel.hpp"
#include "necklace/words.hpp"

namespace necklace {

struct Decoration {
  std::shared_ptr<const LocallyOrderedComplex> base;
  std::vector<Word> words;               // per base simplex id
  std::vector<std::vector<int>> shifts;  // shifts[u][j] for face j of u; empty for vertices

  const LocallyOrderedComplex& complex() const { return *base; }

  /// Words then shifts, for ordering and hashing-free comparison.
  std::vector<int> key() const {
    std::vector<int> k;
    for (const auto& w : words) {
      k.push_back(w.length());
      k.insert(k.end(), w.letters().begin(), w.letters().end());
    }
    for (const auto& s : shifts) k.insert(k.end(), s.begin(), s.end());
    return k;
  }

  friend bool operator==(const Decoration& a, const Decoration& b) {
    return a.words == b.words && a.shifts == b.shifts;
  }
};

/// Morphism of face j into simplex u, as recorded.
inline WordMorphism face_morphism(const Decoration& d, int u, int j) {
  const int k1 = d.complex().dim(u) + 1;
  return make_word_morphism(d.words[u], FaceOperator::elementary(k1, j), d.shifts[u][j]);
}

inline ValidationReport validate_decoration(const Decoration& d) {
  ValidationReport r;
  if (!d.base) {
    r.add("decoration has no base complex");
    return r;
  }
  const auto& base = d.complex();
  if (static_cast<int>(d.words.size()) != base.size() || static_cast<int>(d.shifts.size()) != base.size()) {
    r.add("decoration does not cover every base simplex");
    return r;
  }
  bool shapes_ok = true;
  for (int u = 0; u < base.size(); ++u) {
    const int k1 = base.dim(u) + 1;
    if (d.words[u].alphabet_size() != k1) {
      r.add("word " + d.words[u].str() + " has alphabet size " + std::to_string(d.words[u].alphabet_size()) +
                ", simplex needs " + std::to_string(k1),
            base[u]);
      shapes_ok = false;
    }
    const std::size_t faces = k1 > 1 ? static_cast<std::size_t>(k1) : 0;
    if (d.shifts[u].size() != faces) {
      r.add("expected " + std::to_string(faces) + " face shifts", base[u]);
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return r;

  bool faces_ok = true;
  for (int u = 0; u < base.size(); ++u) {
    const int k1 = base.dim(u) + 1;
    if (k1 < 2) continue;
    for (int j = 0; j < k1; ++j) {
      const int v = base.face(u, j);
      const auto sub = boundary_word(cyclic_shift(d.words[u], d.shifts[u][j]), FaceOperator::elementary(k1, j)).first;
      if (sub != d.words[v]) {
        r.add("face " + std::to_string(j) + ": boundary word " + sub.str() + " != face word " + d.words[v].str(),
              base[u]);
        faces_ok = false;
      }
    }
  }
  if (!faces_ok) return r;

  for (int u = 0; u < base.size(); ++u) {
    const int k1 = base.dim(u) + 1;
    if (k1 < 3) continue;
    for (int k = 1; k < k1; ++k) {
      for (int j = 0; j < k; ++j) {
        // delta_k then delta_j equals delta_j then delta_{k-1}
        const auto lhs = compose_word_morphisms(face_morphism(d, u, k), face_morphism(d, base.face(u, k), j));
        const auto rhs = compose_word_morphisms(face_morphism(d, u, j), face_morphism(d, base.face(u, j), k - 1));
        if (lhs.position_map() != rhs.position_map()) {
          r.add("face morphisms (" + std::to_string(k) + "," + std::to_string(j) + ") and (" + std::to_string(j) +
                    "," + std::to_string(k - 1) + ") do not commute",
                base[u]);
        }
      }
    }
  }
  return r;
}

/// Rotates the word of every simplex u by rotation[u] (a change of
/// 0-section) and re-expresses the face morphisms.
inline Decoration gauge_transform(const Decoration& d, const std::vector<int>& rotation) {
  const auto& base = d.complex();
  Decoration out{d.base, {}, d.shifts};
  out.words.reserve(d.words.size());
  for (int u = 0; u < base.size(); ++u) out.words.push_back(cyclic_shift(d.words[u], rotation[u]));
  for (int u = 0; u < base.size(); ++u) {
    const int n = d.words[u].length();
    for (int j = 0; j < static_cast<int>(d.shifts[u].size()); ++j) {
      const int v = base.face(u, j);
      const int nv = d.words[v].length();
      const auto f = face_morphism(d, u, j).position_map();
      std::vector<int> g(nv);
      for (int x = 0; x < nv; ++x) g[x] = mod(f[mod(x - rotation[v], nv)] + rotation[u], n);
      auto canon = canonical_codomain_shift(g, n);
      if (!canon) throw error(errc::invalid_decoration, "face morphism is not cyclic at " + simplex_str(base[u]));
      out.shifts[u][j] = canon->first;
    }
  }
  return out;
}

namespace detail {

/// Least rotation taking w to its necklace representative.
inline int rotation_to_necklace(const Word& w) {
  const Word target = canonical_necklace(w).canonical_word;
  for (int r = 0; r < w.length(); ++r)
    if (cyclic_shift(w, r) == target) return r;
  return 0;
}

inline std::vector<int> stabilizer(const Word& w) {
  std::vector<int> s;
  for (int r = 0; r < w.length(); ++r)
    if (cyclic_shift(w, r) == w) s.push_back(r);
  return s;
}

/// Rotations that align each non-maximal simplex with its first coface,
/// given the rotations already chosen for maximal simplices.
inline void align_lower(const Decoration& d, std::vector<int>& rotation) {
  const auto& base = d.complex();
  for (int dim = base.dimension() - 1; dim >= 0; --dim) {
    for (int v : base.of_dim(dim)) {
      if (base.is_maximal(v)) continue;
      const auto [c, j] = base.cofaces(v).front();
      const int n = d.words[c].length();
      const int nv = d.words[v].length();
      const auto f = face_morphism(d, c, j).position_map();
      int best = 0;
      for (int x = 1; x < nv; ++x)
        if (mod(f[x] + rotation[c], n) < mod(f[best] + rotation[c], n)) best = x;
      rotation[v] = mod(-best, nv);
    }
  }
}

}  // namespace detail

/// Representative of the gauge class with necklace words on maximal
/// simplices (least rotation) and aligned lower simplices.
inline Decoration gauge_normalize(const Decoration& d) {
  const auto& base = d.complex();
  std::vector<int> rotation(static_cast<std::size_t>(base.size()), 0);
  for (int u = 0; u < base.size(); ++u)
    if (base.is_maximal(u)) rotation[u] = detail::rotation_to_necklace(d.words[u]);
  detail::align_lower(d, rotation);
  return gauge_transform(d, rotation);
}

/// Least gauge-normal representative over the rotational symmetries of the
/// maximal words. Equivalent decorations have equal canonical forms.
inline Decoration canonical_form(const Decoration& d) {
  const Decoration n = gauge_normalize(d);
  const auto& base = n.complex();
  std::vector<int> tops;
  std::vector<std::vector<int>> stabs;
  for (int u = 0; u < base.size(); ++u) {
    if (!base.is_maximal(u)) continue;
    auto s = detail::stabilizer(n.words[u]);
    if (s.size() > 1) {
      tops.push_back(u);
      stabs.push_back(std::move(s));
    }
  }
  if (tops.empty()) return n;
  Decoration best = n;
  auto best_key = best.key();
  std::vector<std::size_t> pick(tops.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == stabs[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
    std::vector<int> rotation(static_cast<std::size_t>(base.size()), 0);
    for (std::size_t t = 0; t < tops.size(); ++t) rotation[tops[t]] = stabs[t][pick[t]];
    detail::align_lower(n, rotation);
    Decoration candidate = gauge_transform(n, rotation);
    auto key = candidate.key();
    if (key < best_key) {
      best = std::move(candidate);
      best_key = std::move(key);
    }
  }
  return best;
}

inline bool equivalent(const Decoration& a, const Decoration& b) {
  return a.base->simplices() == b.base->simplices() && canonical_form(a) == canonical_form(b);
}

inline constexpr std::int64_t kDefaultMaxCandidates = 100'000'000;

/// NECKLACE_MAX_CANDIDATES if set to a non-negative integer, else the default.
inline std::int64_t max_candidates_from_env() {
  if (const char* s = std::getenv("NECKLACE_MAX_CANDIDATES")) {
    char* end = nullptr;
    const long long v = std::strtoll(s, &end, 10);
    if (end != s && *end == '\0' && v >= 0) return v;
    throw error(errc::malformed_input, std::string("NECKLACE_MAX_CANDIDATES is not a count: ") + s);
  }
  return kDefaultMaxCandidates;
}

struct EnumerationOptions {
  int max_len = 0;
  std::int64_t max_candidates = kDefaultMaxCandidates;
  int threads = 1;
};

namespace detail {

/// Local positions of the vertices of sub inside sup.
inline FaceOperator face_between(const Simplex& sup, const Simplex& sub) {
  std::vector<int> image;
  for (int v : sub) image.push_back(static_cast<int>(std::lower_bound(sup.begin(), sup.end(), v) - sup.begin()));
  return {std::move(image), static_cast<int>(sup.size())};
}

class DecorationSearch {
 public:
  DecorationSearch(std::shared_ptr<const LocallyOrderedComplex> base, const EnumerationOptions& opts,
                   std::atomic<std::int64_t>& counter)
      : base_(std::move(base)), opts_(opts), counter_(counter) {
    const auto& b = *base_;
    for (int u = 0; u < b.size(); ++u)
      if (b.is_maximal(u)) tops_.push_back(u);
    for (std::size_t i = 0; i < tops_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Simplex common;
        std::set_intersection(b[tops_[i]].begin(), b[tops_[i]].end(), b[tops_[j]].begin(), b[tops_[j]].end(),
                              std::back_inserter(common));
        if (!common.empty()) overlaps_.push_back({static_cast<int>(i), static_cast<int>(j), common});
      }
    }
    // Free face morphisms and the commutation constraints between them.
    morphism_index_.assign(static_cast<std::size_t>(b.size()), {});
    for (int u = 0; u < b.size(); ++u) {
      const int k1 = b.dim(u) + 1;
      if (k1 < 2) continue;
      morphism_index_[u].assign(static_cast<std::size_t>(k1), -1);
      for (int j = 0; j < k1; ++j) {
        if (b.cofaces(b.face(u, j)).front() != std::make_pair(u, j)) {
          morphism_index_[u][j] = static_cast<int>(free_.size());
          free_.push_back({u, j});
        }
      }
    }
    constraints_by_ready_.assign(free_.size() + 1, {});
    for (int u = 0; u < b.size(); ++u) {
      const int k1 = b.dim(u) + 1;
      if (k1 < 3) continue;
      for (int k = 1; k < k1; ++k) {
        for (int j = 0; j < k; ++j) {
          const int ready = std::max({morphism_index_[u][k], morphism_index_[b.face(u, k)][j], morphism_index_[u][j],
                                      morphism_index_[b.face(u, j)][k - 1]});
          constraints_by_ready_[static_cast<std::size_t>(ready + 1)].push_back({u, j, k});
        }
      }
    }
  }

  /// Fiber lengths per base vertex compatible with max_len, in
  /// lexicographic order.
  std::vector<std::vector<int>> multiplicity_tasks() const {
    const auto& b = *base_;
    std::vector<std::vector<int>> out;
    std::vector<int> m(static_cast<std::size_t>(b.vertex_count()), 1);
    if (b.vertex_count() == 0) return out;
    auto fits = [&] {
      for (int t : tops_) {
        int sum = 0;
        for (int v : b[t]) sum += m[v];
        if (sum > opts_.max_len) return false;
      }
      return true;
    };
    std::function<void(int)> rec = [&](int v) {
      if (v == b.vertex_count()) {
        out.push_back(m);
        return;
      }
      for (int x = 1;; ++x) {
        m[v] = x;
        if (!fits()) break;
        rec(v + 1);
      }
      m[v] = 1;
    };
    if (fits()) rec(0);
    return out;
  }

  template <typename Visit>
  void run(const std::vector<int>& multiplicities, Visit&& visit) {
    m_ = multiplicities;
    words_.assign(static_cast<std::size_t>(base_->size()), Word{});
    assign_top(0, visit);
  }

 private:
  struct Overlap {
    int later;
    int earlier;
    Simplex common;
  };
  struct Constraint {
    int u;
    int j;
    int k;
  };
  struct Option {
    int shift;
    std::vector<int> map;
  };

  void tick() {
    if (counter_.fetch_add(1) + 1 > opts_.max_candidates) {
      throw error(errc::resource_limit, "decoration search exceeded " + std::to_string(opts_.max_candidates) +
                                            " candidates (set NECKLACE_MAX_CANDIDATES to raise the bound)");
    }
  }

  const std::vector<Word>& necklaces_with(const std::vector<int>& mult) {
    auto it = necklace_cache_.find(mult);
    if (it != necklace_cache_.end()) return it->second;
    std::vector<int> letters;
    for (int a = 0; a < static_cast<int>(mult.size()); ++a) letters.insert(letters.end(), mult[a], a);
    std::vector<Word> found;
    do {
      Word w(letters);
      if (is_canonical_necklace(w)) found.push_back(std::move(w));
    } while (std::next_permutation(letters.begin(), letters.end()));
    return necklace_cache_.emplace(mult, std::move(found)).first->second;
  }

  template <typename Visit>
  void assign_top(std::size_t i, Visit& visit) {
    const auto& b = *base_;
    if (i == tops_.size()) {
      complete(visit);
      return;
    }
    const int t = tops_[i];
    std::vector<int> mult;
    for (int v : b[t]) mult.push_back(m_[v]);
    for (const Word& w : necklaces_with(mult)) {
      tick();
      words_[t] = w;
      bool ok = true;
      for (const auto& o : overlaps_) {
        if (o.later != static_cast<int>(i)) continue;
        const int e = tops_[o.earlier];
        const auto a = boundary_word(w, face_between(b[t], o.common)).first;
        const auto c = boundary_word(words_[e], face_between(b[e], o.common)).first;
        if (canonical_necklace(a) != canonical_necklace(c)) {
          ok = false;
          break;
        }
      }
      if (ok) assign_top(i + 1, visit);
    }
  }

  template <typename Visit>
  void complete(Visit& visit) {
    const auto& b = *base_;
    for (int dim = b.dimension() - 1; dim >= 0; --dim) {
      for (int v : b.of_dim(dim)) {
        if (b.is_maximal(v)) continue;
        const auto [c, j] = b.cofaces(v).front();
        words_[v] = boundary_word(words_[c], FaceOperator::elementary(b.dim(c) + 1, j)).first;
      }
    }
    options_.assign(free_.size(), {});
    for (std::size_t f = 0; f < free_.size(); ++f) {
      const auto [u, j] = free_[f];
      const auto face = FaceOperator::elementary(b.dim(u) + 1, j);
      const Word& target = words_[b.face(u, j)];
      // Each rotation t of the surviving letters that reproduces the face
      // word gives one position map x -> positions[x + t].
      const auto [sub, positions] = boundary_word(words_[u], face);
      const int nv = sub.length();
      for (int t = 0; t < nv; ++t) {
        bool match = true;
        for (int x = 0; x < nv && match; ++x) match = sub[(x + t) % nv] == target[x];
        if (!match) continue;
        std::vector<int> map(nv);
        for (int x = 0; x < nv; ++x) map[x] = positions((x + t) % nv);
        const int shift = canonical_codomain_shift(map, words_[u].length())->first;
        options_[f].push_back({shift, std::move(map)});
      }
      if (options_[f].empty()) return;
    }
    fixed_.assign(static_cast<std::size_t>(b.size()), {});
    chosen_.assign(static_cast<std::size_t>(b.size()), {});
    for (int u = 0; u < b.size(); ++u) {
      const int k1 = b.dim(u) + 1;
      if (k1 < 2) continue;
      fixed_[u].resize(static_cast<std::size_t>(k1));
      chosen_[u].assign(static_cast<std::size_t>(k1), nullptr);
      for (int j = 0; j < k1; ++j) {
        if (morphism_index_[u][j] >= 0) continue;
        fixed_[u][j] = {0, make_word_morphism(words_[u], FaceOperator::elementary(k1, j), 0).position_map()};
        chosen_[u][j] = &fixed_[u][j];
      }
    }
    if (!constraints_hold(-1)) return;
    assign_shift(0, visit);
  }

  /// Commutation of the two face paths, checked on position maps by plain
  /// composition of functions.
  bool constraints_hold(int ready) const {
    const auto& b = *base_;
    for (const auto& c : constraints_by_ready_[static_cast<std::size_t>(ready + 1)]) {
      const auto& uk = chosen_[c.u][c.k]->map;
      const auto& uj = chosen_[c.u][c.j]->map;
      const auto& vkj = chosen_[b.face(c.u, c.k)][c.j]->map;
      const auto& vjk = chosen_[b.face(c.u, c.j)][c.k - 1]->map;
      for (std::size_t x = 0; x < vkj.size(); ++x)
        if (uk[vkj[x]] != uj[vjk[x]]) return false;
    }
    return true;
  }

  template <typename Visit>
  void assign_shift(std::size_t f, Visit& visit) {
    if (f == free_.size()) {
      emit(visit);
      return;
    }
    const auto [u, j] = free_[f];
    for (const auto& option : options_[f]) {
      tick();
      chosen_[u][j] = &option;
      if (constraints_hold(static_cast<int>(f))) assign_shift(f + 1, visit);
    }
  }

  template <typename Visit>
  void emit(Visit& visit) {
    const auto& b = *base_;
    Decoration d{base_, words_, {}};
    d.shifts.resize(static_cast<std::size_t>(b.size()));
    bool symmetric = false;
    for (int u = 0; u < b.size(); ++u) {
      for (const Option* o : chosen_[u]) d.shifts[u].push_back(o->shift);
      if (b.is_maximal(u) && stabilizer(words_[u]).size() > 1) symmetric = true;
    }
    if (symmetric && !(canonical_form(d) == d)) return;
    visit(d);
  }

  std::shared_ptr<const LocallyOrderedComplex> base_;
  EnumerationOptions opts_;
  std::atomic<std::int64_t>& counter_;
  std::vector<int> tops_;
  std::vector<Overlap> overlaps_;
  std::vector<std::vector<int>> morphism_index_;
  std::vector<std::pair<int, int>> free_;
  std::vector<std::vector<Constraint>> constraints_by_ready_;

  std::vector<int> m_;
  std::vector<Word> words_;
  std::vector<std::vector<Option>> options_;
  std::vector<std::vector<Option>> fixed_;
  std::vector<std::vector<const Option*>> chosen_;
  std::map<std::vector<int>, std::vector<Word>> necklace_cache_;
};

}  // namespace detail

/// Runs the search, handing every decoration to a per-task accumulator.
/// make_acc() creates one accumulator per fiber-length task; accumulators
/// are returned in task order, so results do not depend on threads.
template <typename MakeAcc>
auto enumerate_decorations_into(std::shared_ptr<const LocallyOrderedComplex> base, const EnumerationOptions& opts,
                                MakeAcc&& make_acc) {
  const int dim = base->dimension();
  if (opts.max_len < dim + 1) {
    throw error(errc::malformed_input, "max_len " + std::to_string(opts.max_len) + " is below " +
                                           std::to_string(dim + 1) + " for a " + std::to_string(dim) +
                                           "-dimensional base");
  }
  if (opts.max_candidates <= 0) throw error(errc::resource_limit, "decoration search budget is zero");
  std::atomic<std::int64_t> counter{0};
  const auto tasks = detail::DecorationSearch(base, opts, counter).multiplicity_tasks();
  using Acc = decltype(make_acc());
  std::vector<Acc> accs;
  accs.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) accs.push_back(make_acc());
  parallel_for(static_cast<int>(tasks.size()), opts.threads, [&](int i) {
    detail::DecorationSearch search(base, opts, counter);
    search.run(tasks[i], accs[i]);
  });
  return accs;
}

/// Every decoration with maximal words of length <= max_len, one per
/// equivalence class, in deterministic order.
inline std::vector<Decoration> enumerate_decorations(std::shared_ptr<const LocallyOrderedComplex> base,
                                                     const EnumerationOptions& opts) {
  struct Collect {
    std::vector<Decoration> out;
    void operator()(const Decoration& d) { out.push_back(d); }
  };
  auto accs = enumerate_decorations_into(std::move(base), opts, [] { return Collect{}; });
  std::vector<Decoration> all;
  for (auto& a : accs)
    for (auto& d : a.out) all.push_back(std::move(d));
  return all;
}

inline std::vector<Decoration> enumerate_decorations(const LocallyOrderedComplex& base, int max_len) {
  EnumerationOptions opts;
  opts.max_len = max_len;
  return enumerate_decorations(std::make_shared<const LocallyOrderedComplex>(base), opts);
}

}  // namespace necklace
