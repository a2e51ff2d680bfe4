#pragma once

/**
 * Explicit simplicial circle bundles: a simplicial map from a total complex
 * onto a locally ordered base, with a directed fiber cycle over every base
 * vertex.
 *
 * Over a base k-simplex U the total simplices mapping onto U are the
 * 0-sections (dimension k) and the 1-sections (dimension k+1). Every
 * 1-section has exactly one collapsed edge, which lies in the fiber over one
 * vertex of U, and joins its two 0-section facets. Oriented by the fiber
 * cycles, the 1-sections form a single directed cycle
 *   S_0 -A_0-> S_1 -A_1-> ... -A_n-> S_0,
 * and the word of U read from S_0 lists, for each A_i, the local index of the
 * base vertex carrying its collapsed edge.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "necklace/complex.hpp"
#include "necklace/cyclic_category.hpp"
#include "necklace/decorations.hpp"
#include "necklace/error.hpp"
#include "necklace/words.hpp"

namespace necklace {

struct BundleMap {
  LocallyOrderedComplex total;
  LocallyOrderedComplex base;
  std::vector<int> vertex_map;                     // total vertex -> base vertex
  std::map<int, std::vector<int>> fiber_orientation;  // base vertex -> directed fiber cycle
};

struct ElementaryBundleView {
  int base_simplex = -1;  // id in the base complex
  int dim = 0;
  /// zero_sections[i] -> zero_sections[i+1] through one_sections[i]; ids in
  /// the total complex.
  std::vector<int> zero_sections;
  std::vector<int> one_sections;
  /// Local index (0..dim) of the base vertex under the collapsed edge of
  /// one_sections[i].
  std::vector<int> collapsed_letter;

  int length() const { return static_cast<int>(one_sections.size()); }

  int position_of(int zero_section) const {
    auto it = std::find(zero_sections.begin(), zero_sections.end(), zero_section);
    if (it == zero_sections.end()) {
      throw error(errc::section_not_found, "total simplex " + std::to_string(zero_section) +
                                               " is not a 0-section over base simplex " +
                                               std::to_string(base_simplex));
    }
    return static_cast<int>(it - zero_sections.begin());
  }
};

/// One designated 0-section (total simplex id) per base simplex.
struct SectionChoice {
  std::vector<int> zero_section;
};

namespace detail {

inline Simplex image_of(const BundleMap& b, const Simplex& s) {
  Simplex img;
  for (int v : s) img.push_back(b.vertex_map[v]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

inline int successor_in_fiber(const BundleMap& b, int total_vertex) {
  const auto& cycle = b.fiber_orientation.at(b.vertex_map[total_vertex]);
  auto it = std::find(cycle.begin(), cycle.end(), total_vertex);
  if (it == cycle.end()) return -1;
  ++it;
  return it == cycle.end() ? cycle.front() : *it;
}

/// Total simplices grouped by the base simplex they map onto.
inline std::vector<std::vector<int>> simplices_over(const BundleMap& b, ValidationReport* report) {
  std::vector<std::vector<int>> over(static_cast<std::size_t>(b.base.size()));
  for (int t = 0; t < b.total.size(); ++t) {
    const auto img = image_of(b, b.total[t]);
    auto id = b.base.find(img);
    if (!id) {
      if (report) report->add("total simplex maps onto " + simplex_str(img) + ", not a base simplex", b.total[t]);
      continue;
    }
    over[*id].push_back(t);
  }
  return over;
}

/// Builds the view from the total simplices over U, recording problems in
/// report. Returns false when no consistent cycle exists.
inline bool build_view(const BundleMap& b, int u, const std::vector<int>& over, ElementaryBundleView& view,
                       ValidationReport& report) {
  const Simplex& U = b.base[u];
  const int k = static_cast<int>(U.size()) - 1;
  view = {};
  view.base_simplex = u;
  view.dim = k;

  std::vector<int> zeros;
  std::vector<int> ones;
  for (int t : over) {
    const int d = b.total.dim(t);
    if (d == k) {
      zeros.push_back(t);
    } else if (d == k + 1) {
      ones.push_back(t);
    } else if (d > k + 1) {
      report.add("total simplex of dimension " + std::to_string(d) + " over a " + std::to_string(k) +
                     "-simplex (undivided cell)",
                 b.total[t]);
    }
  }
  if (zeros.empty() || ones.empty()) {
    report.add("no 0- or 1-sections over base simplex", U);
    return false;
  }
  if (zeros.size() != ones.size()) {
    report.add("0-section count " + std::to_string(zeros.size()) + " != 1-section count " +
                   std::to_string(ones.size()),
               U);
  }

  // Directed step of each 1-section, from the facet holding the tail of its
  // collapsed edge to the facet holding the head.
  std::map<int, std::pair<int, int>> step_from;  // tail 0-section -> (1-section, head 0-section)
  std::map<int, int> in_degree;
  bool ok = true;
  for (int a : ones) {
    const Simplex& A = b.total[a];
    std::map<int, std::vector<int>> by_base;
    for (int v : A) by_base[b.vertex_map[v]].push_back(v);
    int collapsed_base = -1;
    for (auto& [bv, vs] : by_base)
      if (vs.size() == 2) collapsed_base = bv;
    const auto& pair = by_base[collapsed_base];
    int tail = -1;
    int head = -1;
    if (successor_in_fiber(b, pair[0]) == pair[1]) {
      tail = pair[0];
      head = pair[1];
    } else if (successor_in_fiber(b, pair[1]) == pair[0]) {
      tail = pair[1];
      head = pair[0];
    } else {
      report.add("collapsed edge is not an edge of the directed fiber cycle", A);
      ok = false;
      continue;
    }
    Simplex from = A;
    from.erase(std::find(from.begin(), from.end(), head));
    Simplex to = A;
    to.erase(std::find(to.begin(), to.end(), tail));
    const int s_from = b.total.id_of(from);
    const int s_to = b.total.id_of(to);
    if (!step_from.emplace(s_from, std::make_pair(a, s_to)).second) {
      report.add("0-section starts two 1-sections; fiber orientations disagree", from);
      ok = false;
    }
    if (++in_degree[s_to] > 1) {
      report.add("0-section ends two 1-sections; fiber orientations disagree", to);
      ok = false;
    }
  }
  if (!ok) return false;

  const int start = *std::min_element(zeros.begin(), zeros.end());
  int cur = start;
  std::set<int> visited;
  do {
    auto it = step_from.find(cur);
    if (it == step_from.end()) {
      report.add("0-section with no outgoing 1-section", b.total[cur]);
      return false;
    }
    visited.insert(cur);
    view.zero_sections.push_back(cur);
    const int a = it->second.first;
    view.one_sections.push_back(a);
    // local letter of the collapsed edge
    const Simplex& A = b.total[a];
    std::map<int, int> count;
    for (int v : A) ++count[b.vertex_map[v]];
    int letter = -1;
    for (int j = 0; j <= k; ++j)
      if (count[U[j]] == 2) letter = j;
    view.collapsed_letter.push_back(letter);
    cur = it->second.second;
  } while (cur != start && !visited.count(cur));

  if (cur != start) {
    report.add("1-sections over base simplex do not close into a cycle", U);
    return false;
  }
  if (view.zero_sections.size() != zeros.size() || view.one_sections.size() != ones.size()) {
    report.add("1-sections over base simplex form more than one cycle", U);
    return false;
  }
  return true;
}

}  // namespace detail

/// Every violated invariant, with the offending simplex. Empty means every
/// elementary view is a single oriented circle and orientations agree.
inline ValidationReport validate_bundle(const BundleMap& b) {
  ValidationReport report;
  if (static_cast<int>(b.vertex_map.size()) != b.total.vertex_count()) {
    report.add("vertex_map has " + std::to_string(b.vertex_map.size()) + " entries for " +
               std::to_string(b.total.vertex_count()) + " total vertices");
    return report;
  }
  for (int v = 0; v < b.total.vertex_count(); ++v) {
    if (b.vertex_map[v] < 0 || b.vertex_map[v] >= b.base.vertex_count()) {
      report.add("vertex_map sends total vertex " + std::to_string(v) + " outside the base", {v});
    }
  }
  if (!report.ok()) return report;

  // Fibers over vertices must be exactly the given directed cycles.
  for (int bv = 0; bv < b.base.vertex_count(); ++bv) {
    auto it = b.fiber_orientation.find(bv);
    if (it == b.fiber_orientation.end()) {
      report.add("no fiber orientation for base vertex " + std::to_string(bv), {bv});
      continue;
    }
    const auto& cycle = it->second;
    std::set<int> listed(cycle.begin(), cycle.end());
    std::set<int> actual;
    for (int v = 0; v < b.total.vertex_count(); ++v)
      if (b.vertex_map[v] == bv) actual.insert(v);
    if (listed.size() != cycle.size()) report.add("fiber orientation lists a vertex twice", {bv});
    if (listed != actual) report.add("fiber orientation does not list exactly the fiber vertices", {bv});
    if (cycle.size() < 3) report.add("fiber over a base vertex has fewer than 3 vertices", {bv});
  }
  if (!report.ok()) return report;

  std::set<Simplex> fiber_edges;
  for (const auto& [bv, cycle] : b.fiber_orientation) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Simplex e{cycle[i], cycle[(i + 1) % cycle.size()]};
      std::sort(e.begin(), e.end());
      fiber_edges.insert(e);
    }
  }
  auto over = detail::simplices_over(b, &report);
  for (int bv : b.base.of_dim(0)) {
    for (int t : over[bv]) {
      const Simplex& s = b.total[t];
      if (s.size() == 2 && !fiber_edges.count(s)) report.add("fiber edge not in the directed cycle", s);
      if (s.size() > 2) report.add("fiber over a base vertex contains a higher simplex", s);
    }
  }
  for (const auto& e : fiber_edges)
    if (!b.total.find(e)) report.add("fiber cycle edge missing from the total complex", e);
  if (!report.ok()) return report;

  for (int u = 0; u < b.base.size(); ++u) {
    ElementaryBundleView view;
    detail::build_view(b, u, over[u], view, report);
  }
  return report;
}

inline ElementaryBundleView elementary_view(const BundleMap& b, int base_simplex) {
  std::vector<int> over;
  const Simplex& U = b.base[base_simplex];
  for (int t = 0; t < b.total.size(); ++t)
    if (detail::image_of(b, b.total[t]) == U) over.push_back(t);
  ElementaryBundleView view;
  ValidationReport report;
  if (!detail::build_view(b, base_simplex, over, view, report) || !report.ok()) {
    const bool orientation = std::any_of(report.issues.begin(), report.issues.end(), [](const Issue& i) {
      return i.what.find("orientation") != std::string::npos;
    });
    throw error(orientation ? errc::inconsistent_orientation : errc::invalid_bundle,
                report.issues.empty() ? "no elementary bundle" : report.issues.front().str());
  }
  return view;
}

/// The word of U read from the given 0-section.
inline Word extract_word(const ElementaryBundleView& view, int zero_section) {
  const int r = view.position_of(zero_section);
  const int n = view.length();
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = view.collapsed_letter[(r + i) % n];
  return Word(std::move(letters));
}

inline Word extract_word(const BundleMap& b, int base_simplex, int zero_section) {
  return extract_word(elementary_view(b, base_simplex), zero_section);
}

/// The shift c with extract_word(to) == cyclic_shift(extract_word(from), c).
/// If `to` sits p steps after `from` along the orientation, c = -p mod n.
inline int section_shift(const ElementaryBundleView& view, int from, int to) {
  const int n = view.length();
  const int p = mod(view.position_of(to) - view.position_of(from), n);
  return mod(-p, n);
}

inline int section_shift(const BundleMap& b, int base_simplex, int from, int to) {
  return section_shift(elementary_view(b, base_simplex), from, to);
}

/// First 0-section of every elementary view.
inline SectionChoice default_sections(const BundleMap& b) {
  SectionChoice s;
  for (int u = 0; u < b.base.size(); ++u) s.zero_section.push_back(elementary_view(b, u).zero_sections.front());
  return s;
}

/// The 0-section over face j of U obtained by dropping the vertex of a
/// 0-section of U that lies over U's j-th vertex.
inline int restrict_section(const BundleMap& b, int base_simplex, int zero_section, int j) {
  const int bv = b.base[base_simplex][j];
  Simplex s;
  for (int v : b.total[zero_section])
    if (b.vertex_map[v] != bv) s.push_back(v);
  return b.total.id_of(s);
}

/// Words and face shifts of the bundle under the section choice. Each face
/// shift is the section shift from S_0^U to a 0-section of U restricting to
/// S_0^V, stored in least form; extraction also checks that every 1-section
/// of the face sits inside the 1-section of U it is mapped to.
inline Decoration extract_decoration(const BundleMap& b, const SectionChoice& s) {
  auto report = validate_bundle(b);
  if (!report.ok()) throw error(errc::invalid_bundle, report.issues.front().str());
  if (static_cast<int>(s.zero_section.size()) != b.base.size()) {
    throw error(errc::malformed_input, "section choice does not cover every base simplex");
  }

  std::vector<ElementaryBundleView> views;
  std::vector<Word> words;
  for (int u = 0; u < b.base.size(); ++u) {
    views.push_back(elementary_view(b, u));
    words.push_back(extract_word(views.back(), s.zero_section[u]));
  }

  Decoration d{std::make_shared<const LocallyOrderedComplex>(b.base), words, {}};
  d.shifts.resize(static_cast<std::size_t>(b.base.size()));
  for (int u = 0; u < b.base.size(); ++u) {
    const auto& view = views[u];
    const int k = view.dim;
    if (k == 0) continue;
    d.shifts[u].assign(static_cast<std::size_t>(k + 1), 0);
    const int n = view.length();
    const int r0 = view.position_of(s.zero_section[u]);
    for (int j = 0; j <= k; ++j) {
      const int v = b.base.face(u, j);
      int found = -1;
      for (int p = 0; p < n && found < 0; ++p) {
        if (restrict_section(b, u, view.zero_sections[(r0 + p) % n], j) == s.zero_section[v]) found = p;
      }
      if (found < 0) {
        throw error(errc::invalid_bundle, "no 0-section restricts to the chosen face section at " +
                                              simplex_str(b.base[u]));
      }
      const int shift = mod(-found, n);
      const auto face = FaceOperator::elementary(k + 1, j);
      const auto [sub, positions] = boundary_word(cyclic_shift(words[u], shift), face);
      if (sub != words[v]) {
        throw error(errc::invalid_bundle, "boundary word " + sub.str() + " differs from face word " +
                                              words[v].str() + " at " + simplex_str(b.base[u]));
      }
      const auto morphism = make_word_morphism(words[u], face, shift);
      const auto& face_view = views[v];
      const int rv = face_view.position_of(s.zero_section[v]);
      for (int i = 0; i < words[v].length(); ++i) {
        const Simplex& small = b.total[face_view.one_sections[(rv + i) % face_view.length()]];
        const Simplex& big = b.total[view.one_sections[(r0 + morphism(i)) % n]];
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) {
          throw error(errc::invalid_bundle, "1-section " + simplex_str(small) + " is not a face of " +
                                                simplex_str(big));
        }
      }
      d.shifts[u][j] = morphism.shift;
    }
  }
  return d;
}

}  // namespace necklace
