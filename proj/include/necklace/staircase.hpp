#pragma once

/**
 * Builds classical total complexes from per-simplex staircases.
 *
 * Over a base simplex U = [u_0..u_k] with directed fiber cycles C_i, a word w
 * and start offsets o_i give the 0-sections
 *   S_p = { C_i[o_i + #{q < p : w[q] = i}] : i = 0..k },   p = 0..|w|-1,
 * and the 1-sections S_p u S_{p+1}, whose collapsed edge advances the fiber
 * over u_{w[p]} by one step. The word read from S_0 is w.
 *
 * Pieces over maximal simplices are closed under faces and merged; whether
 * they fit together into a bundle is left to validate_bundle.
 */

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "necklace/bundles.hpp"
#include "necklace/complex.hpp"
#include "necklace/error.hpp"
#include "necklace/words.hpp"

namespace necklace {

struct StaircasePiece {
  int base_simplex = -1;     // id in the base complex
  Word word;                 // alphabet = local vertex indices
  std::vector<int> offsets;  // start position in each fiber cycle
};

/// Vertex sets of the 0-sections S_0..S_{n-1} of one staircase.
inline std::vector<Simplex> staircase_sections(const Simplex& base_simplex,
                                               const std::vector<std::vector<int>>& fibers,
                                               const StaircasePiece& piece) {
  const int k1 = static_cast<int>(base_simplex.size());
  if (piece.word.alphabet_size() != k1 || static_cast<int>(piece.offsets.size()) != k1) {
    throw error(errc::dimension_mismatch, "staircase over " + simplex_str(base_simplex) + " needs " +
                                              std::to_string(k1) + " letters and offsets");
  }
  std::vector<int> count(k1, 0);
  std::vector<Simplex> out;
  for (int p = 0; p < piece.word.length(); ++p) {
    Simplex s;
    for (int i = 0; i < k1; ++i) {
      const auto& cycle = fibers[base_simplex[i]];
      s.push_back(cycle[mod(piece.offsets[i] + count[i], static_cast<int>(cycle.size()))]);
    }
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
    ++count[piece.word[p]];
  }
  return out;
}

/// Vertex sets of the 1-sections of one staircase, in cycle order.
inline std::vector<Simplex> staircase_one_sections(const Simplex& base_simplex,
                                                   const std::vector<std::vector<int>>& fibers,
                                                   const StaircasePiece& piece) {
  const auto sections = staircase_sections(base_simplex, fibers, piece);
  const int n = static_cast<int>(sections.size());
  std::vector<Simplex> out;
  for (int p = 0; p < n; ++p) {
    Simplex a;
    std::set_union(sections[p].begin(), sections[p].end(), sections[(p + 1) % n].begin(),
                   sections[(p + 1) % n].end(), std::back_inserter(a));
    out.push_back(std::move(a));
  }
  return out;
}

/// fibers[v] is the directed cycle of total vertex ids over base vertex v;
/// together they must list 0..N-1 once each.
inline BundleMap build_staircase_bundle(const LocallyOrderedComplex& base, const std::vector<std::vector<int>>& fibers,
                                        const std::vector<StaircasePiece>& pieces) {
  if (static_cast<int>(fibers.size()) != base.vertex_count()) {
    throw error(errc::dimension_mismatch, "one fiber cycle per base vertex required");
  }
  int total_vertices = 0;
  for (const auto& f : fibers) total_vertices += static_cast<int>(f.size());
  std::vector<int> vertex_map(static_cast<std::size_t>(total_vertices), -1);
  for (int v = 0; v < base.vertex_count(); ++v) {
    for (int x : fibers[v]) {
      if (x < 0 || x >= total_vertices || vertex_map[x] != -1) {
        throw error(errc::malformed_input, "fiber cycles must list every total vertex exactly once");
      }
      vertex_map[x] = v;
    }
  }
  std::vector<Simplex> facets;
  for (const auto& piece : pieces) {
    const auto ones = staircase_one_sections(base[piece.base_simplex], fibers, piece);
    facets.insert(facets.end(), ones.begin(), ones.end());
  }
  BundleMap b;
  b.total = LocallyOrderedComplex::from_facets(total_vertices, facets);
  b.base = base;
  b.vertex_map = std::move(vertex_map);
  for (int v = 0; v < base.vertex_count(); ++v) b.fiber_orientation[v] = fibers[v];
  return b;
}

/// Fiber cycles of equal length m over every base vertex, numbered
/// v*m .. v*m+m-1 in order.
inline std::vector<std::vector<int>> uniform_fibers(int base_vertices, int m) {
  std::vector<std::vector<int>> f(static_cast<std::size_t>(base_vertices));
  for (int v = 0; v < base_vertices; ++v)
    for (int i = 0; i < m; ++i) f[v].push_back(v * m + i);
  return f;
}

}  // namespace necklace
