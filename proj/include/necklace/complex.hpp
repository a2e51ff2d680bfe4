#pragma once

/**
 * Finite simplicial complexes whose simplices are strictly increasing vertex
 * tuples. The local order on each simplex is the order of vertex labels, so
 * face j of a simplex deletes its j-th smallest vertex.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "necklace/error.hpp"

namespace necklace {

using Simplex = std::vector<int>;

inline std::string simplex_str(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

/// A finding of a validation pass, with the offending simplex.
struct Issue {
  std::string what;
  Simplex witness;

  std::string str() const { return what + (witness.empty() ? "" : " at " + simplex_str(witness)); }
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const noexcept { return issues.empty(); }
  void add(std::string what, Simplex witness = {}) { issues.push_back({std::move(what), std::move(witness)}); }
  void append(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  }
};

inline Simplex delete_vertex(const Simplex& s, int j) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (i != j) f.push_back(s[i]);
  return f;
}

class LocallyOrderedComplex {
 public:
  LocallyOrderedComplex() = default;

  /// Keeps the given order of simplices: simplex ids are list positions.
  /// Throws malformed_input when the list is not a valid closed complex.
  LocallyOrderedComplex(int vertex_count, std::vector<Simplex> simplices)
      : vertex_count_(vertex_count), simplices_(std::move(simplices)) {
    auto report = check();
    if (!report.ok()) throw error(errc::malformed_input, "invalid complex: " + report.issues.front().str());
    build_index();
  }

  /// Closure of the given facets; simplices ordered by dimension, then
  /// lexicographically.
  static LocallyOrderedComplex from_facets(int vertex_count, const std::vector<Simplex>& facets) {
    std::set<std::pair<std::size_t, Simplex>> all;
    for (int v = 0; v < vertex_count; ++v) all.insert({1, {v}});
    for (Simplex f : facets) {
      std::sort(f.begin(), f.end());
      const int n = static_cast<int>(f.size());
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Simplex s;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) s.push_back(f[i]);
        all.insert({s.size(), s});
      }
    }
    std::vector<Simplex> out;
    for (auto& [size, s] : all) out.push_back(s);
    return LocallyOrderedComplex(vertex_count, std::move(out));
  }

  /// Structural check without throwing.
  static ValidationReport check(int vertex_count, const std::vector<Simplex>& simplices) {
    ValidationReport r;
    std::set<Simplex> seen;
    for (const auto& s : simplices) {
      if (s.empty()) {
        r.add("empty simplex");
        continue;
      }
      bool ok = true;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= vertex_count) ok = false;
        if (i && s[i - 1] >= s[i]) ok = false;
      }
      if (!ok) {
        r.add("vertex tuple not strictly increasing within range", s);
        continue;
      }
      if (!seen.insert(s).second) r.add("duplicate simplex", s);
    }
    for (const auto& s : seen) {
      if (s.size() < 2) continue;
      for (int j = 0; j < static_cast<int>(s.size()); ++j) {
        if (!seen.count(delete_vertex(s, j))) {
          r.add("face " + simplex_str(delete_vertex(s, j)) + " missing", s);
        }
      }
    }
    for (int v = 0; v < vertex_count; ++v)
      if (!seen.count({v})) r.add("vertex " + std::to_string(v) + " not listed as a simplex");
    return r;
  }

  int vertex_count() const noexcept { return vertex_count_; }
  int size() const noexcept { return static_cast<int>(simplices_.size()); }
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  const Simplex& operator[](int id) const { return simplices_[static_cast<std::size_t>(id)]; }
  int dim(int id) const { return static_cast<int>((*this)[id].size()) - 1; }

  int dimension() const {
    int d = -1;
    for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
  }

  std::optional<int> find(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int id_of(const Simplex& s) const {
    auto id = find(s);
    if (!id) throw error(errc::malformed_input, "simplex " + simplex_str(s) + " not in complex");
    return *id;
  }

  /// Ids of the d-simplices in list order.
  const std::vector<int>& of_dim(int d) const {
    static const std::vector<int> none;
    return d >= 0 && d < static_cast<int>(by_dim_.size()) ? by_dim_[d] : none;
  }

  /// Face j (deleting the j-th vertex) of simplex id.
  int face(int id, int j) const { return faces_[static_cast<std::size_t>(id)][static_cast<std::size_t>(j)]; }

  /// Codimension-one cofaces as (coface id, face index) in increasing id order.
  const std::vector<std::pair<int, int>>& cofaces(int id) const { return cofaces_[static_cast<std::size_t>(id)]; }

  bool is_maximal(int id) const { return cofaces(id).empty(); }

 private:
  ValidationReport check() const { return check(vertex_count_, simplices_); }

  void build_index() {
    for (int id = 0; id < size(); ++id) index_[simplices_[id]] = id;
    by_dim_.assign(static_cast<std::size_t>(dimension() + 1), {});
    faces_.assign(simplices_.size(), {});
    cofaces_.assign(simplices_.size(), {});
    for (int id = 0; id < size(); ++id) {
      const auto& s = simplices_[id];
      by_dim_[s.size() - 1].push_back(id);
      if (s.size() < 2) continue;
      for (int j = 0; j < static_cast<int>(s.size()); ++j) {
        const int f = index_.at(delete_vertex(s, j));
        faces_[id].push_back(f);
        cofaces_[f].push_back({id, j});
      }
    }
    for (auto& c : cofaces_) std::sort(c.begin(), c.end());
  }

  int vertex_count_ = 0;
  std::vector<Simplex> simplices_;
  std::map<Simplex, int> index_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<std::pair<int, int>>> cofaces_;
};

}  // namespace necklace
