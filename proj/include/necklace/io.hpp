#pragma once

/**
 * JSON files for complexes, bundles, decorations and fundamental cycles.
 * Every top-level document carries "v": 1.
 *
 *   complex     {"v":1, "vertices":N, "simplices":[[0],[1],[0,1],...]}
 *   bundle      {"v":1, "total":complex, "base":complex, "vertex_map":[...],
 *                "fiber_orientation":{"<base vertex>":[v,...]}}
 *   decoration  {"v":1, "base":complex, "words":{"<id>":[...]},
 *                "shifts":{"<id>/<j>":s}}
 *   cycle       {"v":1, "signs":{"<id>":1 or -1}}
 *
 * Simplex ids are positions in the "simplices" list.
 */

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "necklace/bundles.hpp"
#include "necklace/chern.hpp"
#include "necklace/complex.hpp"
#include "necklace/decorations.hpp"
#include "necklace/error.hpp"

namespace necklace::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw error(errc::malformed_input, what); }

inline const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

inline int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + " must be an integer");
  return j.get<int>();
}

inline int parse_id(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    fail(what + " \"" + s + "\" is not an integer");
  }
  if (used != s.size() || v < 0) fail(what + " \"" + s + "\" is not a non-negative integer");
  return v;
}

inline void check_version(const json& j) {
  if (!j.is_object()) fail("document is not a JSON object");
  if (!j.contains("v")) fail("missing schema version field \"v\"");
  if (!j.at("v").is_number_integer() || j.at("v").get<int>() != kSchemaVersion) {
    fail("unsupported schema version " + j.at("v").dump());
  }
}

}  // namespace detail

inline json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::malformed_input, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw error(errc::malformed_input, path + ": " + e.what());
  }
}

inline void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw error(errc::malformed_input, "cannot write " + path);
  out << j.dump(1) << "\n";
}

inline json complex_to_json(const LocallyOrderedComplex& c) {
  return {{"vertices", c.vertex_count()}, {"simplices", c.simplices()}};
}

inline LocallyOrderedComplex complex_from_json(const json& j) {
  const int n = detail::as_int(detail::field(j, "vertices"), "\"vertices\"");
  const json& list = detail::field(j, "simplices");
  if (!list.is_array()) detail::fail("\"simplices\" must be an array");
  std::vector<Simplex> simplices;
  for (const auto& s : list) {
    if (!s.is_array()) detail::fail("simplex must be an array of vertices");
    Simplex t;
    for (const auto& v : s) t.push_back(detail::as_int(v, "vertex"));
    simplices.push_back(std::move(t));
  }
  return LocallyOrderedComplex(n, std::move(simplices));
}

inline json bundle_to_json(const BundleMap& b) {
  json fibers = json::object();
  for (const auto& [v, cycle] : b.fiber_orientation) fibers[std::to_string(v)] = cycle;
  return {{"v", kSchemaVersion},
          {"total", complex_to_json(b.total)},
          {"base", complex_to_json(b.base)},
          {"vertex_map", b.vertex_map},
          {"fiber_orientation", fibers}};
}

inline BundleMap bundle_from_json(const json& j) {
  detail::check_version(j);
  BundleMap b;
  b.total = complex_from_json(detail::field(j, "total"));
  b.base = complex_from_json(detail::field(j, "base"));
  const json& vm = detail::field(j, "vertex_map");
  if (!vm.is_array()) detail::fail("\"vertex_map\" must be an array");
  for (const auto& v : vm) b.vertex_map.push_back(detail::as_int(v, "vertex_map entry"));
  const json& fo = detail::field(j, "fiber_orientation");
  if (!fo.is_object()) detail::fail("\"fiber_orientation\" must be an object");
  for (const auto& [key, cycle] : fo.items()) {
    if (!cycle.is_array()) detail::fail("fiber cycle must be an array");
    std::vector<int> c;
    for (const auto& v : cycle) c.push_back(detail::as_int(v, "fiber vertex"));
    b.fiber_orientation[detail::parse_id(key, "base vertex")] = std::move(c);
  }
  return b;
}

inline json decoration_to_json(const Decoration& d) {
  json words = json::object();
  json shifts = json::object();
  for (int u = 0; u < d.complex().size(); ++u) {
    words[std::to_string(u)] = d.words[u].letters();
    for (std::size_t j = 0; j < d.shifts[u].size(); ++j) shifts[std::to_string(u) + "/" + std::to_string(j)] = d.shifts[u][j];
  }
  return {{"v", kSchemaVersion}, {"base", complex_to_json(d.complex())}, {"words", words}, {"shifts", shifts}};
}

/// Structural parse; validity of the decoration is checked separately.
inline Decoration decoration_from_json(const json& j) {
  detail::check_version(j);
  Decoration d;
  d.base = std::make_shared<const LocallyOrderedComplex>(complex_from_json(detail::field(j, "base")));
  const auto& base = *d.base;
  const json& words = detail::field(j, "words");
  const json& shifts = detail::field(j, "shifts");
  if (!words.is_object() || !shifts.is_object()) detail::fail("\"words\" and \"shifts\" must be objects");
  std::vector<bool> has_word(static_cast<std::size_t>(base.size()), false);
  d.words.resize(static_cast<std::size_t>(base.size()));
  for (const auto& [key, letters] : words.items()) {
    const int u = detail::parse_id(key, "simplex id");
    if (u >= base.size()) detail::fail("word for unknown simplex id " + key);
    if (!letters.is_array()) detail::fail("word must be an array of letters");
    std::vector<int> w;
    for (const auto& x : letters) w.push_back(detail::as_int(x, "letter"));
    d.words[u] = Word(std::move(w));
    has_word[u] = true;
  }
  for (int u = 0; u < base.size(); ++u)
    if (!has_word[u]) detail::fail("no word for simplex " + std::to_string(u) + " " + simplex_str(base[u]));

  d.shifts.resize(static_cast<std::size_t>(base.size()));
  std::vector<std::vector<bool>> has_shift(static_cast<std::size_t>(base.size()));
  for (int u = 0; u < base.size(); ++u) {
    const std::size_t faces = base.dim(u) > 0 ? static_cast<std::size_t>(base.dim(u) + 1) : 0;
    d.shifts[u].assign(faces, 0);
    has_shift[u].assign(faces, false);
  }
  for (const auto& [key, value] : shifts.items()) {
    const auto slash = key.find('/');
    if (slash == std::string::npos) detail::fail("shift key \"" + key + "\" is not \"<id>/<face>\"");
    const int u = detail::parse_id(key.substr(0, slash), "simplex id");
    const int f = detail::parse_id(key.substr(slash + 1), "face index");
    if (u >= base.size() || f >= static_cast<int>(d.shifts[u].size())) detail::fail("shift for unknown face " + key);
    d.shifts[u][f] = detail::as_int(value, "shift");
    has_shift[u][f] = true;
  }
  for (int u = 0; u < base.size(); ++u)
    for (std::size_t f = 0; f < has_shift[u].size(); ++f)
      if (!has_shift[u][f]) detail::fail("no shift for face " + std::to_string(f) + " of " + simplex_str(base[u]));
  return d;
}

inline json cycle_to_json(const FundamentalCycle& fc) {
  json signs = json::object();
  for (const auto& [t, s] : fc.signs) signs[std::to_string(t)] = s;
  return {{"v", kSchemaVersion}, {"signs", signs}};
}

inline FundamentalCycle cycle_from_json(const json& j) {
  detail::check_version(j);
  const json& signs = detail::field(j, "signs");
  if (!signs.is_object()) detail::fail("\"signs\" must be an object");
  FundamentalCycle fc;
  for (const auto& [key, s] : signs.items()) fc.signs[detail::parse_id(key, "simplex id")] = detail::as_int(s, "sign");
  return fc;
}

/// A complex file, or the "base" of a bundle or decoration file.
inline LocallyOrderedComplex load_base(const std::string& path) {
  const json j = read_json(path);
  detail::check_version(j);
  if (j.contains("simplices")) return complex_from_json(j);
  if (j.contains("base")) return complex_from_json(j.at("base"));
  detail::fail(path + " holds neither a complex nor a base");
}

}  // namespace necklace::io
