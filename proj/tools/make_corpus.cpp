// Writes the example corpus under data/: complexes, staircase bundles and the
// decorations extracted from them.
//
// The Hopf bundle over the boundary of the tetrahedron is found by search
// among 12-vertex staircase triangulations (fibers of length 3 over each base
// vertex): the first assembly in search order that validates and has Chern
// number of absolute value 1.

#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "necklace/bundles.hpp"
#include "necklace/chern.hpp"
#include "necklace/io.hpp"
#include "necklace/staircase.hpp"

namespace {

using namespace necklace;
using Key = std::vector<Simplex>;

LocallyOrderedComplex boundary_tetrahedron() {
  return LocallyOrderedComplex::from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

io::json complex_document(const LocallyOrderedComplex& c) {
  auto j = io::complex_to_json(c);
  j["v"] = io::kSchemaVersion;
  return j;
}

BundleMap reversed(const BundleMap& b) {
  BundleMap r = b;
  for (auto& [v, cycle] : r.fiber_orientation) std::reverse(cycle.begin(), cycle.end());
  return r;
}

struct Candidate {
  StaircasePiece piece;
  Key edge[3];  // 2-simplices over face j
};

// 2-simplices of the piece lying over face j of its triangle.
Key edge_key(const LocallyOrderedComplex& base, const std::vector<std::vector<int>>& fibers, const StaircasePiece& p,
             int j, int m) {
  const int dropped = base[p.base_simplex][j];
  std::set<Simplex> out;
  for (const auto& a : staircase_one_sections(base[p.base_simplex], fibers, p)) {
    Simplex f;
    for (int x : a)
      if (x / m != dropped) f.push_back(x);
    if (f.size() == 3) out.insert(f);
  }
  return {out.begin(), out.end()};
}

// Over face j the sections restrict to one edge per 2-simplex.
bool restricted_sections_distinct(const LocallyOrderedComplex& base, const std::vector<std::vector<int>>& fibers,
                                  const StaircasePiece& p, int j, int m, std::size_t two_simplices) {
  const int dropped = base[p.base_simplex][j];
  std::set<Simplex> out;
  for (auto s : staircase_sections(base[p.base_simplex], fibers, p)) {
    std::erase_if(s, [&](int x) { return x / m == dropped; });
    out.insert(s);
  }
  return out.size() == two_simplices;
}

/// Staircase assemblies over the boundary of the tetrahedron with fibers of
/// length 3 whose pieces agree over every edge, in a fixed order; visit
/// returns false to stop.
template <typename Visit>
void for_each_assembly(Visit&& visit) {
  const auto base = boundary_tetrahedron();
  const int m = 3;
  const auto fibers = uniform_fibers(4, m);
  std::vector<int> letters{0, 0, 0, 1, 1, 1, 2, 2, 2};
  std::vector<Word> words;
  do {
    words.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));

  const auto& tris = base.of_dim(2);
  std::vector<std::vector<Candidate>> cands(4);
  for (int ti = 0; ti < 4; ++ti) {
    // Rotating the fiber labels moves the first triangle's offsets to zero.
    const int offsets = ti == 0 ? 1 : 27;
    for (const auto& w : words) {
      for (int o = 0; o < offsets; ++o) {
        StaircasePiece p{tris[ti], w, {o % 3, (o / 3) % 3, o / 9}};
        const auto sections = staircase_sections(base[tris[ti]], fibers, p);
        if (std::set<Simplex>(sections.begin(), sections.end()).size() != sections.size()) continue;
        Candidate c{p, {}};
        bool ok = true;
        for (int j = 0; j < 3; ++j) {
          c.edge[j] = edge_key(base, fibers, p, j, m);
          ok = ok && restricted_sections_distinct(base, fibers, p, j, m, c.edge[j].size());
        }
        if (!ok) continue;
        cands[ti].push_back(std::move(c));
      }
    }
  }
  // Triangles [0,1,2], [0,1,3], [0,2,3], [1,2,3]; face j drops local vertex j.
  std::map<Key, std::vector<int>> by01;
  for (int i = 0; i < static_cast<int>(cands[1].size()); ++i) by01[cands[1][i].edge[2]].push_back(i);
  std::map<std::pair<Key, Key>, std::vector<int>> by02_03;
  for (int i = 0; i < static_cast<int>(cands[2].size()); ++i)
    by02_03[{cands[2][i].edge[2], cands[2][i].edge[1]}].push_back(i);
  std::map<std::tuple<Key, Key, Key>, std::vector<int>> by12_13_23;
  for (int i = 0; i < static_cast<int>(cands[3].size()); ++i)
    by12_13_23[{cands[3][i].edge[2], cands[3][i].edge[1], cands[3][i].edge[0]}].push_back(i);

  for (const auto& c0 : cands[0]) {
    auto i1 = by01.find(c0.edge[2]);
    if (i1 == by01.end()) continue;
    for (int a : i1->second) {
      const auto& c1 = cands[1][a];
      auto i2 = by02_03.find({c0.edge[1], c1.edge[1]});
      if (i2 == by02_03.end()) continue;
      for (int b : i2->second) {
        const auto& c2 = cands[2][b];
        auto i3 = by12_13_23.find({c0.edge[0], c1.edge[0], c2.edge[0]});
        if (i3 == by12_13_23.end()) continue;
        for (int c : i3->second) {
          if (!visit(base, fibers, std::vector<StaircasePiece>{c0.piece, c1.piece, c2.piece, cands[3][c].piece})) return;
        }
      }
    }
  }
}

long chern_of(const BundleMap& b) { return chern_number(extract_decoration(b, default_sections(b))).get_si(); }

void write(const std::filesystem::path& dir, const std::string& name, const io::json& j) {
  io::write_json((dir / name).string(), j);
  std::cout << "wrote " << (dir / name).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate the example corpus"};
  std::string out = "data";
  app.add_option("--out", out, "Output directory");
  CLI11_PARSE(app, argc, argv);
  const std::filesystem::path dir(out);
  std::filesystem::create_directories(dir);

  try {
    const auto bt = boundary_tetrahedron();
    write(dir, "boundary-tetrahedron.json", complex_document(bt));
    write(dir, "tetrahedron.json", complex_document(LocallyOrderedComplex::from_facets(4, {{0, 1, 2, 3}})));
    // Stellar subdivision of the tetrahedron at an interior vertex 4.
    write(dir, "subdivided-tetrahedron.json",
          complex_document(LocallyOrderedComplex::from_facets(
              5, {{0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}})));
    std::vector<Simplex> torus;
    for (int i = 0; i < 7; ++i) {
      torus.push_back({i, (i + 1) % 7, (i + 3) % 7});
      torus.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    write(dir, "torus7.json", complex_document(LocallyOrderedComplex::from_facets(7, torus)));

    const auto point = LocallyOrderedComplex::from_facets(1, {{0}});
    write(dir, "point-triangle-bundle.json",
          io::bundle_to_json(build_staircase_bundle(point, uniform_fibers(1, 3), {{0, Word{0, 0, 0}, {0}}})));

    const auto edge = LocallyOrderedComplex::from_facets(2, {{0, 1}});
    write(dir, "prism-bundle.json",
          io::bundle_to_json(build_staircase_bundle(edge, uniform_fibers(2, 3),
                                                    {{edge.id_of({0, 1}), Word{0, 1, 0, 1, 0, 1}, {0, 0}}})));

    std::vector<StaircasePiece> product;
    for (int t : bt.of_dim(2)) product.push_back({t, Word{0, 1, 2, 0, 1, 2, 0, 1, 2}, {0, 0, 0}});
    const auto trivial = build_staircase_bundle(bt, uniform_fibers(4, 3), product);
    write(dir, "trivial-bundle.json", io::bundle_to_json(trivial));
    write(dir, "trivial.json", io::decoration_to_json(extract_decoration(trivial, default_sections(trivial))));

    BundleMap hopf;
    BundleMap twisted_trivial;
    bool have_hopf = false;
    bool have_twisted = false;
    const auto fc = fundamental_cycle(bt);
    std::map<Word, Rational> local;
    for_each_assembly([&](const LocallyOrderedComplex& base, const std::vector<std::vector<int>>& fibers,
                          const std::vector<StaircasePiece>& pieces) {
      // Chern number from the piece words first; only candidates of interest
      // are built and validated.
      Rational c = 0;
      for (const auto& p : pieces) {
        auto it = local.find(p.word);
        if (it == local.end()) it = local.emplace(p.word, local_chern(p.word, 1)).first;
        c += fc.signs.at(p.base_simplex) * it->second;
      }
      const bool want_hopf = !have_hopf && (c == 1 || c == -1);
      const bool want_twisted = !have_twisted && c == 0;
      if (!want_hopf && !want_twisted) return true;
      auto b = build_staircase_bundle(base, fibers, pieces);
      if (!validate_bundle(b).ok()) return true;
      if (want_hopf && std::abs(chern_of(b)) == 1) {
        hopf = b;
        have_hopf = true;
      }
      if (want_twisted && b.total.simplices() != trivial.total.simplices() && chern_of(b) == 0) {
        twisted_trivial = b;
        have_twisted = true;
      }
      return !(have_hopf && have_twisted);
    });
    if (!have_hopf) {
      std::cerr << "no staircase assembly with Chern number +-1 found\n";
      return 1;
    }
    write(dir, "hopf-bundle.json", io::bundle_to_json(hopf));
    write(dir, "hopf.json", io::decoration_to_json(extract_decoration(hopf, default_sections(hopf))));
    write(dir, "hopf-reversed-bundle.json", io::bundle_to_json(reversed(hopf)));
    if (have_twisted) write(dir, "classical-zero-bundle.json", io::bundle_to_json(twisted_trivial));
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
