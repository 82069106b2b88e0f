#include <catch2/catch_amalgamated.hpp>

#include "snark/codec.hpp"
#include "snark/color.hpp"
#include "test_util.hpp"

using namespace snark;

TEST_CASE("chromatic index basics") {
  EdgeColoring w;
  REQUIRE(chromatic_index(k33(), &w) == 3);
  REQUIRE(is_proper_edge_coloring(k33(), w));
  REQUIRE(chromatic_index(petersen()) == 4);
  REQUIRE(chromatic_index(k4()) == 3);
}

TEST_CASE("all appendix strong snarks are uncolourable") {
  for (const auto& g : load_fixture(FixtureId::appendix_strong34))
    REQUIRE(chromatic_index(g) == 4);
}

TEST_CASE("classification") {
  REQUIRE(classify(petersen()) == GraphClass::snark);
  REQUIRE(classify(k33()) == GraphClass::colourable);
  REQUIRE(classify(prism()) == GraphClass::colourable);
  // Petersen with one vertex expanded to a triangle: still uncolourable but
  // only cyclically 3-edge-connected
  auto p = petersen();
  std::vector<std::pair<int, int>> edges;
  // replace vertex 0 (neighbors 1,4,5) by triangle {10,11,12}
  for (int e = 0; e < p.edge_count(); ++e) {
    auto [u, v] = p.edge_ends(e);
    if (u != 0 && v != 0) edges.push_back({u, v});
  }
  edges.push_back({10, 11});
  edges.push_back({11, 12});
  edges.push_back({12, 10});
  edges.push_back({10, 1});
  edges.push_back({11, 4});
  edges.push_back({12, 5});
  std::vector<std::pair<int, int>> shifted;
  for (auto [u, v] : edges) shifted.push_back({u == 0 ? 9 : u, v == 0 ? 9 : v});
  // vertex 0 no longer exists; relabel 1..12 down by one
  std::vector<std::pair<int, int>> final_edges;
  for (auto [u, v] : edges) final_edges.push_back({u - 1, v - 1});
  auto tri = CubicGraph::from_edges(12, final_edges);
  REQUIRE(chromatic_index(tri) == 4);
  REQUIRE(classify(tri) == GraphClass::uncolourable_trivial);
}

TEST_CASE("total chromatic number") {
  TotalColoring w;
  REQUIRE(total_chromatic_number(petersen(), &w) == 4);
  // verify the witness
  auto p = petersen();
  for (int v = 0; v < p.order(); ++v)
    for (int i = 0; i < 3; ++i) {
      REQUIRE(w.vertex_color[v] != w.vertex_color[p.neighbors(v)[i]]);
      REQUIRE(w.vertex_color[v] != w.edge_color[p.incident_edges(v)[i]]);
    }
  for (int v = 0; v < p.order(); ++v)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        REQUIRE(w.edge_color[p.incident_edges(v)[i]] != w.edge_color[p.incident_edges(v)[j]]);

  REQUIRE(total_chromatic_number(k4()) == 5);
  REQUIRE(total_chromatic_number(k33()) == 5);
}

TEST_CASE("normal 5-edge colorings") {
  // embedding a 3-edge-coloring in 5 colors makes every edge poor
  auto g = k33();
  EdgeColoring three;
  REQUIRE(three_edge_coloring(g, three));
  EdgeColoring embedded;
  embedded.palette_size = 5;
  embedded.color_of = three.color_of;
  for (int e = 0; e < g.edge_count(); ++e)
    REQUIRE(edge_kind(g, embedded, e) == EdgeKind::poor);

  auto any = normal_5_coloring(g, NormalMode::any);
  REQUIRE(any.has_value());
  REQUIRE(is_normal_coloring(g, *any));

  // Petersen has an all-rich normal coloring
  auto rich = normal_5_coloring(petersen(), NormalMode::all_rich);
  REQUIRE(rich.has_value());
  for (int e = 0; e < 15; ++e) REQUIRE(edge_kind(petersen(), *rich, e) == EdgeKind::rich);

  // and a normal coloring in the unrestricted mode as well
  auto pn = normal_5_coloring(petersen(), NormalMode::any);
  REQUIRE(pn.has_value());
  REQUIRE(is_normal_coloring(petersen(), *pn));
}

TEST_CASE("an edge with closed-neighborhood palette of size 4 is neither") {
  auto g = cube_q3();
  // color edges of the cube by hand: find a proper 5-coloring with a union
  // cardinality of 4 somewhere
  auto col = normal_5_coloring(g, NormalMode::any);
  REQUIRE(col.has_value());
  // perturb: recolor one edge with a fifth color to break poorness; search
  // for a proper coloring exhibiting kind 'neither'
  bool found_neither = false;
  EdgeColoring probe;
  probe.palette_size = 5;
  std::function<bool(int)> rec = [&](int e) -> bool {
    if (e == g.edge_count()) {
      for (int f = 0; f < g.edge_count() && !found_neither; ++f)
        if (edge_kind(g, probe, f) == EdgeKind::neither) found_neither = true;
      return found_neither;
    }
    auto [u, v] = g.edge_ends(e);
    for (int c = 1; c <= 5; ++c) {
      bool ok = true;
      for (int x : {u, v})
        for (int i = 0; i < 3 && ok; ++i) {
          int f = g.incident_edges(x)[i];
          if (f < e && probe.color_of[f] == c) ok = false;
        }
      if (!ok) continue;
      probe.color_of[e] = (std::uint8_t)c;
      if (rec(e + 1)) return true;
      probe.color_of[e] = 0;
    }
    return false;
  };
  REQUIRE(rec(0));
  REQUIRE(found_neither);
}

TEST_CASE("fulkerson cover of Petersen uses its six perfect matchings") {
  auto cover = fulkerson_cover(petersen());
  REQUIRE(cover.has_value());
  REQUIRE(cover->matchings.size() == 6);
  REQUIRE(cover_multiplicities_ok(petersen(), *cover, 2, -1));
  // independent oracle: the 6 distinct perfect matchings cover each edge twice
  auto pms = perfect_matchings(petersen());
  for (int e = 0; e < 15; ++e) {
    int c = 0;
    for (auto pm : pms) c += (pm >> e) & 1;
    REQUIRE(c == 2);
  }
}

TEST_CASE("colourable graphs take each color class twice") {
  auto cover = fulkerson_cover(k33());
  REQUIRE(cover.has_value());
  REQUIRE(cover_multiplicities_ok(k33(), *cover, 2, -1));
}

TEST_CASE("berge covers") {
  auto b = berge_cover(petersen());
  REQUIRE(b.has_value());
  REQUIRE(b->matchings.size() == 5);
  REQUIRE(cover_multiplicities_ok(petersen(), *b, -1, 1));
  auto bk = berge_cover(k33());
  REQUIRE(bk.has_value());
  REQUIRE(cover_multiplicities_ok(k33(), *bk, -1, 1));
}

TEST_CASE("bridged graphs are rejected by the cover searches") {
  auto bridged = CubicGraph::from_edges(
      10, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4},
           {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}, {5, 9}, {6, 9},
           {4, 9}});
  REQUIRE(has_bridge(bridged));
  REQUIRE_THROWS_AS(fulkerson_cover(bridged), std::invalid_argument);
}
