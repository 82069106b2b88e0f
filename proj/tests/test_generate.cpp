#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <map>
#include <set>

#include "snark/generate.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace snark;

TEST_CASE("edge insertion on K4") {
  auto g = k4();
  // disjoint pair: (0,1) and (2,3) are edges 0 and 5
  auto child1 = insert_edge(g, 0, 5);
  REQUIRE(child1.order() == 6);
  REQUIRE(child1.edge_count() == 9);
  REQUIRE(are_isomorphic(child1, k33()));
  // adjacent pair
  auto child2 = insert_edge(g, 0, 1);  // edges (0,1) and (0,2) share vertex 0
  REQUIRE(are_isomorphic(child2, prism()));
  REQUIRE_THROWS_AS(insert_edge(g, 2, 2), std::invalid_argument);
}

TEST_CASE("edge reduction") {
  // K3,3: any edge reduces to K4
  for (int e = 0; e < k33().edge_count(); ++e) {
    auto r = reduce_edge(k33(), e);
    REQUIRE(r.has_value());
    REQUIRE(are_isomorphic(*r, k4()));
  }
  // K4: order would drop below 4
  REQUIRE(!reduce_edge(k4(), 0).has_value());
  // Petersen: girth 5 means every reduction stays simple
  for (int e = 0; e < 15; ++e) {
    auto r = reduce_edge(petersen(), e);
    REQUIRE(r.has_value());
    REQUIRE(r->order() == 8);
  }
  // prism: reducing a triangle edge would create a parallel edge
  bool some_rejected = false;
  for (int e = 0; e < prism().edge_count(); ++e)
    if (!reduce_edge(prism(), e).has_value()) some_rejected = true;
  REQUIRE(some_rejected);
}

TEST_CASE("insertion and reduction are inverse up to isomorphism") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 30; ++iter) {
    auto g = test_util::random_cubic(12, rng);
    int m = g.edge_count();
    std::uniform_int_distribution<int> pick(0, m - 1);
    int e1 = pick(rng), e2 = pick(rng);
    if (e1 == e2) continue;
    auto child = insert_edge(g, e1, e2);
    // the inserted edge is the last one: between vertices n and n+1
    int inserted = child.edge_index(g.order(), g.order() + 1);
    REQUIRE(inserted >= 0);
    auto back = reduce_edge(child, inserted);
    REQUIRE(back.has_value());
    REQUIRE(are_isomorphic(*back, g));
  }
}

TEST_CASE("expanding all 3-connected parents yields exactly the 3-connected level") {
  // completeness + closure against the independent enumeration
  ParentLevel level = ParentLevel::seed();
  for (int n = 6; n <= 12; n += 2) {
    level = expand_level_full(level);
    REQUIRE(level.order == n);
    auto expected = oracle::all_cubic_3connected(n);
    REQUIRE(level.size() == expected.size());
    // compare as canonical string sets through the oracle's own form
    std::set<std::string> got, want;
    for (size_t i = 0; i < level.size(); ++i)
      got.insert(oracle::canonical_string(test_util::to_rows(level.get(i))));
    for (const auto& rows : expected) want.insert(oracle::canonical_string(rows));
    REQUIRE(got == want);
  }
}

TEST_CASE("derived colorings") {
  REQUIRE(derive_colorings(petersen()).empty());

  auto cols = derive_colorings(k33());
  REQUIRE(!cols.empty());
  for (const auto& col : cols) {
    REQUIRE(is_proper_edge_coloring(k33(), col));
    // every induced 2-factor has only even components
    const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    for (const auto& pr : pairs) {
      EdgeMask fedges = 0;
      for (int e = 0; e < 9; ++e)
        if (col.color_of[e] == pr[0] || col.color_of[e] == pr[1]) fedges |= EdgeMask{1} << e;
      auto f = two_regular_from_edges(k33(), fedges);
      REQUIRE(f.spanning);
      REQUIRE(f.odd_component_count() == 0);
    }
  }
}

TEST_CASE("cycle swap changes exactly two of the three induced 2-factors") {
  // cube with both squares colored alternately and the matching in color 3
  auto g = cube_q3();
  EdgeColoring base;
  base.palette_size = 3;
  auto set = [&](int u, int v, int c) { base.color_of[g.edge_index(u, v)] = (std::uint8_t)c; };
  set(0, 1, 1); set(1, 2, 2); set(2, 3, 1); set(3, 0, 2);
  set(4, 5, 1); set(5, 6, 2); set(6, 7, 1); set(7, 4, 2);
  set(0, 4, 3); set(1, 5, 3); set(2, 6, 3); set(3, 7, 3);
  REQUIRE(is_proper_edge_coloring(g, base));

  auto swapped = cycle_swap_recoloring(g, base);
  REQUIRE(swapped.has_value());
  REQUIRE(is_proper_edge_coloring(g, *swapped));

  auto factor_edges = [&](const EdgeColoring& col, int a, int b) {
    EdgeMask out = 0;
    for (int e = 0; e < g.edge_count(); ++e)
      if (col.color_of[e] == a || col.color_of[e] == b) out |= EdgeMask{1} << e;
    return out;
  };
  int changed = 0;
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& pr : pairs)
    if (factor_edges(base, pr[0], pr[1]) != factor_edges(*swapped, pr[0], pr[1])) ++changed;
  REQUIRE(changed == 2);
}

TEST_CASE("lookahead pairs: uncolourable graphs yield none") {
  REQUIRE(lookahead_forbidden_pairs(petersen(), derive_colorings(petersen())).empty());
}

TEST_CASE("lookahead pairs on K3,3 cover same-hamiltonian-cycle pairs") {
  auto g = k33();
  auto cols = derive_colorings(g);
  REQUIRE(!cols.empty());
  auto forb = lookahead_forbidden_pairs(g, {cols[0]});
  // each color-pair 2-factor of K3,3 is a hamiltonian 6-cycle, so each of the
  // three 2-factors forbids all C(6,2)=15 pairs among its edges
  std::set<std::pair<int, int>> fs;
  for (const auto& p : forb) fs.insert({p.e1, p.e2});
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& pr : pairs) {
    std::vector<int> fedges;
    for (int e = 0; e < 9; ++e)
      if (cols[0].color_of[e] == pr[0] || cols[0].color_of[e] == pr[1]) fedges.push_back(e);
    REQUIRE(fedges.size() == 6);
    for (size_t i = 0; i < fedges.size(); ++i)
      for (size_t j = i + 1; j < fedges.size(); ++j)
        REQUIRE(fs.count({std::min(fedges[i], fedges[j]), std::max(fedges[i], fedges[j])}) == 1);
  }
}

TEST_CASE("lookahead soundness: forbidden pairs always give colourable children") {
  for (int n = 6; n <= 10; n += 2)
    for (const auto& rows : oracle::all_cubic_3connected(n)) {
      auto g = test_util::from_rows(rows);
      auto cols = derive_colorings(g);
      if (cols.empty()) continue;
      for (const auto& p : lookahead_forbidden_pairs(g, cols))
        REQUIRE(is_colourable(insert_edge(g, p.e1, p.e2)));
    }
}

TEST_CASE("square pairs are prunable exactly per the 4-cycle criterion") {
  auto g = k33();
  // a1=0,b1=3 edge; a2=1,b2=4 edge; edge (0,4) connects their endpoints
  int e1 = g.edge_index(0, 3), e2 = g.edge_index(1, 4);
  REQUIRE(square_pair_prunable(g, make_edge_pair(g, e1, e2)));
  REQUIRE(!square_pair_prunable(petersen(), make_edge_pair(petersen(), 0, 7)));
  // soundness on all colourable 3-connected parents up to 10 vertices
  for (int n = 6; n <= 10; n += 2)
    for (const auto& rows : oracle::all_cubic_3connected(n)) {
      auto g2 = test_util::from_rows(rows);
      if (!is_colourable(g2)) continue;
      for (int a = 0; a < g2.edge_count(); ++a)
        for (int b = a + 1; b < g2.edge_count(); ++b)
          if (square_pair_prunable(g2, make_edge_pair(g2, a, b)))
            REQUIRE(is_colourable(insert_edge(g2, a, b)));
    }
}

TEST_CASE("generate: the order-10 snark is Petersen") {
  GenerationSpec spec;
  spec.target_order = 10;
  spec.cls = CatalogClass::snark;
  auto res = generate_catalog(spec);
  REQUIRE(res.graphs.size() == 1);
  REQUIRE(are_isomorphic(res.graphs[0], petersen()));
}

TEST_CASE("generate: no snarks on 12 or 14 vertices") {
  for (int n : {12, 14}) {
    GenerationSpec spec;
    spec.target_order = n;
    spec.cls = CatalogClass::snark;
    REQUIRE(generate_catalog(spec).graphs.empty());
  }
}

TEST_CASE("generate: cyclically 4-edge-connected counts at small orders") {
  std::map<int, size_t> expected = {{8, 2}, {10, 5}, {12, 18}};
  for (auto [n, count] : expected) {
    GenerationSpec spec;
    spec.target_order = n;
    spec.cls = CatalogClass::cyc4;
    auto res = generate_catalog(spec);
    REQUIRE(res.graphs.size() == count);
    for (const auto& g : res.graphs) REQUIRE(cyclic_edge_connectivity(g).at_least(4));
  }
}

TEST_CASE("generate: class nesting and output ordering at order 18") {
  GenerationSpec spec;
  spec.target_order = 18;
  auto get_codes = [&](CatalogClass c) {
    spec.cls = c;
    auto res = generate_catalog(spec);
    std::vector<CanonicalCode> codes;
    for (const auto& g : res.graphs) codes.push_back(canonical_code(g));
    // stream must be strictly ascending by canonical code
    for (size_t i = 1; i < codes.size(); ++i) REQUIRE(codes[i - 1] < codes[i]);
    return codes;
  };
  auto weak = get_codes(CatalogClass::weaksnark);
  auto snarks = get_codes(CatalogClass::snark);
  auto snark5s = get_codes(CatalogClass::snark5);
  REQUIRE(snarks.size() == 2);   // the two 18-vertex snarks
  REQUIRE(weak.size() == 2);     // no girth-4 weak snarks on 18 vertices
  REQUIRE(snark5s.empty());      // neither is cyclically 5-edge-connected
  auto contains = [](const std::vector<CanonicalCode>& big, const CanonicalCode& c) {
    for (const auto& x : big)
      if (x == c) return true;
    return false;
  };
  for (const auto& c : snarks) REQUIRE(contains(weak, c));
  for (const auto& c : snark5s) REQUIRE(contains(snarks, c));
}

TEST_CASE("generate: shards partition the order-18 snarks") {
  GenerationSpec spec;
  spec.target_order = 18;
  spec.cls = CatalogClass::snark;
  auto full = generate_catalog(spec);
  std::set<std::vector<std::uint8_t>> full_codes;
  for (const auto& g : full.graphs) full_codes.insert(canonical_code(g).as_bytes());

  std::set<std::vector<std::uint8_t>> sharded;
  size_t total = 0;
  for (int i = 0; i < 3; ++i) {
    GenerationSpec s = spec;
    s.shard_count = 3;
    s.shard_index = i;
    auto part = generate_catalog(s);
    total += part.graphs.size();
    for (const auto& g : part.graphs) sharded.insert(canonical_code(g).as_bytes());
  }
  REQUIRE(total == full_codes.size());  // disjoint
  REQUIRE(sharded == full_codes);       // complete
}

TEST_CASE("look-ahead path agrees with brute-force classification of the full level") {
  // classify every 3-connected cubic graph directly (no pruning, no final
  // pair restrictions) and compare against the look-ahead generation
  ParentLevel level = ParentLevel::seed();
  while (level.order < 18) level = expand_level_full(level);
  std::map<std::string, std::set<std::vector<std::uint8_t>>> brute;
  for (size_t i = 0; i < level.size(); ++i) {
    auto g = level.get(i);
    auto cls = classify(g);
    if (cls == GraphClass::snark || cls == GraphClass::weak_snark) {
      brute["weaksnark"].insert(canonical_code(g).as_bytes());
      if (cls == GraphClass::snark) {
        brute["snark"].insert(canonical_code(g).as_bytes());
        if (cyclic_edge_connectivity(g).at_least(5))
          brute["snark5"].insert(canonical_code(g).as_bytes());
      }
    }
  }
  for (const char* cls_name : {"weaksnark", "snark", "snark5"}) {
    GenerationSpec spec;
    spec.target_order = 18;
    CatalogClass cls;
    REQUIRE(catalog_class_from_name(cls_name, cls));
    spec.cls = cls;
    auto res = generate_catalog(spec);
    std::set<std::vector<std::uint8_t>> got;
    for (const auto& g : res.graphs) got.insert(canonical_code(g).as_bytes());
    REQUIRE(got == brute[cls_name]);
  }
}

TEST_CASE("disk-staged expansion matches the in-memory pipeline") {
  // build levels to 14 in memory, stage level 16 on disk, finish at 18
  ParentLevel level = ParentLevel::seed();
  while (level.order < 14) level = expand_level_full(level);
  auto tmp = std::filesystem::temp_directory_path() / "snark-test-level16.g6";
  size_t count = expand_level_to_file(level, tmp.string(), 1 << 16, {}, 2);
  REQUIRE(count == 2828);  // 3-connected cubic graphs on 16 vertices

  GenerationSpec spec;
  spec.target_order = 18;
  spec.cls = CatalogClass::snark;
  auto streamed = final_expansion_stream(tmp.string(), 16, spec);
  auto in_memory = generate_catalog(spec);
  REQUIRE(streamed.graphs.size() == in_memory.graphs.size());
  for (size_t i = 0; i < streamed.graphs.size(); ++i)
    REQUIRE(canonical_code(streamed.graphs[i]) == canonical_code(in_memory.graphs[i]));
  std::filesystem::remove(tmp);
}

TEST_CASE("generate: automorphism groups of the two 18-vertex snarks") {
  GenerationSpec spec;
  spec.target_order = 18;
  spec.cls = CatalogClass::snark;
  auto res = generate_catalog(spec);
  REQUIRE(res.graphs.size() == 2);
  std::multiset<long long> orders;
  for (const auto& g : res.graphs) orders.insert(automorphism_count(g));
  REQUIRE(orders == std::multiset<long long>{4, 8});
}
