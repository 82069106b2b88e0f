#include <catch2/catch_amalgamated.hpp>

#include "snark/conjectures.hpp"
#include "test_util.hpp"

using namespace snark;

TEST_CASE("registry names round-trip") {
  for (const auto& info : conjecture_registry()) {
    ConjectureId id;
    REQUIRE(conjecture_from_name(info.name, id));
    REQUIRE(id == info.id);
  }
  ConjectureId id;
  REQUIRE(!conjecture_from_name("nope", id));
}

TEST_CASE("named graphs behind the registry") {
  auto b2 = blanusa_second();
  REQUIRE(classify(b2) == GraphClass::snark);
  REQUIRE(automorphism_count(b2) == 8);
  REQUIRE(all_two_factors_odd(b2));

  auto j5 = flower_snark(5);
  REQUIRE(classify(j5) == GraphClass::snark);
  REQUIRE(cyclic_edge_connectivity(j5) == ConnectivityValue::finite(5));
  REQUIRE(all_two_factors_odd(j5));
  REQUIRE(!are_isomorphic(b2, j5));

  auto j7 = flower_snark(7);
  REQUIRE(j7.order() == 28);
  REQUIRE(chromatic_index(j7) == 4);
}

TEST_CASE("zhang-perm: Petersen is fine, perm34 fixtures are counterexamples") {
  auto ok = check_conjecture_on_graph(ConjectureId::zhang_perm, petersen());
  REQUIRE(ok.holds);
  auto perm = load_fixture(FixtureId::appendix_perm34);
  auto rep = verify_conjecture_on_graphs(ConjectureId::zhang_perm, "fixtures:appendix-perm34",
                                         perm, -1, 2);
  REQUIRE(rep.verdict == ConjectureReport::Verdict::counterexample);
  REQUIRE(rep.witnesses.size() == 12);
}

TEST_CASE("als-odd-2factors: the fixture counterexample and its exceptions") {
  REQUIRE(check_conjecture_on_graph(ConjectureId::als_odd_2factors, petersen()).holds);
  REQUIRE(check_conjecture_on_graph(ConjectureId::als_odd_2factors, blanusa_second()).holds);
  REQUIRE(check_conjecture_on_graph(ConjectureId::als_odd_2factors, flower_snark(5)).holds);
  auto als = load_fixture(FixtureId::appendix_als);
  auto check = check_conjecture_on_graph(ConjectureId::als_odd_2factors, als[0]);
  REQUIRE(!check.holds);
}

TEST_CASE("cdcc and o5cdc hold on the small snark scope") {
  CatalogCache cache;
  auto rep = verify_conjecture_orders(ConjectureId::cdcc, 18, cache, -1, 2);
  REQUIRE(rep.verdict == ConjectureReport::Verdict::holds);
  REQUIRE(rep.graphs_checked == 3);  // Petersen + the two 18-vertex snarks
  auto rep5 = verify_conjecture_orders(ConjectureId::o5cdc, 18, cache, -1, 2);
  REQUIRE(rep5.verdict == ConjectureReport::Verdict::holds);
}

TEST_CASE("fixture verification default tier") {
  auto rep = verify_fixture(FixtureId::appendix_als, false, 2);
  REQUIRE(rep.ok());
  auto strong = verify_fixture(FixtureId::appendix_strong34, false, 2);
  REQUIRE(strong.ok());
  REQUIRE(strong.passed == 7);
}

TEST_CASE("the displayed order-30 graph is located with its printed 2-factor") {
  auto [idx, mask] = locate_display_graph_no5cdc30();
  REQUIRE(idx >= 0);
  auto graphs = load_fixture(FixtureId::appendix_no5cdc30);
  auto f = two_regular_from_edges(graphs[idx], mask);
  REQUIRE(f.spanning);
  REQUIRE(f.component_count() == 2);
}

TEST_CASE("analyze properties emit sane values for Petersen") {
  auto p = petersen();
  REQUIRE(analyze_property(p, "oddness").value == json(2));
  REQUIRE(analyze_property(p, "automorphisms").value == json(120));
  REQUIRE(analyze_property(p, "circumference").value == json(9));
  REQUIRE(analyze_property(p, "class").value == json("snark"));
  REQUIRE(analyze_property(p, "scc-length").value == json(21));
  REQUIRE(analyze_property(p, "stable-cycles").value ==
          json({{"count", 0}, {"shortest", 0}}));
  REQUIRE_THROWS_AS(analyze_property(p, "bogus"), std::invalid_argument);
}

TEST_CASE("fgj3 on Petersen holds (it is the stated exception)") {
  REQUIRE(check_conjecture_on_graph(ConjectureId::fgj3, petersen()).holds);
}

TEST_CASE("dominating cycles hold on the 18-vertex snarks") {
  CatalogCache cache;
  for (const auto& g : cache.get(CatalogClass::snark, 18)) {
    REQUIRE(check_conjecture_on_graph(ConjectureId::dominating, g).holds);
  }
}

TEST_CASE("minimum removable-cycle count over the 18-vertex permutation snarks") {
  CatalogCache cache;
  int overall_min = -1;
  for (const auto& g : cache.get(CatalogClass::snark, 18)) {
    auto defs = permutation_structures(g);
    REQUIRE(!defs.empty());
    for (const auto& f : defs) {
      int c = (int)removable_cycles(g, f).size();
      if (overall_min < 0 || c < overall_min) overall_min = c;
    }
  }
  REQUIRE(overall_min == 2);
}

TEST_CASE("fulkerson/berge/pcol-normal/total-chromatic on Petersen") {
  for (ConjectureId id : {ConjectureId::fulkerson, ConjectureId::berge,
                          ConjectureId::pcol_normal, ConjectureId::total_chromatic,
                          ConjectureId::alon_tarsi})
    REQUIRE(check_conjecture_on_graph(id, petersen()).holds);
}
