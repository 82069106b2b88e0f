#include <catch2/catch_amalgamated.hpp>

#include "snark/core.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace snark;

TEST_CASE("build_graph validates and indexes edges") {
  auto g = k4();
  REQUIRE(g.order() == 4);
  REQUIRE(g.edge_count() == 6);
  // lexicographic edge indexing
  REQUIRE(g.edge_ends(0) == std::pair<int, int>(0, 1));
  REQUIRE(g.edge_ends(5) == std::pair<int, int>(2, 3));
  REQUIRE(g.edge_index(3, 2) == 5);

  REQUIRE(petersen().edge_count() == 15);

  SECTION("degree violation") {
    // vertex 2 listed with two neighbors only
    std::vector<std::vector<int>> lists = {{1, 2, 3}, {0, 2, 3}, {0, 1}, {0, 1, 2}};
    REQUIRE_THROWS_MATCHES(CubicGraph::from_lists(4, lists), GraphError,
                           Catch::Matchers::Predicate<GraphError>([](const GraphError& e) {
                             return e.kind == GraphError::Kind::bad_degree;
                           }));
  }
  SECTION("asymmetry") {
    std::vector<std::vector<int>> lists = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 1}};
    REQUIRE_THROWS_AS(CubicGraph::from_lists(4, lists), GraphError);
  }
  SECTION("loop") {
    std::vector<std::vector<int>> lists = {{0, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    REQUIRE_THROWS_MATCHES(CubicGraph::from_lists(4, lists), GraphError,
                           Catch::Matchers::Predicate<GraphError>([](const GraphError& e) {
                             return e.kind == GraphError::Kind::loop;
                           }));
  }
  SECTION("odd order") {
    REQUIRE_THROWS_MATCHES(CubicGraph::from_lists(5, {}), GraphError,
                           Catch::Matchers::Predicate<GraphError>([](const GraphError& e) {
                             return e.kind == GraphError::Kind::odd_order;
                           }));
  }
}

TEST_CASE("girth of the standard small graphs") {
  REQUIRE(girth(k4()) == 3);
  REQUIRE(girth(k33()) == 4);
  REQUIRE(girth(prism()) == 3);
  REQUIRE(girth(cube_q3()) == 4);
  REQUIRE(girth(petersen()) == 5);
}

TEST_CASE("girth matches exhaustive shortest-cycle search on all cubic graphs n<=10") {
  for (int n = 4; n <= 10; n += 2) {
    for (const auto& rows : oracle::all_cubic(n)) {
      auto g = test_util::from_rows(rows);
      REQUIRE(girth(g) == test_util::brute_girth(rows));
    }
  }
}

TEST_CASE("vertex connectivity") {
  REQUIRE(vertex_connectivity(k4()) == 3);
  REQUIRE(vertex_connectivity(petersen()) == 3);
  // Petersen is 3-connected by the independent pair-removal oracle too
  REQUIRE(oracle::rows_three_connected(test_util::to_rows(petersen())));

  // two subdivided-K4 blocks joined by a bridge
  auto bridged = CubicGraph::from_edges(
      10, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4},
           {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}, {5, 9}, {6, 9},
           {4, 9}});
  REQUIRE(vertex_connectivity(bridged) == 1);
}

TEST_CASE("cyclic edge connectivity of the named graphs") {
  REQUIRE(cyclic_edge_connectivity(petersen()) == ConnectivityValue::finite(5));
  REQUIRE(cyclic_edge_connectivity(prism()) == ConnectivityValue::finite(3));
  REQUIRE(cyclic_edge_connectivity(k4()).unbounded);
  REQUIRE(cyclic_edge_connectivity(k33()).unbounded);
  REQUIRE(cyclic_edge_connectivity(cube_q3()) == ConnectivityValue::finite(4));
}

TEST_CASE("disconnected graphs: connectivity 0 on both measures") {
  auto two_k4 = CubicGraph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                           {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  REQUIRE(!is_connected(two_k4));
  REQUIRE(vertex_connectivity(two_k4) == 0);
  REQUIRE(cyclic_edge_connectivity(two_k4) == ConnectivityValue::finite(0));
}

TEST_CASE("cyclic edge connectivity agrees with the subset-cut oracle, n<=12") {
  for (int n = 4; n <= 12; n += 2) {
    for (const auto& rows : oracle::all_cubic(n)) {
      auto g = test_util::from_rows(rows);
      auto v = cyclic_edge_connectivity(g);
      int brute = oracle::min_cycle_separating_cut_bruteforce(rows, 6);
      if (v.unbounded) {
        REQUIRE(brute == -1);
      } else if (v.k <= 6) {
        REQUIRE(brute == v.k);
      }
    }
  }
}

TEST_CASE("lambda_c >= 4 forces 3-connectivity beyond K4") {
  for (int n = 6; n <= 12; n += 2) {
    for (const auto& rows : oracle::all_cubic(n)) {
      auto g = test_util::from_rows(rows);
      auto v = cyclic_edge_connectivity(g);
      if (v.at_least(4)) REQUIRE(vertex_connectivity(g) == 3);
      if (v.at_least(4) && n >= 8) REQUIRE(girth(g) >= 4);
    }
  }
}
