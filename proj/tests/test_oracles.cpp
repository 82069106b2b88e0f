#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

// Self-checks of the brute-force machinery against published counts of cubic
// graphs, so that everything later validated against these oracles stands on
// verified ground.

TEST_CASE("oracle enumeration reproduces the known cubic graph counts") {
  REQUIRE(oracle::all_cubic(4).size() == 1);
  REQUIRE(oracle::all_cubic(6).size() == 2);
  REQUIRE(oracle::all_cubic(8).size() == 5);
  REQUIRE(oracle::all_cubic(10).size() == 19);
  REQUIRE(oracle::all_cubic(12).size() == 85);
}

TEST_CASE("oracle canonical strings separate the order-6 graphs") {
  auto graphs = oracle::all_cubic(6);
  REQUIRE(graphs.size() == 2);
  REQUIRE(oracle::canonical_string(graphs[0]) != oracle::canonical_string(graphs[1]));
  for (const auto& g : graphs) REQUIRE(oracle::is_canonical_max(g));
}

TEST_CASE("oracle cycle and matching counts on K4") {
  auto k4 = oracle::Rows{0b1110, 0b1101, 0b1011, 0b0111};
  REQUIRE(oracle::count_cycles(k4) == 7);
  REQUIRE(oracle::count_perfect_matchings(k4) == 3);
}
