#include <catch2/catch_amalgamated.hpp>

#include "snark/canon.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace snark;

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937_64 rng(12345);
  auto p = petersen();
  auto code = canonical_code(p);
  for (int i = 0; i < 50; ++i)
    REQUIRE(canonical_code(test_util::random_relabel(p, rng)) == code);

  auto g = test_util::random_cubic(20, rng);
  auto cg = canonical_code(g);
  for (int i = 0; i < 50; ++i)
    REQUIRE(canonical_code(test_util::random_relabel(g, rng)) == cg);
}

TEST_CASE("canonical codes separate K3,3 and the prism") {
  REQUIRE(!(canonical_code(k33()) == canonical_code(prism())));
  REQUIRE(!are_isomorphic(k33(), prism()));
}

TEST_CASE("code equality agrees with brute-force isomorphism on all cubic n<=10") {
  for (int n = 4; n <= 10; n += 2) {
    auto graphs = oracle::all_cubic(n);
    std::vector<CanonicalCode> codes;
    std::vector<std::string> brute;
    for (const auto& rows : graphs) {
      codes.push_back(canonical_code(test_util::from_rows(rows)));
      brute.push_back(oracle::canonical_string(rows));
    }
    for (size_t i = 0; i < graphs.size(); ++i)
      for (size_t j = i; j < graphs.size(); ++j)
        REQUIRE((codes[i] == codes[j]) == (brute[i] == brute[j]));
    // the enumeration is isomorph-free, so all codes must be distinct
    for (size_t i = 0; i < graphs.size(); ++i)
      for (size_t j = i + 1; j < graphs.size(); ++j) REQUIRE(!(codes[i] == codes[j]));
  }
}

TEST_CASE("codes also agree with brute force across random relabelings") {
  std::mt19937_64 rng(999);
  for (int iter = 0; iter < 200; ++iter) {
    auto g = test_util::random_cubic(10, rng);
    auto h = test_util::random_cubic(10, rng);
    bool iso = oracle::brute_isomorphic(test_util::to_rows(g), test_util::to_rows(h));
    REQUIRE(are_isomorphic(g, h) == iso);
  }
}

TEST_CASE("Petersen is isomorphic to the Kneser construction") {
  // vertices = 2-subsets of {0..4}, adjacent iff disjoint
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.push_back({a, b});
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) edges.push_back({i, j});
    }
  auto kneser = CubicGraph::from_edges(10, edges);
  REQUIRE(are_isomorphic(petersen(), kneser));
}

TEST_CASE("order mismatch is never isomorphic") {
  REQUIRE(!are_isomorphic(k4(), k33()));
}

TEST_CASE("canonical code is stable across graphs built differently") {
  // same abstract graph entered with two different labelings
  auto g1 = prism();
  auto g2 = CubicGraph::from_edges(6, {{5, 4}, {4, 3}, {3, 5}, {2, 1}, {1, 0}, {0, 2},
                                       {5, 2}, {4, 1}, {3, 0}});
  REQUIRE(canonical_code(g1) == canonical_code(g2));
}

TEST_CASE("automorphism group sizes of the named graphs") {
  REQUIRE(automorphism_count(k4()) == 24);
  REQUIRE(automorphism_count(k33()) == 72);
  REQUIRE(automorphism_count(prism()) == 12);
  REQUIRE(automorphism_count(cube_q3()) == 48);
  REQUIRE(automorphism_count(petersen()) == 120);
}

TEST_CASE("vertex transitivity") {
  REQUIRE(is_vertex_transitive(petersen()));
  REQUIRE(is_vertex_transitive(prism()));
  REQUIRE(is_vertex_transitive(k33()));
  REQUIRE(is_vertex_transitive(cube_q3()));
}

TEST_CASE("canonical hash agrees with code equality") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 100; ++iter) {
    auto g = test_util::random_cubic(14, rng);
    auto h = test_util::random_relabel(g, rng);
    REQUIRE(canonical_hash(g) == canonical_hash(h));
  }
}
