#include <catch2/catch_amalgamated.hpp>

#include "snark/codec.hpp"
#include "snark/factor.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace snark;

TEST_CASE("perfect matching counts") {
  REQUIRE(perfect_matchings(k4()).size() == 3);
  REQUIRE(perfect_matchings(petersen()).size() == 6);
  REQUIRE(perfect_matchings(k33()).size() == 6);
}

TEST_CASE("matching enumeration agrees with the subset oracle on all cubic n<=10") {
  for (int n = 4; n <= 10; n += 2)
    for (const auto& rows : oracle::all_cubic(n)) {
      auto g = test_util::from_rows(rows);
      REQUIRE((long long)perfect_matchings(g).size() ==
              oracle::count_perfect_matchings(rows));
    }
}

TEST_CASE("two factors are matching complements") {
  auto p = petersen();
  auto fs = two_factors(p);
  REQUIRE(fs.size() == perfect_matchings(p).size());
  for (const auto& f : fs) {
    REQUIRE(f.spanning);
    REQUIRE(f.component_count() == 2);
    for (const auto& comp : f.components) REQUIRE(comp.size() == 5);
    int total = 0;
    for (const auto& comp : f.components) total += (int)comp.size();
    REQUIRE(total == p.order());
  }
  auto k4fs = two_factors(k4());
  REQUIRE(k4fs.size() == 3);
  for (const auto& f : k4fs) {
    REQUIRE(f.component_count() == 1);  // hamiltonian 4-cycles
    REQUIRE(f.components[0].size() == 4);
  }
}

TEST_CASE("oddness") {
  REQUIRE(oddness(k33()) == 0);
  REQUIRE(oddness(petersen()) == 2);
  REQUIRE(oddness(cube_q3()) == 0);
}

TEST_CASE("oddness is always even, n<=10") {
  for (int n = 4; n <= 10; n += 2)
    for (const auto& rows : oracle::all_cubic(n)) {
      auto g = test_util::from_rows(rows);
      if (perfect_matchings(g).empty()) continue;
      REQUIRE(oddness(g) % 2 == 0);
    }
}

TEST_CASE("two-factor extremes of Petersen") {
  auto ext = two_factor_extremes(petersen());
  REQUIRE(ext.max_odd_components == 2);
  REQUIRE(ext.max_components == 2);
  REQUIRE(ext.min_components == 2);
}

TEST_CASE("all-odd 2-factors predicate") {
  REQUIRE(all_two_factors_odd(petersen()));
  REQUIRE(!all_two_factors_odd(k33()));
  // the order-26 counterexample graph from the fixture registry
  auto als = load_fixture(FixtureId::appendix_als);
  REQUIRE(als.size() == 1);
  REQUIRE(all_two_factors_odd(als[0]));
}

TEST_CASE("permutation structures") {
  auto pet = permutation_structures(petersen());
  REQUIRE(!pet.empty());
  for (const auto& f : pet) {
    REQUIRE(f.component_count() == 2);
    REQUIRE(component_chordless(petersen(), f.components[0]));
    REQUIRE(component_chordless(petersen(), f.components[1]));
  }
  REQUIRE(!permutation_structures(prism()).empty());  // two induced triangles
  REQUIRE(permutation_structures(k4()).empty());      // hamiltonian 2-factors only
}

TEST_CASE("Petersen has no removable cycles for any defining 2-factor") {
  auto p = petersen();
  for (const auto& f : permutation_structures(p))
    REQUIRE(removable_cycles(p, f).empty());
}

TEST_CASE("prism has removable cycles") {
  auto g = prism();
  auto fs = permutation_structures(g);
  REQUIRE(!fs.empty());
  REQUIRE(!removable_cycles(g, fs[0]).empty());
}
