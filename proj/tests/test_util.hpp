// Shared helpers for the test suites: conversions between the oracle's raw
// adjacency rows and CubicGraph, plus seeded random graph utilities.

#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "snark/core.hpp"

namespace test_util {

inline snark::CubicGraph from_rows(const oracle::Rows& rows) {
  int n = (int)rows.size();
  std::vector<std::vector<int>> lists(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if ((rows[u] >> v) & 1) lists[u].push_back(v);
  return snark::CubicGraph::from_lists(n, lists);
}

inline oracle::Rows to_rows(const snark::CubicGraph& g) {
  oracle::Rows rows(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) rows[v] = g.adjacency_mask(v);
  return rows;
}

inline int brute_girth(const oracle::Rows& rows) {
  int n = (int)rows.size();
  int best = n + 1;
  std::vector<int> path;
  std::function<void(int, int, std::uint64_t)> dfs = [&](int start, int cur, std::uint64_t on) {
    if ((int)path.size() >= best) return;
    for (int w = 0; w < n; ++w) {
      if (!((rows[cur] >> w) & 1)) continue;
      if (w == start && (int)path.size() >= 3) best = std::min(best, (int)path.size());
      if (w <= start || ((on >> w) & 1)) continue;
      path.push_back(w);
      dfs(start, w, on | (1ull << w));
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    dfs(s, s, 1ull << s);
  }
  return best;
}

// Random simple connected cubic graph via the pairing model with rejection.
inline snark::CubicGraph random_cubic(int n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<int> stubs;
    stubs.reserve(3 * n);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < 3; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::vector<int>> lists(n);
    bool ok = true;
    for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) ok = false;
      for (int w : lists[u])
        if (w == v) ok = false;
      if (ok) {
        lists[u].push_back(v);
        lists[v].push_back(u);
      }
    }
    if (!ok) continue;
    auto g = snark::CubicGraph::from_lists(n, lists);
    if (snark::is_connected(g)) return g;
  }
}

inline snark::CubicGraph relabel(const snark::CubicGraph& g, const std::vector<int>& perm) {
  int n = g.order();
  std::vector<std::vector<int>> lists(n);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < 3; ++i) lists[perm[v]].push_back(perm[g.neighbors(v)[i]]);
  return snark::CubicGraph::from_lists(n, lists);
}

inline snark::CubicGraph random_relabel(const snark::CubicGraph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace test_util
