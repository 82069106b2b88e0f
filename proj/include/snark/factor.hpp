// Perfect matchings, 2-factors, oddness, 2-factor component statistics,
// permutation-graph structure, removable cycles.
//
// In a cubic graph the 2-factors are exactly the complements of the perfect
// matchings, so everything here is driven by matching enumeration: branch on
// the lowest uncovered vertex, try its incident edges in ascending order.

#pragma once

#include <optional>
#include <vector>

#include "snark/core.hpp"
#include "snark/cycle.hpp"

namespace snark {

struct TwoRegularSubgraph {
  EdgeMask edges = 0;
  VertexMask vset = 0;
  std::vector<std::vector<std::uint8_t>> components;  // cyclic vertex sequences
  bool spanning = false;

  int component_count() const { return (int)components.size(); }
  int odd_component_count() const {
    int odd = 0;
    for (const auto& c : components) odd += c.size() % 2;
    return odd;
  }
};

// Precondition: `edges` is a disjoint union of cycles (every touched vertex
// has exactly two incident edges in the set).
inline TwoRegularSubgraph two_regular_from_edges(const CubicGraph& g, EdgeMask edges) {
  TwoRegularSubgraph f;
  f.edges = edges;
  EdgeMask rest = edges;
  while (rest) {
    int e = lowest_bit(rest);
    auto [s, second] = g.edge_ends(e);
    std::vector<std::uint8_t> comp;
    comp.push_back((std::uint8_t)s);
    int prev = s, cur = second;
    while (cur != s) {
      comp.push_back((std::uint8_t)cur);
      for (int i = 0; i < 3; ++i) {
        int ee = g.incident_edges(cur)[i];
        int w = g.neighbors(cur)[i];
        if (w != prev && (edges >> ee) & 1) {
          prev = cur;
          cur = w;
          break;
        }
      }
    }
    EdgeMask used = 0;
    for (size_t i = 0; i < comp.size(); ++i) {
      f.vset |= bit(comp[i]);
      used |= EdgeMask{1} << g.edge_index(comp[i], comp[(i + 1) % comp.size()]);
    }
    rest &= ~used;
    f.components.push_back(std::move(comp));
  }
  f.spanning = popcount(f.vset) == g.order();
  return f;
}

// All perfect matchings as edge masks, deterministic order.
inline std::vector<EdgeMask> perfect_matchings(const CubicGraph& g) {
  require_edge_mask_capacity(g);
  int n = g.order();
  std::vector<EdgeMask> out;
  EdgeMask cur = 0;

  auto rec = [&](auto&& self, VertexMask covered) -> void {
    if (popcount(covered) == n) {
      out.push_back(cur);
      return;
    }
    int v = lowest_bit(~covered);
    for (int i = 0; i < 3; ++i) {
      int w = g.neighbors(v)[i];
      if (covered & bit(w)) continue;
      int e = g.incident_edges(v)[i];
      cur |= EdgeMask{1} << e;
      self(self, covered | bit(v) | bit(w));
      cur &= ~(EdgeMask{1} << e);
    }
  };
  rec(rec, 0);
  return out;
}

inline EdgeMask all_edges_mask(const CubicGraph& g) {
  return g.edge_count() == 64 ? ~EdgeMask{0} : (EdgeMask{1} << g.edge_count()) - 1;
}

inline std::vector<TwoRegularSubgraph> two_factors(const CubicGraph& g) {
  std::vector<TwoRegularSubgraph> out;
  EdgeMask all = all_edges_mask(g);
  for (EdgeMask pm : perfect_matchings(g)) out.push_back(two_regular_from_edges(g, all & ~pm));
  return out;
}

struct NoTwoFactorError : std::runtime_error {
  NoTwoFactorError() : std::runtime_error("graph has no 2-factor") {}
};

inline int oddness(const CubicGraph& g) {
  auto pms = perfect_matchings(g);
  if (pms.empty()) throw NoTwoFactorError();
  EdgeMask all = all_edges_mask(g);
  int best = g.order() + 1;
  for (EdgeMask pm : pms) {
    auto f = two_regular_from_edges(g, all & ~pm);
    best = std::min(best, f.odd_component_count());
    if (best == 0) break;
  }
  return best;
}

struct TwoFactorExtremes {
  int max_odd_components = 0;
  int max_components = 0;
  int min_components = 0;
};

inline TwoFactorExtremes two_factor_extremes(const CubicGraph& g) {
  auto pms = perfect_matchings(g);
  if (pms.empty()) throw NoTwoFactorError();
  EdgeMask all = all_edges_mask(g);
  TwoFactorExtremes ext;
  ext.min_components = g.order();
  for (EdgeMask pm : pms) {
    auto f = two_regular_from_edges(g, all & ~pm);
    ext.max_odd_components = std::max(ext.max_odd_components, f.odd_component_count());
    ext.max_components = std::max(ext.max_components, f.component_count());
    ext.min_components = std::min(ext.min_components, f.component_count());
  }
  return ext;
}

inline bool all_two_factors_odd(const CubicGraph& g) {
  auto pms = perfect_matchings(g);
  if (pms.empty()) throw NoTwoFactorError();
  EdgeMask all = all_edges_mask(g);
  for (EdgeMask pm : pms) {
    auto f = two_regular_from_edges(g, all & ~pm);
    if (f.odd_component_count() != f.component_count()) return false;
  }
  return true;
}

// A component is induced (chordless) iff its vertex set spans exactly its own
// cycle edges.
inline bool component_chordless(const CubicGraph& g, const std::vector<std::uint8_t>& comp) {
  VertexMask set = 0;
  for (int v : comp) set |= bit(v);
  int inner = 0;
  for (int v : comp) inner += popcount(g.adjacency_mask(v) & set);
  return inner / 2 == (int)comp.size();
}

// Defining 2-factors of a permutation graph: exactly two components, both
// induced.  Empty iff g is not a permutation graph.
inline std::vector<TwoRegularSubgraph> permutation_structures(const CubicGraph& g) {
  std::vector<TwoRegularSubgraph> out;
  for (auto& f : two_factors(g)) {
    if (f.component_count() != 2) continue;
    if (!component_chordless(g, f.components[0])) continue;
    if (!component_chordless(g, f.components[1])) continue;
    out.push_back(std::move(f));
  }
  return out;
}

namespace factor_detail {

inline bool two_connected_after_removal(const CubicGraph& g, EdgeMask dropped) {
  int n = g.order();
  // connectivity
  VertexMask seen = bit(0), frontier = bit(0);
  while (frontier) {
    VertexMask next = 0;
    while (frontier) {
      int v = lowest_bit(frontier);
      frontier &= frontier - 1;
      for (int i = 0; i < 3; ++i)
        if (!((dropped >> g.incident_edges(v)[i]) & 1)) next |= bit(g.neighbors(v)[i]);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  if (popcount(seen) != n) return false;
  // no articulation vertex: remove each vertex and re-check connectivity
  for (int x = 0; x < n; ++x) {
    VertexMask allowed = ~bit(x) & (n == 64 ? ~VertexMask{0} : bit(n) - 1);
    int start = lowest_bit(allowed);
    VertexMask seen2 = bit(start), frontier2 = bit(start);
    while (frontier2) {
      VertexMask next = 0;
      while (frontier2) {
        int v = lowest_bit(frontier2);
        frontier2 &= frontier2 - 1;
        for (int i = 0; i < 3; ++i)
          if (!((dropped >> g.incident_edges(v)[i]) & 1)) next |= bit(g.neighbors(v)[i]);
      }
      next &= allowed;
      frontier2 = next & ~seen2;
      seen2 |= next & allowed;
    }
    if ((seen2 & allowed) != allowed) return false;
  }
  return true;
}

}  // namespace factor_detail

// Cycles C (w.r.t. the defining 2-factor f) such that deleting the edges in
// both C and f leaves a 2-connected graph.  The sweep enumerates all cycles,
// so it is certified complete; callers on large orders tier it explicitly.
inline std::vector<Cycle> removable_cycles(const CubicGraph& g, const TwoRegularSubgraph& f) {
  std::vector<Cycle> out;
  for (const auto& c : all_cycles(g)) {
    EdgeMask shared = c.eset & f.edges;
    if (factor_detail::two_connected_after_removal(g, shared)) out.push_back(c);
  }
  return out;
}

}  // namespace snark
