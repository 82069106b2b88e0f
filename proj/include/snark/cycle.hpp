// Cycle enumeration and cycle-structure predicates: circumference,
// hypohamiltonicity, dominating cycles, stable cycles, semiextensions.
//
// Edge sets of cycles are stored as 64-bit masks over edge indices, which
// caps these routines at m <= 64 (n <= 42); every analysis in scope stays
// within that.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "snark/core.hpp"

namespace snark {

using EdgeMask = std::uint64_t;

inline void require_edge_mask_capacity(const CubicGraph& g) {
  if (g.edge_count() > 64)
    throw std::runtime_error("cycle machinery supports at most 64 edges (n <= 42)");
}

struct Cycle {
  std::vector<std::uint8_t> verts;  // normalized cyclic sequence
  VertexMask vset = 0;
  EdgeMask eset = 0;

  int length() const { return (int)verts.size(); }
  bool operator==(const Cycle& o) const { return verts == o.verts; }
  bool operator<(const Cycle& o) const {
    if (verts.size() != o.verts.size()) return verts.size() < o.verts.size();
    return verts < o.verts;
  }
};

// Normalize a cyclic vertex sequence: smallest vertex first, then the smaller
// of its two neighbors second.
inline Cycle make_cycle(const CubicGraph& g, const std::vector<int>& seq) {
  int len = (int)seq.size();
  int pos = 0;
  for (int i = 1; i < len; ++i)
    if (seq[i] < seq[pos]) pos = i;
  int prev = seq[(pos + len - 1) % len], next = seq[(pos + 1) % len];
  int dir = next < prev ? 1 : -1;
  Cycle c;
  c.verts.resize(len);
  for (int i = 0; i < len; ++i) {
    int v = seq[((pos + dir * i) % len + len) % len];
    c.verts[i] = (std::uint8_t)v;
    c.vset |= bit(v);
  }
  for (int i = 0; i < len; ++i) {
    int u = c.verts[i], v = c.verts[(i + 1) % len];
    c.eset |= EdgeMask{1} << g.edge_index(u, v);
  }
  return c;
}

inline Cycle cycle_from_edge_mask(const CubicGraph& g, EdgeMask eset) {
  // eset must form a single cycle
  int first = lowest_bit(eset);
  auto [s, second] = g.edge_ends(first);
  std::vector<int> seq = {s};
  int prev = s, cur = second;
  while (cur != s) {
    seq.push_back(cur);
    for (int i = 0; i < 3; ++i) {
      int e = g.incident_edges(cur)[i];
      int w = g.neighbors(cur)[i];
      if (w != prev && (eset >> e) & 1) {
        prev = cur;
        cur = w;
        break;
      }
    }
  }
  return make_cycle(g, seq);
}

// Enumerate every cycle with min_len <= length <= max_len exactly once; with
// a required vertex set, only cycles through all of it.  The visitor may
// return true to stop.  Enumeration is anchored: the cycle's lowest vertex is
// the DFS start and the direction is fixed by second < last.
template <typename F>
inline void enumerate_cycles(const CubicGraph& g, int min_len, int max_len,
                             VertexMask required, F&& visit) {
  require_edge_mask_capacity(g);
  int n = g.order();
  if (max_len > n) max_len = n;
  std::vector<int> path;
  path.reserve(n + 1);
  bool stop = false;
  int max_start = n - 1;
  if (required) max_start = std::min(max_start, lowest_bit(required));

  auto dfs = [&](auto&& self, int start, int cur, VertexMask on) -> void {
    if (stop) return;
    for (int i = 0; i < 3; ++i) {
      int w = g.neighbors(cur)[i];
      if (w == start) {
        if ((int)path.size() >= std::max(3, min_len) && path[1] < cur &&
            (required & ~on) == 0) {
          if (visit(path)) { stop = true; return; }
        }
        continue;
      }
      if (w < start || (on & bit(w))) continue;
      if ((int)path.size() >= max_len) continue;
      // remaining length must fit the required vertices not yet on the path
      if ((int)path.size() + popcount(required & ~(on | bit(w))) >= max_len) continue;
      path.push_back(w);
      self(self, start, w, on | bit(w));
      path.pop_back();
      if (stop) return;
    }
  };

  for (int s = 0; s <= max_start && !stop; ++s) {
    for (int i = 0; i < 3 && !stop; ++i) {
      int w = g.neighbors(s)[i];
      if (w < s) continue;
      path.clear();
      path.push_back(s);
      path.push_back(w);
      dfs(dfs, s, w, bit(s) | bit(w));
    }
  }
}

inline std::vector<Cycle> cycles(const CubicGraph& g, int min_len, int max_len,
                                 VertexMask required = 0) {
  std::vector<Cycle> out;
  enumerate_cycles(g, min_len, max_len, required, [&](const std::vector<int>& seq) {
    out.push_back(make_cycle(g, seq));
    return false;
  });
  return out;
}

inline std::vector<Cycle> all_cycles(const CubicGraph& g) {
  return cycles(g, 3, g.order());
}

namespace cycle_detail {

// reachable set from `from` within `allowed` (from need not be in allowed)
inline VertexMask flood(const CubicGraph& g, int from, VertexMask allowed) {
  VertexMask seen = bit(from), frontier = bit(from);
  while (frontier) {
    VertexMask next = 0;
    while (frontier) {
      int v = lowest_bit(frontier);
      frontier &= frontier - 1;
      next |= g.adjacency_mask(v);
    }
    next &= allowed;
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace cycle_detail

// Does the induced subgraph on `span` have a cycle through all of `span`?
// Fills `out` with one such cycle when found.
inline bool spanning_cycle(const CubicGraph& g, VertexMask span, std::vector<int>* out) {
  int k = popcount(span);
  if (k < 3) return false;
  int s = lowest_bit(span);
  std::vector<int> path = {s};
  path.reserve(k);

  auto dfs = [&](auto&& self, int cur, VertexMask visited) -> bool {
    if ((int)path.size() == k) {
      if (g.has_edge(cur, s)) {
        if (out) *out = path;
        return true;
      }
      return false;
    }
    // all unvisited span vertices plus an edge back to s must stay reachable
    VertexMask todo = span & ~visited;
    VertexMask reach = cycle_detail::flood(g, cur, todo);
    if (todo & ~reach) return false;
    for (int i = 0; i < 3; ++i) {
      int w = g.neighbors(cur)[i];
      if (!(span & bit(w)) || (visited & bit(w))) continue;
      path.push_back(w);
      if (self(self, w, visited | bit(w))) return true;
      path.pop_back();
    }
    return false;
  };
  return dfs(dfs, s, bit(s));
}

inline bool is_hamiltonian(const CubicGraph& g, std::vector<int>* witness = nullptr) {
  VertexMask all = g.order() == 64 ? ~VertexMask{0} : (bit(g.order()) - 1);
  return spanning_cycle(g, all, witness);
}

enum class Hamiltonicity { hamiltonian, hypohamiltonian, neither };

inline Hamiltonicity hamiltonicity(const CubicGraph& g) {
  if (is_hamiltonian(g)) return Hamiltonicity::hamiltonian;
  VertexMask all = g.order() == 64 ? ~VertexMask{0} : (bit(g.order()) - 1);
  for (int v = 0; v < g.order(); ++v)
    if (!spanning_cycle(g, all & ~bit(v), nullptr)) return Hamiltonicity::neither;
  return Hamiltonicity::hypohamiltonian;
}

// Longest cycle with witness, by DFS over anchored paths with a reachability
// bound.
inline std::pair<int, Cycle> circumference(const CubicGraph& g) {
  require_edge_mask_capacity(g);
  int n = g.order();
  int best = 0;
  std::vector<int> best_seq;
  std::vector<int> path;

  auto dfs = [&](auto&& self, int start, int cur, VertexMask on) -> bool {
    if (g.has_edge(cur, start) && (int)path.size() >= 3 && path[1] < cur) {
      if ((int)path.size() > best) {
        best = (int)path.size();
        best_seq = path;
        if (best == n) return true;
      }
    }
    VertexMask avail = ~on;
    VertexMask reach = cycle_detail::flood(g, cur, avail) | bit(start);
    // bound: current path plus everything still reachable
    int bound = (int)path.size() + popcount(reach & avail & ~bit(start) &
                                            (n == 64 ? ~VertexMask{0} : bit(n) - 1));
    if (bound <= best) return false;
    if (!(reach & bit(start)) && !g.has_edge(cur, start)) return false;
    for (int i = 0; i < 3; ++i) {
      int w = g.neighbors(cur)[i];
      if (w < start || (on & bit(w))) continue;
      path.push_back(w);
      if (self(self, start, w, on | bit(w))) return true;
      path.pop_back();
    }
    return false;
  };

  for (int s = 0; s < n; ++s) {
    if (n - s < best) break;  // cycles anchored at s use only vertices >= s
    for (int i = 0; i < 3; ++i) {
      int w = g.neighbors(s)[i];
      if (w < s) continue;
      path = {s, w};
      if (dfs(dfs, s, w, bit(s) | bit(w))) break;
    }
    if (best == n) break;
  }
  return {best, make_cycle(g, best_seq)};
}

// ---------------------------------------------------------------------------
// Dominating cycles: every edge of g has an endpoint on the cycle, i.e. the
// complement of the cycle's vertex set is independent.

inline bool is_dominating(const CubicGraph& g, VertexMask cyc_vset) {
  VertexMask outside = ~cyc_vset & (g.order() == 64 ? ~VertexMask{0} : bit(g.order()) - 1);
  VertexMask rest = outside;
  while (rest) {
    int v = lowest_bit(rest);
    rest &= rest - 1;
    if (g.adjacency_mask(v) & outside) return false;
  }
  return true;
}

inline std::optional<Cycle> dominating_cycle(const CubicGraph& g,
                                             const std::vector<int>& required_edges = {}) {
  require_edge_mask_capacity(g);
  EdgeMask req = 0;
  for (int e : required_edges) req |= EdgeMask{1} << e;
  std::optional<Cycle> found;
  // dominating cycles in cubic graphs have length >= 3n/4
  int lo = std::max(3, (3 * g.order() + 3) / 4);
  enumerate_cycles(g, lo, g.order(), 0, [&](const std::vector<int>& seq) {
    Cycle c = make_cycle(g, seq);
    if ((c.eset & req) != req) return false;
    if (!is_dominating(g, c.vset)) return false;
    found = c;
    return true;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Stable cycles: C is stable iff no distinct cycle C' has V(C) as a subset of
// V(C').  The per-cycle test searches directly for a witness C'.

inline bool has_distinct_covering_cycle(const CubicGraph& g, const Cycle& c) {
  bool found = false;
  enumerate_cycles(g, c.length(), g.order(), c.vset, [&](const std::vector<int>& seq) {
    Cycle cand = make_cycle(g, seq);
    if (cand == c) return false;
    found = true;
    return true;
  });
  return found;
}

inline bool is_stable_cycle(const CubicGraph& g, const Cycle& c) {
  return !has_distinct_covering_cycle(g, c);
}

inline std::vector<Cycle> stable_cycles(const CubicGraph& g) {
  std::vector<Cycle> out;
  for (const auto& c : all_cycles(g))
    if (is_stable_cycle(g, c)) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------
// Semiextensions (with the inclusive single-edge-path reading flagged in the
// reports): D != C such that for every path P = x v1..vk y with
// x in V(C)\V(D), y in V(C) u V(D), internal vertices outside both, some
// other x-y path lies inside C delta D.  Since C delta D is an even graph,
// paths P that are themselves edges of C delta D always have the second
// around-the-cycle route, so only the chord and through-outside paths are
// real constraints.

enum class SearchVerdict { found, none, resource_limit };

inline bool semiextension_witness_ok(const CubicGraph& g, const Cycle& c, const Cycle& d,
                                     bool strong) {
  int n = g.order();
  EdgeMask sym = c.eset ^ d.eset;
  VertexMask u_set = c.vset | d.vset;

  // component labels over the support of sym
  std::array<std::int8_t, kMaxN> comp;
  comp.fill(-1);
  VertexMask support = 0;
  {
    EdgeMask rest = sym;
    while (rest) {
      int e = lowest_bit(rest);
      rest &= rest - 1;
      auto [a, b] = g.edge_ends(e);
      support |= bit(a) | bit(b);
    }
    int ncomp = 0;
    VertexMask todo = support;
    while (todo) {
      int s = lowest_bit(todo);
      VertexMask frontier = bit(s), seen = bit(s);
      comp[s] = (std::int8_t)ncomp;
      while (frontier) {
        int v = lowest_bit(frontier);
        frontier &= frontier - 1;
        for (int i = 0; i < 3; ++i) {
          int e = g.incident_edges(v)[i];
          int w = g.neighbors(v)[i];
          if (((sym >> e) & 1) && !(seen & bit(w))) {
            seen |= bit(w);
            comp[w] = (std::int8_t)ncomp;
            frontier |= bit(w);
          }
        }
      }
      todo &= ~seen;
      ++ncomp;
    }
    if (strong && ncomp != 1) return false;
    if (strong && sym == 0) return false;
  }

  VertexMask xs = c.vset & ~d.vset;
  VertexMask rest = xs;
  while (rest) {
    int x = lowest_bit(rest);
    rest &= rest - 1;
    // x's two C-edges lie in sym; the third edge is the constraint
    for (int i = 0; i < 3; ++i) {
      int e = g.incident_edges(x)[i];
      if ((c.eset >> e) & 1) continue;
      int z = g.neighbors(x)[i];
      if (u_set & bit(z)) {
        if (!(support & bit(z)) || comp[z] != comp[x]) return false;
      } else {
        // walk the component of z outside U; every attachment y != x must be
        // joined to x inside sym
        VertexMask outside = ~u_set & (n == 64 ? ~VertexMask{0} : bit(n) - 1);
        VertexMask k = cycle_detail::flood(g, z, outside);
        VertexMask attach = 0;
        VertexMask kk = k;
        while (kk) {
          int v = lowest_bit(kk);
          kk &= kk - 1;
          attach |= g.adjacency_mask(v) & u_set;
        }
        attach &= ~bit(x);
        while (attach) {
          int y = lowest_bit(attach);
          attach &= attach - 1;
          if (!(support & bit(y)) || comp[y] != comp[x]) return false;
        }
      }
    }
  }
  return true;
}

struct SemiextensionResult {
  SearchVerdict verdict = SearchVerdict::none;
  Cycle witness;
};

inline SemiextensionResult semiextension(const CubicGraph& g, const Cycle& c, bool strong,
                                         long long candidate_budget = -1) {
  SemiextensionResult res;
  // fast path: any distinct cycle covering V(C) satisfies the path condition
  // vacuously; for the strong variant it still needs a connected difference
  {
    bool stop = false;
    enumerate_cycles(g, 3, g.order(), c.vset, [&](const std::vector<int>& seq) {
      Cycle cand = make_cycle(g, seq);
      if (cand == c) return false;
      if (!strong || semiextension_witness_ok(g, c, cand, true)) {
        res.verdict = SearchVerdict::found;
        res.witness = cand;
        stop = true;
      }
      return stop;
    });
    if (stop) return res;
  }
  // full scan over candidate cycles, ascending length then normalized order
  auto cand_all = all_cycles(g);
  std::sort(cand_all.begin(), cand_all.end());
  long long tested = 0;
  for (const auto& d : cand_all) {
    if (d == c) continue;
    if (candidate_budget >= 0 && tested++ >= candidate_budget) {
      res.verdict = SearchVerdict::resource_limit;
      return res;
    }
    if (semiextension_witness_ok(g, c, d, strong)) {
      res.verdict = SearchVerdict::found;
      res.witness = d;
      return res;
    }
  }
  res.verdict = SearchVerdict::none;
  return res;
}

}  // namespace snark
