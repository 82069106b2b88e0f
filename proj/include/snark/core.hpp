// Core cubic-graph representation and connectivity/girth primitives.
//
// A CubicGraph is an immutable simple 3-regular graph on at most 62 vertices
// with a canonical edge indexing: edges are numbered in lexicographic order
// of their (min,max) endpoint pair, so the indexing depends only on the
// labeled adjacency and is reproducible across runs.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snark {

constexpr int kMaxN = 62;           // graph6 single-byte order limit
constexpr int kMaxE = 3 * kMaxN / 2;

using VertexMask = std::uint64_t;

inline int popcount(std::uint64_t x) { return std::popcount(x); }
inline int lowest_bit(std::uint64_t x) { return std::countr_zero(x); }
inline VertexMask bit(int v) { return VertexMask{1} << v; }

struct GraphError : std::runtime_error {
  enum class Kind { odd_order, bad_degree, asymmetric, loop, parallel_edge, too_large };
  Kind kind;
  GraphError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

class CubicGraph {
 public:
  CubicGraph() = default;

  // neighbor_lists is 0-based; each list must have exactly 3 distinct entries.
  static CubicGraph from_lists(int order, const std::vector<std::vector<int>>& neighbor_lists) {
    if (order < 4 || order % 2 != 0)
      throw GraphError(GraphError::Kind::odd_order,
                       "order must be even and at least 4, got " + std::to_string(order));
    if (order > kMaxN)
      throw GraphError(GraphError::Kind::too_large, "order exceeds supported maximum");
    if ((int)neighbor_lists.size() != order)
      throw GraphError(GraphError::Kind::bad_degree, "neighbor list count differs from order");
    CubicGraph g;
    g.n_ = order;
    for (int v = 0; v < order; ++v) {
      const auto& lst = neighbor_lists[v];
      if (lst.size() != 3)
        throw GraphError(GraphError::Kind::bad_degree,
                         "vertex " + std::to_string(v) + " has degree " + std::to_string(lst.size()));
      std::array<int, 3> s{lst[0], lst[1], lst[2]};
      std::sort(s.begin(), s.end());
      for (int i = 0; i < 3; ++i) {
        if (s[i] < 0 || s[i] >= order)
          throw GraphError(GraphError::Kind::asymmetric, "neighbor out of range");
        if (s[i] == v)
          throw GraphError(GraphError::Kind::loop, "loop at vertex " + std::to_string(v));
        if (i > 0 && s[i] == s[i - 1])
          throw GraphError(GraphError::Kind::parallel_edge,
                           "parallel edge at vertex " + std::to_string(v));
        g.nbr_[v][i] = (std::uint8_t)s[i];
      }
      g.adj_[v] = bit(s[0]) | bit(s[1]) | bit(s[2]);
    }
    for (int v = 0; v < order; ++v)
      for (int i = 0; i < 3; ++i)
        if (!(g.adj_[g.nbr_[v][i]] & bit(v)))
          throw GraphError(GraphError::Kind::asymmetric,
                           "adjacency not symmetric at " + std::to_string(v));
    g.index_edges();
    return g;
  }

  // Trusted fast path for generator-internal construction: rows must already
  // describe a simple cubic graph (no validation beyond sorting).
  static CubicGraph from_neighbor_rows(int order,
                                       const std::array<std::array<std::uint8_t, 3>, kMaxN>& rows) {
    CubicGraph g;
    g.n_ = order;
    for (int v = 0; v < order; ++v) {
      std::uint8_t a = rows[v][0], b = rows[v][1], c = rows[v][2];
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      if (a > b) std::swap(a, b);
      g.nbr_[v] = {a, b, c};
      g.adj_[v] = bit(a) | bit(b) | bit(c);
    }
    g.index_edges();
    return g;
  }

  static CubicGraph from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> lists(order);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= order || v >= order)
        throw GraphError(GraphError::Kind::asymmetric, "edge endpoint out of range");
      lists[u].push_back(v);
      lists[v].push_back(u);
    }
    return from_lists(order, lists);
  }

  int order() const { return n_; }
  int edge_count() const { return 3 * n_ / 2; }

  const std::array<std::uint8_t, 3>& neighbors(int v) const { return nbr_[v]; }
  const std::array<std::uint8_t, 3>& incident_edges(int v) const { return inc_[v]; }
  VertexMask adjacency_mask(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return (adj_[u] & bit(v)) != 0; }

  std::pair<int, int> edge_ends(int e) const { return {ends_[e].first, ends_[e].second}; }

  int edge_index(int u, int v) const {
    for (int i = 0; i < 3; ++i)
      if (nbr_[u][i] == v) return inc_[u][i];
    return -1;
  }

  // The third neighbor/edge helpers used all over the search code.
  int other_end(int e, int v) const {
    return ends_[e].first == v ? ends_[e].second : ends_[e].first;
  }

  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out(edge_count());
    for (int e = 0; e < edge_count(); ++e) out[e] = {ends_[e].first, ends_[e].second};
    return out;
  }

  bool operator==(const CubicGraph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
      if (adj_[v] != o.adj_[v]) return false;
    return true;
  }

 private:
  void index_edges() {
    int e = 0;
    for (int u = 0; u < n_; ++u)
      for (int i = 0; i < 3; ++i) {
        int v = nbr_[u][i];
        if (v > u) {
          ends_[e] = {(std::uint8_t)u, (std::uint8_t)v};
          ++e;
        }
      }
    for (int v = 0; v < n_; ++v)
      for (int i = 0; i < 3; ++i) {
        int u = nbr_[v][i];
        inc_[v][i] = (std::uint8_t)find_edge(std::min(v, u), std::max(v, u));
      }
  }

  int find_edge(int u, int v) const {
    // binary search over the lexicographically sorted endpoint list
    int lo = 0, hi = 3 * n_ / 2 - 1;
    while (lo <= hi) {
      int mid = (lo + hi) / 2;
      auto [a, b] = ends_[mid];
      if (a == u && b == v) return mid;
      if (a < u || (a == u && b < v)) lo = mid + 1;
      else hi = mid - 1;
    }
    return -1;
  }

  int n_ = 0;
  std::array<std::array<std::uint8_t, 3>, kMaxN> nbr_{};
  std::array<std::array<std::uint8_t, 3>, kMaxN> inc_{};
  std::array<VertexMask, kMaxN> adj_{};
  std::array<std::pair<std::uint8_t, std::uint8_t>, kMaxE> ends_{};
};

// ---------------------------------------------------------------------------
// Cyclic edge connectivity value: graphs without two vertex-disjoint cycles
// (K4, K3,3) have no cycle-separating cut at all and get a distinct
// "unbounded" value rather than a sentinel integer.

struct ConnectivityValue {
  bool unbounded = false;
  int k = 0;

  static ConnectivityValue finite(int k) { return {false, k}; }
  static ConnectivityValue unbounded_value() { return {true, 0}; }

  bool at_least(int t) const { return unbounded || k >= t; }
  bool operator==(const ConnectivityValue& o) const {
    return unbounded == o.unbounded && (unbounded || k == o.k);
  }
};

// ---------------------------------------------------------------------------

inline bool is_connected(const CubicGraph& g) {
  int n = g.order();
  VertexMask seen = bit(0), frontier = bit(0);
  while (frontier) {
    VertexMask next = 0;
    while (frontier) {
      int v = lowest_bit(frontier);
      frontier &= frontier - 1;
      next |= g.adjacency_mask(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return popcount(seen) == n;
}

inline int girth(const CubicGraph& g) {
  // min over roots of the shortest cycle found by BFS from that root
  int n = g.order();
  int best = n + 1;
  std::array<std::int8_t, kMaxN> dist;
  std::array<std::int8_t, kMaxN> parent;
  std::array<std::uint8_t, kMaxN> queue;
  for (int r = 0; r < n; ++r) {
    dist.fill(-1);
    parent.fill(-1);
    int head = 0, tail = 0;
    queue[tail++] = (std::uint8_t)r;
    dist[r] = 0;
    while (head < tail) {
      int u = queue[head++];
      if (2 * dist[u] >= best - 1) break;
      for (int i = 0; i < 3; ++i) {
        int w = g.neighbors(u)[i];
        if (w == parent[u]) continue;
        if (dist[w] < 0) {
          dist[w] = (std::int8_t)(dist[u] + 1);
          parent[w] = (std::int8_t)u;
          queue[tail++] = (std::uint8_t)w;
        } else {
          best = std::min(best, (int)dist[u] + (int)dist[w] + 1);
        }
      }
    }
  }
  return best;
}

inline int vertex_connectivity(const CubicGraph& g) {
  int n = g.order();
  if (!is_connected(g)) return 0;
  if (n == 4) return 3;  // K4 is the only simple cubic graph on 4 vertices
  auto connected_without = [&](VertexMask removed) {
    VertexMask rest = (n == 64 ? ~VertexMask{0} : (bit(n) - 1)) & ~removed;
    if (!rest) return true;
    int start = lowest_bit(rest);
    VertexMask seen = bit(start), frontier = bit(start);
    while (frontier) {
      VertexMask next = 0;
      while (frontier) {
        int v = lowest_bit(frontier);
        frontier &= frontier - 1;
        next |= g.adjacency_mask(v);
      }
      next &= rest;
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen == rest;
  };
  for (int v = 0; v < n; ++v)
    if (!connected_without(bit(v))) return 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!connected_without(bit(u) | bit(v))) return 2;
  return 3;
}

namespace detail {

// After deleting the edge set `removed`, does the graph split into at least
// two components that each contain a cycle?  (A component contains a cycle
// iff it is not a tree.)
inline bool cut_separates_cycles(const CubicGraph& g, const std::vector<int>& removed) {
  int n = g.order(), m = g.edge_count();
  std::array<std::uint8_t, kMaxE> dropped{};
  for (int e : removed) dropped[e] = 1;
  std::array<std::int8_t, kMaxN> comp;
  comp.fill(-1);
  int ncomp = 0;
  std::array<int, kMaxN> verts{}, edges{};
  std::array<std::uint8_t, kMaxN> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int c = ncomp++;
    int top = 0;
    stack[top++] = (std::uint8_t)s;
    comp[s] = (std::int8_t)c;
    while (top) {
      int u = stack[--top];
      ++verts[c];
      for (int i = 0; i < 3; ++i) {
        if (dropped[g.incident_edges(u)[i]]) continue;
        ++edges[c];
        int w = g.neighbors(u)[i];
        if (comp[w] < 0) {
          comp[w] = (std::int8_t)c;
          stack[top++] = (std::uint8_t)w;
        }
      }
    }
  }
  if (ncomp < 2) return false;
  int cyclic = 0;
  for (int c = 0; c < ncomp; ++c)
    if (edges[c] / 2 >= verts[c]) ++cyclic;
  return cyclic >= 2;
}

// Enumerate matchings of size `want` among edges with index >= from; returns
// true as soon as one is found whose deletion leaves two cycle-containing
// components.  Minimum cycle-separating cuts in cubic graphs are always
// matchings (an endpoint shared by two cut edges could be moved across the
// cut, shrinking it).
inline bool find_separating_matching(const CubicGraph& g, int from, int want,
                                     std::vector<int>& chosen, VertexMask used) {
  if (want == 0) return cut_separates_cycles(g, chosen);
  int m = g.edge_count();
  for (int e = from; e + want <= m; ++e) {
    auto [u, v] = g.edge_ends(e);
    if (used & (bit(u) | bit(v))) continue;
    chosen.push_back(e);
    if (find_separating_matching(g, e + 1, want - 1, chosen, used | bit(u) | bit(v)))
      return true;
    chosen.pop_back();
  }
  return false;
}

// Enumerate simple cycles (as vertex masks) in ascending length until the
// visitor returns true.  Each cycle is reported once: its lowest vertex is
// the start, and the second vertex is the smaller neighbor of the start.
template <typename F>
inline bool scan_cycles_ascending(const CubicGraph& g, F&& visit) {
  int n = g.order();
  for (int len = 3; len <= n; ++len) {
    bool stop = false;
    std::array<std::uint8_t, kMaxN> path;
    // DFS over paths start..cur of exact remaining budget, vertices > start allowed
    auto dfs = [&](auto&& self, int start, int cur, int depth, VertexMask on_path) -> bool {
      if (depth == len) return false;  // handled at closing edge below
      for (int i = 0; i < 3; ++i) {
        int w = g.neighbors(cur)[i];
        if (w == start) {
          if (depth == len - 1 && path[1] < cur) {
            if (visit(on_path, len)) return true;
          }
          continue;
        }
        if (w < start || (on_path & bit(w))) continue;
        path[depth + 1] = (std::uint8_t)w;
        if (self(self, start, w, depth + 1, on_path | bit(w))) return true;
      }
      return false;
    };
    for (int s = 0; s < n && !stop; ++s) {
      path[0] = (std::uint8_t)s;
      for (int i = 0; i < 3 && !stop; ++i) {
        int w = g.neighbors(s)[i];
        if (w < s) continue;
        path[1] = (std::uint8_t)w;
        if (dfs(dfs, s, w, 1, bit(s) | bit(w))) stop = true;
      }
    }
    if (stop) return true;
  }
  return false;
}

}  // namespace detail

inline ConnectivityValue cyclic_edge_connectivity(const CubicGraph& g) {
  int n = g.order();
  // a disconnected graph with two cyclic components is separated already
  if (detail::cut_separates_cycles(g, {})) return ConnectivityValue::finite(0);
  // Upper bound: boundary of the first cycle whose complement still contains
  // a cycle.  If no cycle has a cyclic complement, the graph has no two
  // vertex-disjoint cycles and no cycle-separating cut exists at all.
  int upper = -1;
  detail::scan_cycles_ascending(g, [&](VertexMask cyc, int /*len*/) {
    // count boundary edges and test the complement for a cycle
    int boundary = 0;
    int rest_vertices = 0, rest_edges = 0;
    for (int v = 0; v < n; ++v) {
      if (cyc & bit(v)) {
        boundary += 3 - popcount(g.adjacency_mask(v) & cyc);
      } else {
        ++rest_vertices;
        rest_edges += popcount(g.adjacency_mask(v) & ~cyc);
      }
    }
    rest_edges /= 2;
    if (rest_vertices == 0 || rest_edges < rest_vertices) return false;  // forest or empty
    // the complement may be disconnected; edges>=vertices guarantees a cycle
    upper = boundary;
    return true;
  });
  if (upper < 0) return ConnectivityValue::unbounded_value();
  for (int t = 1; t < upper; ++t) {
    std::vector<int> chosen;
    chosen.reserve(t);
    if (detail::find_separating_matching(g, 0, t, chosen, 0))
      return ConnectivityValue::finite(t);
  }
  return ConnectivityValue::finite(upper);
}

// True iff no cycle-separating cut of size < t exists.
inline bool cyclically_edge_connected(const CubicGraph& g, int t) {
  return cyclic_edge_connectivity(g).at_least(t);
}

// ---------------------------------------------------------------------------
// Named small graphs used by tests, fixtures and the generator seed.

inline CubicGraph k4() {
  return CubicGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline CubicGraph k33() {
  return CubicGraph::from_edges(
      6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

inline CubicGraph prism() {
  return CubicGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                    {0, 3}, {1, 4}, {2, 5}});
}

inline CubicGraph cube_q3() {
  return CubicGraph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                                    {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

inline CubicGraph petersen() {
  // outer 5-cycle 0..4, inner pentagram 5..9
  return CubicGraph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                     {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                     {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

// The second 18-vertex snark (automorphism group of order 8); every one of
// its 2-factors consists of odd cycles only.
inline CubicGraph blanusa_second() {
  return CubicGraph::from_edges(
      18, {{0, 9}, {0, 10}, {0, 16}, {1, 3}, {1, 4}, {1, 13}, {2, 5}, {2, 13},
           {2, 15}, {3, 11}, {3, 15}, {4, 5}, {4, 7}, {5, 8}, {6, 7}, {6, 9},
           {6, 17}, {7, 10}, {8, 9}, {8, 12}, {10, 11}, {11, 17}, {12, 13}, {12, 14},
           {14, 15}, {14, 16}, {16, 17}});
}

// Flower snark on 4k vertices (k odd, >= 5): k claws t_i/x_i/y_i/z_i with the
// x's on a k-cycle and the y/z leaves on one 2k-cycle.
inline CubicGraph flower_snark(int k) {
  if (k < 5 || k % 2 == 0) throw std::invalid_argument("flower snark needs odd k >= 5");
  std::vector<std::pair<int, int>> edges;
  auto t = [&](int i) { return 4 * i; };
  auto x = [&](int i) { return 4 * i + 1; };
  auto y = [&](int i) { return 4 * i + 2; };
  auto z = [&](int i) { return 4 * i + 3; };
  for (int i = 0; i < k; ++i) {
    edges.push_back({t(i), x(i)});
    edges.push_back({t(i), y(i)});
    edges.push_back({t(i), z(i)});
    edges.push_back({x(i), x((i + 1) % k)});
  }
  for (int i = 0; i + 1 < k; ++i) {
    edges.push_back({y(i), y(i + 1)});
    edges.push_back({z(i), z(i + 1)});
  }
  edges.push_back({y(k - 1), z(0)});
  edges.push_back({z(k - 1), y(0)});
  return CubicGraph::from_edges(4 * k, edges);
}

}  // namespace snark
