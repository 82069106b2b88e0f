// Edge colorings and coloring-derived covers: chromatic index, graph
// classification, total chromatic number, normal 5-edge colorings,
// Fulkerson/Berge perfect-matching covers.

#pragma once

#include <optional>
#include <vector>

#include "snark/core.hpp"
#include "snark/factor.hpp"

namespace snark {

struct EdgeColoring {
  int palette_size = 3;
  std::array<std::uint8_t, kMaxE> color_of{};  // 1..palette_size per edge
};

inline bool is_proper_edge_coloring(const CubicGraph& g, const EdgeColoring& col) {
  for (int v = 0; v < g.order(); ++v) {
    const auto& inc = g.incident_edges(v);
    for (int i = 0; i < 3; ++i) {
      int c = col.color_of[inc[i]];
      if (c < 1 || c > col.palette_size) return false;
      for (int j = i + 1; j < 3; ++j)
        if (c == col.color_of[inc[j]]) return false;
    }
  }
  return true;
}

namespace color_detail {

// Edges in breadth-first discovery order from vertex 0; each later edge
// touches an already-seen vertex, which keeps the palette propagation tight.
inline int bfs_edge_order(const CubicGraph& g, std::array<std::uint8_t, kMaxE>& order) {
  int n = g.order();
  std::array<std::uint8_t, kMaxN> queue;
  std::array<std::uint8_t, kMaxE> in_order{};
  VertexMask seen = bit(0);
  int head = 0, tail = 0, cnt = 0;
  queue[tail++] = 0;
  while (head < tail) {
    int u = queue[head++];
    for (int i = 0; i < 3; ++i) {
      int e = g.incident_edges(u)[i];
      int w = g.neighbors(u)[i];
      if (!in_order[e]) {
        in_order[e] = 1;
        order[cnt++] = (std::uint8_t)e;
      }
      if (!(seen & bit(w))) {
        seen |= bit(w);
        queue[tail++] = (std::uint8_t)w;
      }
    }
  }
  return cnt;
}

struct ThreeColorSearch {
  const CubicGraph* g = nullptr;
  int m = 0;
  std::array<std::uint8_t, kMaxE> todo;  // uncolored edges in search order
  int todo_count = 0;
  std::array<std::uint8_t, kMaxE> color{};
  std::array<std::uint8_t, kMaxN> used{};  // bitmask of colors 1..3 at vertex

  void init(const CubicGraph& graph) {
    g = &graph;
    m = graph.edge_count();
    color.fill(0);
    used.fill(0);
  }

  // pre-assign an edge color; false if immediately conflicting
  bool force(int e, int c) {
    auto [u, v] = g->edge_ends(e);
    std::uint8_t b = (std::uint8_t)(1 << (c - 1));
    if ((used[u] | used[v]) & b) return false;
    color[e] = (std::uint8_t)c;
    used[u] |= b;
    used[v] |= b;
    return true;
  }

  void collect_todo() {
    std::array<std::uint8_t, kMaxE> order;
    int cnt = bfs_edge_order(*g, order);
    todo_count = 0;
    for (int i = 0; i < cnt; ++i)
      if (!color[order[i]]) todo[todo_count++] = order[i];
  }

  bool solve(int idx) {
    if (idx == todo_count) return true;
    int e = todo[idx];
    auto [u, v] = g->edge_ends(e);
    int avail = ~(used[u] | used[v]) & 7;
    while (avail) {
      int b = avail & -avail;
      avail ^= b;
      color[e] = (std::uint8_t)(1 + lowest_bit((std::uint64_t)b));
      used[u] |= (std::uint8_t)b;
      used[v] |= (std::uint8_t)b;
      if (solve(idx + 1)) return true;
      used[u] ^= (std::uint8_t)b;
      used[v] ^= (std::uint8_t)b;
    }
    color[e] = 0;
    return false;
  }

  bool run() {
    collect_todo();
    return solve(0);
  }
};

}  // namespace color_detail

// Proper 3-edge-coloring with optional forced assignments (edge index, color
// 1..3).  Returns false when no proper completion exists.
inline bool three_edge_coloring(const CubicGraph& g, EdgeColoring& out,
                                const std::vector<std::pair<int, int>>& forced = {}) {
  color_detail::ThreeColorSearch s;
  s.init(g);
  for (auto [e, c] : forced)
    if (!s.force(e, c)) return false;
  if (!s.run()) return false;
  out.palette_size = 3;
  out.color_of = s.color;
  return true;
}

inline int chromatic_index(const CubicGraph& g, EdgeColoring* witness = nullptr) {
  EdgeColoring col;
  if (three_edge_coloring(g, col)) {
    if (witness) *witness = col;
    return 3;
  }
  return 4;  // Vizing: cubic graphs are class 1 or class 2
}

inline bool is_colourable(const CubicGraph& g) { return chromatic_index(g) == 3; }

// ---------------------------------------------------------------------------

enum class GraphClass { colourable, uncolourable_trivial, weak_snark, snark };

inline GraphClass classify(const CubicGraph& g) {
  if (is_colourable(g)) return GraphClass::colourable;
  if (!cyclic_edge_connectivity(g).at_least(4)) return GraphClass::uncolourable_trivial;
  int gi = girth(g);
  if (gi >= 5) return GraphClass::snark;
  if (gi == 4) return GraphClass::weak_snark;
  return GraphClass::uncolourable_trivial;
}

// ---------------------------------------------------------------------------
// Total chromatic number: colors on V(G) u E(G), adjacent/incident elements
// distinct.  Cubic graphs need 4 or 5 colors; we search for a 4-total-coloring
// and report 5 on exhaustion.

struct TotalColoring {
  std::array<std::uint8_t, kMaxN> vertex_color{};
  std::array<std::uint8_t, kMaxE> edge_color{};
};

inline int total_chromatic_number(const CubicGraph& g, TotalColoring* witness = nullptr) {
  int n = g.order();
  // items: vertices 0..n-1, then edges n..n+m-1, ordered BFS-interleaved
  std::vector<int> items;
  items.reserve(n + g.edge_count());
  {
    std::array<std::uint8_t, kMaxN> queue;
    std::array<std::uint8_t, kMaxE> edge_seen{};
    VertexMask seen = bit(0);
    int head = 0, tail = 0;
    queue[tail++] = 0;
    while (head < tail) {
      int u = queue[head++];
      items.push_back(u);
      for (int i = 0; i < 3; ++i) {
        int e = g.incident_edges(u)[i];
        int w = g.neighbors(u)[i];
        if (!edge_seen[e]) {
          edge_seen[e] = 1;
          items.push_back(n + e);
        }
        if (!(seen & bit(w))) {
          seen |= bit(w);
          queue[tail++] = (std::uint8_t)w;
        }
      }
    }
  }
  TotalColoring tc;

  auto avail_mask = [&](int item) {
    int used = 0;
    if (item < n) {
      int v = item;
      for (int i = 0; i < 3; ++i) {
        int w = g.neighbors(v)[i];
        if (tc.vertex_color[w]) used |= 1 << (tc.vertex_color[w] - 1);
        int e = g.incident_edges(v)[i];
        if (tc.edge_color[e]) used |= 1 << (tc.edge_color[e] - 1);
      }
    } else {
      int e = item - n;
      auto [u, v] = g.edge_ends(e);
      if (tc.vertex_color[u]) used |= 1 << (tc.vertex_color[u] - 1);
      if (tc.vertex_color[v]) used |= 1 << (tc.vertex_color[v] - 1);
      for (int x : {u, v})
        for (int i = 0; i < 3; ++i) {
          int f = g.incident_edges(x)[i];
          if (f != e && tc.edge_color[f]) used |= 1 << (tc.edge_color[f] - 1);
        }
    }
    return ~used & 0xf;
  };

  auto rec = [&](auto&& self, size_t idx) -> bool {
    if (idx == items.size()) return true;
    int item = items[idx];
    int avail = avail_mask(item);
    while (avail) {
      int b = avail & -avail;
      avail ^= b;
      std::uint8_t c = (std::uint8_t)(1 + lowest_bit((std::uint64_t)b));
      if (item < n) tc.vertex_color[item] = c;
      else tc.edge_color[item - n] = c;
      if (self(self, idx + 1)) return true;
      if (item < n) tc.vertex_color[item] = 0;
      else tc.edge_color[item - n] = 0;
    }
    return false;
  };

  if (rec(rec, 0)) {
    if (witness) *witness = tc;
    return 4;
  }
  return 5;
}

inline bool validate_total_coloring(const CubicGraph& g, const TotalColoring& tc, int k) {
  for (int v = 0; v < g.order(); ++v) {
    if (tc.vertex_color[v] < 1 || tc.vertex_color[v] > k) return false;
    for (int i = 0; i < 3; ++i) {
      if (tc.vertex_color[v] == tc.vertex_color[g.neighbors(v)[i]]) return false;
      if (tc.vertex_color[v] == tc.edge_color[g.incident_edges(v)[i]]) return false;
      for (int j = i + 1; j < 3; ++j)
        if (tc.edge_color[g.incident_edges(v)[i]] == tc.edge_color[g.incident_edges(v)[j]])
          return false;
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (tc.edge_color[e] < 1 || tc.edge_color[e] > k) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Normal 5-edge colorings: every edge poor (closed-neighborhood palette of
// size 3) or rich (size 5).

enum class EdgeKind { poor, rich, neither };
enum class NormalMode { any, all_rich };

inline EdgeKind edge_kind(const CubicGraph& g, const EdgeColoring& col, int e) {
  if (col.palette_size != 5 || !is_proper_edge_coloring(g, col))
    throw std::invalid_argument("edge_kind requires a proper 5-palette coloring");
  auto [u, v] = g.edge_ends(e);
  int colors = 0;
  for (int i = 0; i < 3; ++i) {
    colors |= 1 << col.color_of[g.incident_edges(u)[i]];
    colors |= 1 << col.color_of[g.incident_edges(v)[i]];
  }
  int k = popcount((std::uint64_t)colors);
  return k == 3 ? EdgeKind::poor : k == 5 ? EdgeKind::rich : EdgeKind::neither;
}

inline std::optional<EdgeColoring> normal_5_coloring(const CubicGraph& g, NormalMode mode) {
  if (!is_connected(g)) throw std::invalid_argument("normal_5_coloring requires connectivity");
  int m = g.edge_count();
  std::array<std::uint8_t, kMaxE> order;
  int cnt = color_detail::bfs_edge_order(g, order);

  std::array<std::uint8_t, kMaxE> color{};
  // closed neighborhood of edge e: e plus the four other edges at its ends
  std::array<std::array<std::uint8_t, 5>, kMaxE> nbhd;
  std::array<std::uint8_t, kMaxE> colored_in_nbhd{};
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edge_ends(e);
    int k = 0;
    nbhd[e][k++] = (std::uint8_t)e;
    for (int x : {u, v})
      for (int i = 0; i < 3; ++i) {
        int f = g.incident_edges(x)[i];
        if (f != e) nbhd[e][k++] = (std::uint8_t)f;
      }
  }
  // membership lists: which closed neighborhoods contain edge f
  std::array<std::array<std::uint8_t, 5>, kMaxE> member;
  std::array<std::uint8_t, kMaxE> member_cnt{};
  for (int e = 0; e < m; ++e)
    for (int i = 0; i < 5; ++i) {
      int f = nbhd[e][i];
      member[f][member_cnt[f]++] = (std::uint8_t)e;
    }

  auto kind_ok = [&](int e) {
    int colors = 0;
    for (int i = 0; i < 5; ++i) colors |= 1 << color[nbhd[e][i]];
    int k = popcount((std::uint64_t)colors);
    return mode == NormalMode::all_rich ? k == 5 : (k == 3 || k == 5);
  };

  // colors are used in canonical first-use order to break palette symmetry
  auto rec = [&](auto&& self, int idx, int max_used) -> bool {
    if (idx == cnt) return true;
    int e = order[idx];
    auto [u, v] = g.edge_ends(e);
    int used = 0;
    for (int x : {u, v})
      for (int i = 0; i < 3; ++i) {
        int f = g.incident_edges(x)[i];
        if (color[f]) used |= 1 << (color[f] - 1);
      }
    int limit = std::min(5, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if ((used >> (c - 1)) & 1) continue;
      color[e] = (std::uint8_t)c;
      bool ok = true;
      int advanced = 0;
      for (int i = 0; i < member_cnt[e]; ++i) {
        int host = member[e][i];
        ++colored_in_nbhd[host];
        ++advanced;
        if (colored_in_nbhd[host] == 5 && !kind_ok(host)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, idx + 1, std::max(max_used, c))) return true;
      for (int i = 0; i < advanced; ++i) --colored_in_nbhd[member[e][i]];
      color[e] = 0;
    }
    return false;
  };

  if (!rec(rec, 0, 0)) return std::nullopt;
  EdgeColoring out;
  out.palette_size = 5;
  out.color_of = color;
  return out;
}

inline bool is_normal_coloring(const CubicGraph& g, const EdgeColoring& col,
                               bool require_all_rich = false) {
  for (int e = 0; e < g.edge_count(); ++e) {
    EdgeKind k = edge_kind(g, col, e);
    if (k == EdgeKind::neither) return false;
    if (require_all_rich && k != EdgeKind::rich) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fulkerson and Berge covers.

struct MatchingCover {
  std::vector<EdgeMask> matchings;
};

inline bool has_bridge(const CubicGraph& g) {
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_ends(e);
    VertexMask seen = bit(u), frontier = bit(u);
    while (frontier) {
      VertexMask next = 0;
      while (frontier) {
        int x = lowest_bit(frontier);
        frontier &= frontier - 1;
        for (int i = 0; i < 3; ++i) {
          if (g.incident_edges(x)[i] == e) continue;
          next |= bit(g.neighbors(x)[i]);
        }
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (!(seen & bit(v))) return true;
  }
  return false;
}

inline bool cover_multiplicities_ok(const CubicGraph& g, const MatchingCover& cover,
                                    int exactly, int at_least) {
  for (int e = 0; e < g.edge_count(); ++e) {
    int c = 0;
    for (EdgeMask m : cover.matchings) c += (m >> e) & 1;
    if (exactly >= 0 && c != exactly) return false;
    if (at_least >= 0 && c < at_least) return false;
  }
  return true;
}

// Six perfect matchings covering every edge exactly twice, or nothing after
// exhausting the search.  Colourable graphs take each color class twice.
inline std::optional<MatchingCover> fulkerson_cover(const CubicGraph& g) {
  if (has_bridge(g)) throw std::invalid_argument("fulkerson_cover requires a bridgeless graph");
  EdgeColoring col;
  if (three_edge_coloring(g, col)) {
    std::array<EdgeMask, 3> cls{};
    for (int e = 0; e < g.edge_count(); ++e) cls[col.color_of[e] - 1] |= EdgeMask{1} << e;
    return MatchingCover{{cls[0], cls[0], cls[1], cls[1], cls[2], cls[2]}};
  }
  auto pms = perfect_matchings(g);
  int m = g.edge_count();
  std::vector<std::vector<int>> containing(m);
  for (int i = 0; i < (int)pms.size(); ++i)
    for (int e = 0; e < m; ++e)
      if ((pms[i] >> e) & 1) containing[e].push_back(i);

  std::array<std::int8_t, kMaxE> demand;
  for (int e = 0; e < m; ++e) demand[e] = 2;
  std::vector<int> chosen;

  auto rec = [&](auto&& self, int count, int min_index) -> bool {
    if (count == 6) return true;
    int target = -1;
    for (int e = 0; e < m; ++e)
      if (demand[e] > 0) { target = e; break; }
    if (target < 0) return false;  // count < 6 but nothing left to cover
    for (int i : containing[target]) {
      if (i < min_index) continue;
      EdgeMask pm = pms[i];
      bool fits = true;
      for (EdgeMask rest = pm; rest && fits;) {
        int e = lowest_bit(rest);
        rest &= rest - 1;
        if (demand[e] == 0) fits = false;
      }
      if (!fits) continue;
      for (EdgeMask rest = pm; rest;) {
        int e = lowest_bit(rest);
        rest &= rest - 1;
        --demand[e];
      }
      chosen.push_back(i);
      if (self(self, count + 1, i)) return true;
      chosen.pop_back();
      for (EdgeMask rest = pm; rest;) {
        int e = lowest_bit(rest);
        rest &= rest - 1;
        ++demand[e];
      }
    }
    return false;
  };

  if (!rec(rec, 0, 0)) return std::nullopt;
  MatchingCover cover;
  for (int i : chosen) cover.matchings.push_back(pms[i]);
  return cover;
}

// Five perfect matchings covering every edge at least once.
inline std::optional<MatchingCover> berge_cover(const CubicGraph& g) {
  if (has_bridge(g)) throw std::invalid_argument("berge_cover requires a bridgeless graph");
  if (auto f = fulkerson_cover(g)) {
    MatchingCover cover;
    cover.matchings.assign(f->matchings.begin(), f->matchings.begin() + 5);
    return cover;
  }
  auto pms = perfect_matchings(g);
  int m = g.edge_count();
  std::vector<std::vector<int>> containing(m);
  for (int i = 0; i < (int)pms.size(); ++i)
    for (int e = 0; e < m; ++e)
      if ((pms[i] >> e) & 1) containing[e].push_back(i);
  std::vector<int> chosen;
  auto rec = [&](auto&& self, EdgeMask covered, int min_index) -> bool {
    if ((int)chosen.size() > 5) return false;
    if (covered == all_edges_mask(g)) return true;
    if ((int)chosen.size() == 5) return false;
    int target = lowest_bit(~covered & all_edges_mask(g));
    for (int i : containing[target]) {
      if (i < min_index) continue;
      chosen.push_back(i);
      if (self(self, covered | pms[i], i)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0, 0)) return std::nullopt;
  MatchingCover cover;
  for (int i : chosen) cover.matchings.push_back(pms[i]);
  while (cover.matchings.size() < 5) cover.matchings.push_back(cover.matchings.back());
  return cover;
}

}  // namespace snark
