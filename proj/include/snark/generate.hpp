// Exhaustive isomorph-free generation of cubic graph classes via edge
// insertion with colorability look-ahead.
//
// Scheme: every 3-connected cubic graph on n+2 vertices arises from a
// 3-connected cubic graph on n vertices by subdividing two edges and joining
// the new vertices, starting from K4.  Levels are expanded over all unordered
// edge pairs and deduplicated by canonical form.  At the last level only,
// girth-restricted targets enumerate disjoint pairs and discard pairs that
// provably lead to colourable children: pairs on a common cycle of a 2-factor
// induced by two colors of some 3-edge-coloring, and pairs whose new edge
// would close a 4-cycle in a colourable parent.

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "snark/canon.hpp"
#include "snark/color.hpp"
#include "snark/core.hpp"

namespace snark {

struct EdgePair {
  int e1 = 0, e2 = 0;
  bool disjoint = false;
};

inline EdgePair make_edge_pair(const CubicGraph& g, int e1, int e2) {
  auto [a, b] = g.edge_ends(e1);
  auto [c, d] = g.edge_ends(e2);
  return {e1, e2, a != c && a != d && b != c && b != d};
}

// ---------------------------------------------------------------------------
// Edge insertion and reduction.

namespace gen_detail {

inline CubicGraph from_rows_fast(int n, const std::array<std::array<std::uint8_t, 3>, kMaxN>& rows) {
  return CubicGraph::from_neighbor_rows(n, rows);
}

}  // namespace gen_detail

inline CubicGraph insert_edge(const CubicGraph& g, int e1, int e2) {
  if (e1 == e2) throw std::invalid_argument("insert_edge requires two distinct edges");
  int n = g.order();
  if (n + 2 > kMaxN) throw GraphError(GraphError::Kind::too_large, "insertion exceeds max order");
  auto [a, b] = g.edge_ends(e1);
  auto [c, d] = g.edge_ends(e2);
  int x = n, y = n + 1;
  std::array<std::array<std::uint8_t, 3>, kMaxN> rows{};
  for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
  auto replace = [&](int v, int from, int to) {
    for (int i = 0; i < 3; ++i)
      if (rows[v][i] == from) {
        rows[v][i] = (std::uint8_t)to;
        return;
      }
  };
  replace(a, b, x);
  replace(b, a, x);
  replace(c, d, y);
  replace(d, c, y);
  rows[x] = {(std::uint8_t)a, (std::uint8_t)b, (std::uint8_t)y};
  rows[y] = {(std::uint8_t)c, (std::uint8_t)d, (std::uint8_t)x};
  return gen_detail::from_rows_fast(n + 2, rows);
}

// Remove edge e and suppress its endpoints; empty when suppression would
// create a parallel edge or the order would drop below 4.
inline std::optional<CubicGraph> reduce_edge(const CubicGraph& g, int e) {
  int n = g.order();
  if (n - 2 < 4) return std::nullopt;
  auto [u, v] = g.edge_ends(e);
  std::array<int, 2> un{}, vn{};
  int ui = 0, vi = 0;
  for (int i = 0; i < 3; ++i) {
    if (g.neighbors(u)[i] != v) un[ui++] = g.neighbors(u)[i];
    if (g.neighbors(v)[i] != u) vn[vi++] = g.neighbors(v)[i];
  }
  int a = un[0], b = un[1], c = vn[0], d = vn[1];
  if (g.has_edge(a, b) || g.has_edge(c, d)) return std::nullopt;
  if ((a == c && b == d) || (a == d && b == c)) return std::nullopt;
  // relabel: drop u and v, shift the rest down
  std::array<int, kMaxN> map{};
  int next = 0;
  for (int w = 0; w < n; ++w) map[w] = (w == u || w == v) ? -1 : next++;
  std::vector<std::vector<int>> lists(n - 2);
  for (int w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    for (int i = 0; i < 3; ++i) {
      int z = g.neighbors(w)[i];
      if (z == u) z = (w == a) ? b : a;
      else if (z == v) z = (w == c) ? d : c;
      lists[map[w]].push_back(map[z]);
    }
  }
  return CubicGraph::from_lists(n - 2, lists);
}

// ---------------------------------------------------------------------------
// Look-ahead machinery.

// Swap the two colors along a non-hamiltonian cycle of one of the induced
// 2-factors; the resulting coloring induces two different 2-factors.
inline std::optional<EdgeColoring> cycle_swap_recoloring(const CubicGraph& g,
                                                         const EdgeColoring& base) {
  int n = g.order(), m = g.edge_count();
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& pr : pairs) {
    // walk the cycles of the 2-factor induced by colors pr[0], pr[1]
    std::array<std::uint8_t, kMaxN> seen{};
    for (int start = 0; start < n; ++start) {
      if (seen[start]) continue;
      // trace the cycle through `start`
      std::vector<int> cyc_edges;
      int len = 0;
      int cur = start, prev = -1;
      do {
        seen[cur] = 1;
        ++len;
        for (int i = 0; i < 3; ++i) {
          int f = g.incident_edges(cur)[i];
          int w = g.neighbors(cur)[i];
          int c = base.color_of[f];
          if ((c == pr[0] || c == pr[1]) && w != prev) {
            cyc_edges.push_back(f);
            prev = cur;
            cur = w;
            break;
          }
        }
      } while (cur != start);
      if (len < n) {
        EdgeColoring out = base;
        for (int f : cyc_edges) {
          out.color_of[f] =
              (std::uint8_t)(out.color_of[f] == pr[0] ? pr[1] : pr[0]);
        }
        (void)m;
        return out;
      }
    }
  }
  return std::nullopt;
}

// Up to three proper 3-edge-colorings: a base coloring, a cycle-swap
// recoloring, and a from-scratch coloring with one edge forced away from its
// base color (vertex 0's colors pinned to kill color permutations).  Empty
// iff the graph is uncolourable.
inline std::vector<EdgeColoring> derive_colorings(const CubicGraph& g) {
  std::vector<EdgeColoring> out;
  EdgeColoring base;
  if (!three_edge_coloring(g, base)) return out;
  out.push_back(base);
  if (auto swapped = cycle_swap_recoloring(g, base)) out.push_back(*swapped);
  // forced third coloring: lowest-index edge not incident to vertex 0
  int target = -1;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_ends(e);
    if (u != 0 && v != 0) {
      target = e;
      break;
    }
  }
  if (target >= 0) {
    std::vector<std::pair<int, int>> forced;
    for (int i = 0; i < 3; ++i) {
      int e0 = g.incident_edges(0)[i];
      forced.push_back({e0, base.color_of[e0]});
    }
    for (int c = 1; c <= 3; ++c) {
      if (c == base.color_of[target]) continue;
      auto attempt = forced;
      attempt.push_back({target, c});
      EdgeColoring third;
      if (three_edge_coloring(g, third, attempt)) {
        out.push_back(third);
        break;
      }
    }
  }
  return out;
}

// Per-edge cycle ids within each color-pair-induced 2-factor of each given
// coloring (up to 9 such 2-factors).
struct Lookahead {
  int factor_count = 0;
  // cid[f][e]: cycle id of edge e in 2-factor f, or -1 when e is not in it
  std::array<std::array<std::int16_t, kMaxE>, 9> cid;

  void build(const CubicGraph& g, const std::vector<EdgeColoring>& colorings) {
    factor_count = 0;
    int n = g.order();
    const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    for (const auto& col : colorings) {
      for (const auto& pr : pairs) {
        auto& ids = cid[factor_count];
        for (int e = 0; e < g.edge_count(); ++e) ids[e] = -1;
        std::array<std::uint8_t, kMaxN> seen{};
        std::int16_t next_id = 0;
        for (int start = 0; start < n; ++start) {
          if (seen[start]) continue;
          int cur = start, prev = -1;
          do {
            seen[cur] = 1;
            for (int i = 0; i < 3; ++i) {
              int f = g.incident_edges(cur)[i];
              int w = g.neighbors(cur)[i];
              int c = col.color_of[f];
              if ((c == pr[0] || c == pr[1]) && w != prev) {
                ids[f] = next_id;
                prev = cur;
                cur = w;
                break;
              }
            }
          } while (cur != start);
          ++next_id;
        }
        ++factor_count;
      }
    }
  }

  bool pair_forbidden(int e1, int e2) const {
    for (int f = 0; f < factor_count; ++f) {
      std::int16_t a = cid[f][e1];
      if (a >= 0 && a == cid[f][e2]) return true;
    }
    return false;
  }
};

// All unordered pairs covered by the same-cycle criterion; every returned
// pair leads to a colourable child.
inline std::vector<EdgePair> lookahead_forbidden_pairs(const CubicGraph& g,
                                                       const std::vector<EdgeColoring>& colorings) {
  std::vector<EdgePair> out;
  if (colorings.empty()) return out;
  Lookahead la;
  la.build(g, colorings);
  for (int e1 = 0; e1 < g.edge_count(); ++e1)
    for (int e2 = e1 + 1; e2 < g.edge_count(); ++e2)
      if (la.pair_forbidden(e1, e2)) out.push_back(make_edge_pair(g, e1, e2));
  return out;
}

// True iff g is colourable and some edge other than the pair joins an
// endpoint of e1 to an endpoint of e2 (putting the inserted edge on a
// 4-cycle); such children are colourable.
inline bool square_pair_prunable(const CubicGraph& g, const EdgePair& pair) {
  if (!is_colourable(g)) return false;
  auto [a, b] = g.edge_ends(pair.e1);
  auto [c, d] = g.edge_ends(pair.e2);
  VertexMask left = bit(a) | bit(b), right = bit(c) | bit(d);
  for (int v : {a, b}) {
    VertexMask targets = g.adjacency_mask(v) & right & ~left;
    while (targets) {
      int w = lowest_bit(targets);
      targets &= targets - 1;
      int f = g.edge_index(v, w);
      if (f != pair.e1 && f != pair.e2) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Dedup set over 128-bit canonical hashes (open addressing).

class CodeSet {
 public:
  explicit CodeSet(size_t expected = 1024) { rehash(slot_count_for(expected)); }

  bool insert(std::pair<std::uint64_t, std::uint64_t> h) {
    if (h.first == 0 && h.second == 0) h = {1, 1};
    if ((count_ + 1) * 3 > slots_.size() * 2) rehash(slots_.size() * 2);
    size_t i = (size_t)h.first & mask_;
    while (true) {
      auto& s = slots_[i];
      if (s.first == 0 && s.second == 0) {
        s = h;
        ++count_;
        return true;
      }
      if (s == h) return false;
      i = (i + 1) & mask_;
    }
  }

  size_t size() const { return count_; }

 private:
  static size_t slot_count_for(size_t expected) {
    size_t s = 16;
    while (s * 2 < expected * 3) s <<= 1;
    return s;
  }
  void rehash(size_t new_size) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> old;
    old.swap(slots_);
    slots_.assign(new_size, {0, 0});
    mask_ = new_size - 1;
    count_ = 0;
    for (auto& h : old)
      if (!(h.first == 0 && h.second == 0)) insert(h);
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> slots_;
  size_t mask_ = 0;
  size_t count_ = 0;
};

// ---------------------------------------------------------------------------
// Level storage: packed neighbor rows plus the canonical hash per graph.

struct ParentLevel {
  int order = 4;
  std::vector<std::uint8_t> blob;  // 3*order bytes per graph
  std::vector<std::pair<std::uint64_t, std::uint64_t>> hashes;

  size_t size() const { return hashes.size(); }

  void append(const CubicGraph& g, std::pair<std::uint64_t, std::uint64_t> h) {
    for (int v = 0; v < g.order(); ++v)
      for (int i = 0; i < 3; ++i) blob.push_back(g.neighbors(v)[i]);
    hashes.push_back(h);
  }

  CubicGraph get(size_t idx) const {
    std::array<std::array<std::uint8_t, 3>, kMaxN> rows{};
    const std::uint8_t* p = blob.data() + idx * 3 * order;
    for (int v = 0; v < order; ++v)
      for (int i = 0; i < 3; ++i) rows[v][i] = p[3 * v + i];
    return gen_detail::from_rows_fast(order, rows);
  }

  static ParentLevel seed() {
    ParentLevel lvl;
    lvl.order = 4;
    auto g = k4();
    lvl.append(g, canonical_hash(g));
    return lvl;
  }
};

namespace gen_detail {

// All children of a parent range, in deterministic (parent, pair) order, as
// packed neighbor rows plus canonical hashes.  No dedup here: merging happens
// in chunk order, so threaded expansion inserts exactly the same hash
// sequence as a serial run.
struct ChunkResult {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> hashes;
  std::vector<std::uint8_t> rows;  // 3*(order+2) bytes per child
};

inline ChunkResult expand_chunk(const ParentLevel& parents, size_t begin, size_t end) {
  ChunkResult out;
  int child_order = parents.order + 2;
  for (size_t idx = begin; idx < end; ++idx) {
    CubicGraph g = parents.get(idx);
    int m = g.edge_count();
    for (int e1 = 0; e1 < m; ++e1)
      for (int e2 = e1 + 1; e2 < m; ++e2) {
        CubicGraph child = insert_edge(g, e1, e2);
        out.hashes.push_back(canonical_hash(child));
        for (int v = 0; v < child_order; ++v)
          for (int i = 0; i < 3; ++i) out.rows.push_back(child.neighbors(v)[i]);
      }
  }
  return out;
}

// Drive the chunked expansion with `workers` threads; `sink` receives each
// new child's packed rows in deterministic order.
template <typename Sink>
inline void expand_level_engine(const ParentLevel& parents, CodeSet& seen, int workers,
                                const std::function<void(size_t, size_t)>& progress, Sink&& sink) {
  const size_t chunk_size = 2048;
  int child_order = parents.order + 2;
  size_t nchunks = (parents.size() + chunk_size - 1) / chunk_size;
  if (workers < 1) workers = 1;
  for (size_t base = 0; base < nchunks; base += workers) {
    size_t batch = std::min((size_t)workers, nchunks - base);
    std::vector<ChunkResult> results(batch);
    if (batch == 1) {
      results[0] = expand_chunk(parents, base * chunk_size,
                                std::min(parents.size(), (base + 1) * chunk_size));
    } else {
      std::vector<std::thread> pool;
      for (size_t b = 0; b < batch; ++b)
        pool.emplace_back([&, b]() {
          size_t lo = (base + b) * chunk_size;
          size_t hi = std::min(parents.size(), lo + chunk_size);
          results[b] = expand_chunk(parents, lo, hi);
        });
      for (auto& t : pool) t.join();
    }
    for (size_t b = 0; b < batch; ++b) {
      const auto& r = results[b];
      size_t stride = 3 * (size_t)child_order;
      for (size_t i = 0; i < r.hashes.size(); ++i)
        if (seen.insert(r.hashes[i])) sink(r.hashes[i], r.rows.data() + i * stride);
    }
    if (progress) progress(std::min(parents.size(), (base + batch) * chunk_size), parents.size());
  }
}

}  // namespace gen_detail

// Expand one level: all unordered edge pairs of every parent, children
// deduplicated by canonical hash.  Children of 3-connected cubic parents are
// again 3-connected (checked exhaustively in the tests on small orders).
inline ParentLevel expand_level_full(const ParentLevel& parents,
                                     const std::function<void(size_t, size_t)>& progress = {},
                                     int workers = 1) {
  ParentLevel next;
  next.order = parents.order + 2;
  CodeSet seen(parents.size() * 16 + 64);
  size_t stride = 3 * (size_t)next.order;
  gen_detail::expand_level_engine(parents, seen, workers, progress,
                                  [&](std::pair<std::uint64_t, std::uint64_t> h,
                                      const std::uint8_t* rows) {
                                    next.blob.insert(next.blob.end(), rows, rows + stride);
                                    next.hashes.push_back(h);
                                  });
  return next;
}

// ---------------------------------------------------------------------------
// Catalog generation.

enum class CatalogClass { cubic3c, cyc4, weaksnark, snark, snark5 };

inline const char* catalog_class_name(CatalogClass c) {
  switch (c) {
    case CatalogClass::cubic3c: return "cubic3c";
    case CatalogClass::cyc4: return "cyc4";
    case CatalogClass::weaksnark: return "weaksnark";
    case CatalogClass::snark: return "snark";
    case CatalogClass::snark5: return "snark5";
  }
  return "?";
}

inline bool catalog_class_from_name(const std::string& s, CatalogClass& out) {
  for (CatalogClass c : {CatalogClass::cubic3c, CatalogClass::cyc4, CatalogClass::weaksnark,
                         CatalogClass::snark, CatalogClass::snark5})
    if (s == catalog_class_name(c)) {
      out = c;
      return true;
    }
  return false;
}

struct GenerationSpec {
  int target_order = 10;
  CatalogClass cls = CatalogClass::snark;
  int shard_index = 0;
  int shard_count = 1;
  // orders whose parent level exceeds memory stage it on disk here
  std::string work_dir;
};

struct GenerationResult {
  std::vector<CubicGraph> graphs;  // ascending canonical code
  long long pairs_total = 0;
  long long pairs_pruned_lookahead = 0;
  long long pairs_pruned_square = 0;
  long long colorability_tests = 0;
  double seconds = 0;
};

// No cycle-separating cut of size < t exists (minimum cuts are matchings).
inline bool cyclic_connectivity_at_least(const CubicGraph& g, int t) {
  for (int size = 1; size < t; ++size) {
    std::vector<int> chosen;
    chosen.reserve(size);
    if (detail::find_separating_matching(g, 0, size, chosen, 0)) return false;
  }
  return true;
}

inline bool catalog_class_accepts(CatalogClass cls, const CubicGraph& g) {
  switch (cls) {
    case CatalogClass::cubic3c:
      return true;  // the level invariant: all children are 3-connected
    case CatalogClass::cyc4:
      return cyclic_connectivity_at_least(g, 4);
    case CatalogClass::weaksnark:
      return girth(g) >= 4 && !is_colourable(g) && cyclic_connectivity_at_least(g, 4);
    case CatalogClass::snark:
      return girth(g) >= 5 && !is_colourable(g) && cyclic_connectivity_at_least(g, 4);
    case CatalogClass::snark5:
      return girth(g) >= 5 && !is_colourable(g) && cyclic_connectivity_at_least(g, 5);
  }
  return false;
}

namespace gen_detail {

// Ownership for deterministic sharding: the child belongs to the parent with
// the least canonical hash among its admissible reductions.  The admissible
// set must match the parents the final expansion iterates.
inline std::pair<std::uint64_t, std::uint64_t> least_parent_hash(const CubicGraph& child,
                                                                 bool parents_need_girth4) {
  std::pair<std::uint64_t, std::uint64_t> best{~0ull, ~0ull};
  for (int e = 0; e < child.edge_count(); ++e) {
    auto red = reduce_edge(child, e);
    if (!red) continue;
    if (vertex_connectivity(*red) != 3) continue;
    if (parents_need_girth4 && girth(*red) < 4) continue;
    auto h = canonical_hash(*red);
    if (h < best) best = h;
  }
  return best;
}

}  // namespace gen_detail


namespace gen_detail {

struct FinalStats {
  long long pairs_total = 0;
  long long pruned_lookahead = 0;
  long long pruned_square = 0;
  long long colorability_tests = 0;
  void add(const FinalStats& o) {
    pairs_total += o.pairs_total;
    pruned_lookahead += o.pruned_lookahead;
    pruned_square += o.pruned_square;
    colorability_tests += o.colorability_tests;
  }
};

// Expand one parent at the final level; accepted children (class members
// surviving look-ahead and ownership) are appended in deterministic order.
inline void final_expand_parent(const CubicGraph& g,
                                std::pair<std::uint64_t, std::uint64_t> parent_hash,
                                const GenerationSpec& spec, FinalStats& stats,
                                std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>,
                                                      CubicGraph>>& out) {
  bool uncolourable_target = spec.cls == CatalogClass::weaksnark ||
                             spec.cls == CatalogClass::snark || spec.cls == CatalogClass::snark5;
  bool girth5_target = spec.cls == CatalogClass::snark || spec.cls == CatalogClass::snark5;
  if (girth5_target && girth(g) < 4) return;  // snarks reduce to girth>=4 parents
  int m = g.edge_count();

  Lookahead la;
  bool colourable = false;
  if (uncolourable_target) {
    auto colorings = derive_colorings(g);
    colourable = !colorings.empty();
    if (colourable) la.build(g, colorings);
  }
  std::array<VertexMask, kMaxE> ends_mask;
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edge_ends(e);
    ends_mask[e] = bit(u) | bit(v);
  }
  for (int e1 = 0; e1 < m; ++e1)
    for (int e2 = e1 + 1; e2 < m; ++e2) {
      if (uncolourable_target) {
        if (ends_mask[e1] & ends_mask[e2]) continue;  // triangles are never girth >= 4
        ++stats.pairs_total;
        if (colourable) {
          if (la.pair_forbidden(e1, e2)) {
            ++stats.pruned_lookahead;
            continue;
          }
          auto [a, b] = g.edge_ends(e1);
          auto [c, d] = g.edge_ends(e2);
          if ((g.adjacency_mask(a) | g.adjacency_mask(b)) & (bit(c) | bit(d))) {
            ++stats.pruned_square;
            continue;
          }
        }
      } else {
        ++stats.pairs_total;
      }
      CubicGraph child = insert_edge(g, e1, e2);
      if (uncolourable_target) {
        ++stats.colorability_tests;
        if (is_colourable(child)) continue;
      }
      if (!catalog_class_accepts(spec.cls, child)) continue;
      if (spec.shard_count > 1 &&
          gen_detail::least_parent_hash(child, girth5_target) != parent_hash)
        continue;
      out.push_back({canonical_hash(child), child});
    }
}

}  // namespace gen_detail

// Final-level expansion of one parent level into the requested class.
inline GenerationResult final_expansion(const ParentLevel& parents, const GenerationSpec& spec,
                                        const std::function<void(size_t, size_t)>& progress = {},
                                        int workers = 1) {
  auto t0 = std::chrono::steady_clock::now();
  GenerationResult res;
  CodeSet seen(1024);
  std::vector<std::pair<CanonicalCode, CubicGraph>> out;
  const size_t chunk_size = 2048;
  size_t nchunks = (parents.size() + chunk_size - 1) / chunk_size;
  if (workers < 1) workers = 1;
  for (size_t base = 0; base < nchunks; base += (size_t)workers) {
    size_t batch = std::min((size_t)workers, nchunks - base);
    std::vector<gen_detail::FinalStats> stats(batch);
    std::vector<std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, CubicGraph>>>
        found(batch);
    auto run_chunk = [&](size_t b) {
      size_t lo = (base + b) * chunk_size;
      size_t hi = std::min(parents.size(), lo + chunk_size);
      for (size_t idx = lo; idx < hi; ++idx) {
        if (spec.shard_count > 1 &&
            (long long)(parents.hashes[idx].first % (std::uint64_t)spec.shard_count) !=
                spec.shard_index)
          continue;
        gen_detail::final_expand_parent(parents.get(idx), parents.hashes[idx], spec, stats[b],
                                        found[b]);
      }
    };
    if (batch == 1) {
      run_chunk(0);
    } else {
      std::vector<std::thread> pool;
      for (size_t b = 0; b < batch; ++b) pool.emplace_back(run_chunk, b);
      for (auto& t : pool) t.join();
    }
    for (size_t b = 0; b < batch; ++b) {
      res.pairs_total += stats[b].pairs_total;
      res.pairs_pruned_lookahead += stats[b].pruned_lookahead;
      res.pairs_pruned_square += stats[b].pruned_square;
      res.colorability_tests += stats[b].colorability_tests;
      for (auto& [h, child] : found[b])
        if (seen.insert(h)) out.push_back({canonical_code(child), child});
    }
    if (progress) progress(std::min(parents.size(), (base + batch) * chunk_size), parents.size());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [code, g] : out) res.graphs.push_back(g);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

// ---------------------------------------------------------------------------
// File-backed variants for orders whose parent level exceeds memory: the
// expansion streams accepted children to a graph6 file (dedup hashes stay in
// memory) and the final expansion reads parents back one line at a time.

inline size_t expand_level_to_file(const ParentLevel& parents, const std::string& path,
                                   std::size_t expected_children = 1 << 20,
                                   const std::function<void(size_t, size_t)>& progress = {},
                                   int workers = 1) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  CodeSet seen(expected_children);
  size_t written = 0;
  int n = parents.order + 2;
  gen_detail::expand_level_engine(
      parents, seen, workers, progress,
      [&](std::pair<std::uint64_t, std::uint64_t>, const std::uint8_t* rows) {
        // graph6 written inline from the packed neighbor rows
        std::string line;
        line.push_back((char)(n + 63));
        int acc = 0, nbits = 0;
        for (int j = 1; j < n; ++j)
          for (int i = 0; i < j; ++i) {
            bool adj = rows[3 * i] == j || rows[3 * i + 1] == j || rows[3 * i + 2] == j;
            acc = acc << 1 | (adj ? 1 : 0);
            if (++nbits == 6) {
              line.push_back((char)(acc + 63));
              acc = 0;
              nbits = 0;
            }
          }
        if (nbits) line.push_back((char)((acc << (6 - nbits)) + 63));
        out << line << '\n';
        ++written;
      });
  return written;
}

// Stream parents from a graph6 file through the final class expansion.
// Sharding by parent hash recomputes the hash per line; with one shard the
// hash is skipped.
inline GenerationResult final_expansion_stream(const std::string& parents_path, int parent_order,
                                               const GenerationSpec& spec,
                                               const std::function<void(size_t)>& progress = {},
                                               int workers = 1) {
  std::ifstream in(parents_path);
  if (!in) throw std::runtime_error("cannot open " + parents_path);
  auto t0 = std::chrono::steady_clock::now();
  GenerationResult res;
  CodeSet seen(1024);
  std::vector<std::pair<CanonicalCode, CubicGraph>> out;
  if (workers < 1) workers = 1;
  const size_t chunk_size = 4096;
  std::string line;
  size_t processed = 0;
  bool eof = false;
  while (!eof) {
    // read one batch of parent graphs
    std::vector<CubicGraph> batch_graphs;
    batch_graphs.reserve(chunk_size * (size_t)workers);
    while (batch_graphs.size() < chunk_size * (size_t)workers) {
      if (!std::getline(in, line)) {
        eof = true;
        break;
      }
      if (line.empty()) continue;
      int n = (int)(unsigned char)line[0] - 63;
      if (n != parent_order) throw std::runtime_error("parent order mismatch in " + parents_path);
      std::array<std::array<std::uint8_t, 3>, kMaxN> rows{};
      std::array<std::uint8_t, kMaxN> deg{};
      int pos = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
          int byte = (int)(unsigned char)line[1 + pos / 6] - 63;
          if ((byte >> (5 - pos % 6)) & 1) {
            rows[i][deg[i]++] = (std::uint8_t)j;
            rows[j][deg[j]++] = (std::uint8_t)i;
          }
          ++pos;
        }
      batch_graphs.push_back(gen_detail::from_rows_fast(n, rows));
    }
    if (batch_graphs.empty()) break;
    size_t nchunks = (batch_graphs.size() + chunk_size - 1) / chunk_size;
    std::vector<gen_detail::FinalStats> stats(nchunks);
    std::vector<std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, CubicGraph>>>
        found(nchunks);
    auto run_chunk = [&](size_t b) {
      size_t lo = b * chunk_size;
      size_t hi = std::min(batch_graphs.size(), lo + chunk_size);
      for (size_t idx = lo; idx < hi; ++idx) {
        const CubicGraph& g = batch_graphs[idx];
        std::pair<std::uint64_t, std::uint64_t> parent_hash{0, 0};
        if (spec.shard_count > 1) {
          parent_hash = canonical_hash(g);
          if ((long long)(parent_hash.first % (std::uint64_t)spec.shard_count) !=
              spec.shard_index)
            continue;
        }
        gen_detail::final_expand_parent(g, parent_hash, spec, stats[b], found[b]);
      }
    };
    if (nchunks == 1) {
      run_chunk(0);
    } else {
      std::vector<std::thread> pool;
      for (size_t b = 0; b < nchunks; ++b) pool.emplace_back(run_chunk, b);
      for (auto& t : pool) t.join();
    }
    for (size_t b = 0; b < nchunks; ++b) {
      res.pairs_total += stats[b].pairs_total;
      res.pairs_pruned_lookahead += stats[b].pruned_lookahead;
      res.pairs_pruned_square += stats[b].pruned_square;
      res.colorability_tests += stats[b].colorability_tests;
      for (auto& [h, child] : found[b])
        if (seen.insert(h)) out.push_back({canonical_code(child), child});
    }
    processed += batch_graphs.size();
    if (progress) progress(processed);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [code, g] : out) res.graphs.push_back(g);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

// Full catalog generation from K4, building intermediate levels in memory.
inline GenerationResult generate_catalog(const GenerationSpec& spec,
                                         const std::function<void(const std::string&)>& log = {},
                                         int workers = 1) {
  if (spec.target_order < 4 || spec.target_order % 2)
    throw std::invalid_argument("target order must be even and at least 4");
  if (spec.target_order > 26)
    throw std::invalid_argument("target orders beyond 26 are not supported");
  auto t0 = std::chrono::steady_clock::now();
  ParentLevel level = ParentLevel::seed();
  if (spec.target_order == 4) {
    GenerationResult res;
    auto g = k4();
    if (catalog_class_accepts(spec.cls, g) && spec.shard_index == 0) res.graphs.push_back(g);
    return res;
  }
  // parent levels through order 22 fit comfortably in memory; order 24 (the
  // parent level of a 26-vertex run) is staged on disk
  constexpr int kMaxInMemoryParentOrder = 22;
  while (level.order + 2 < spec.target_order && level.order < kMaxInMemoryParentOrder) {
    level = expand_level_full(level, {}, workers);
    if (log)
      log("level " + std::to_string(level.order) + ": " + std::to_string(level.size()) +
          " graphs");
  }
  GenerationResult res;
  if (level.order + 2 == spec.target_order) {
    res = final_expansion(level, spec, {}, workers);
  } else {
    std::string dir = spec.work_dir.empty()
                          ? std::filesystem::temp_directory_path().string()
                          : spec.work_dir;
    std::string path = dir;
    int order = level.order;
    while (order + 2 < spec.target_order) {
      path = dir + "/level-" + std::to_string(order + 2) + ".g6";
      size_t count = expand_level_to_file(level, path, (size_t)level.size() * 18 + 64, {}, workers);
      if (log) log("level " + std::to_string(order + 2) + ": " + std::to_string(count) +
                   " graphs (on disk)");
      order += 2;
      if (order + 2 < spec.target_order)
        throw std::runtime_error("orders beyond 26 are not supported targets");
      level = ParentLevel();  // free memory before the streaming pass
    }
    res = final_expansion_stream(path, order, spec, {}, workers);
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace snark
