// Canonical forms for isomorphism rejection, plus automorphism groups and
// vertex transitivity.
//
// canonical_code produces a relabel-invariant byte string: two graphs have
// equal codes iff they are isomorphic (validated against brute-force
// permutation search in the tests).  The labeling is found by partition
// refinement on a distance-profile invariant followed by
// individualization-refinement search over the first non-singleton cell,
// keeping the lexicographically smallest relabeled adjacency over all leaves.
// Automorphisms discovered as equal-code leaves prune the root cell by
// orbits.

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <vector>

#include "snark/core.hpp"

namespace snark {

struct CanonicalCode {
  std::uint8_t order = 0;
  std::array<std::uint8_t, 1 + (kMaxN * (kMaxN - 1) / 2 + 7) / 8> bytes{};
  int len = 0;

  bool operator==(const CanonicalCode& o) const {
    return len == o.len && std::memcmp(bytes.data(), o.bytes.data(), len) == 0;
  }
  bool operator<(const CanonicalCode& o) const {
    int c = std::memcmp(bytes.data(), o.bytes.data(), std::min(len, o.len));
    return c < 0 || (c == 0 && len < o.len);
  }
  std::vector<std::uint8_t> as_bytes() const {
    return std::vector<std::uint8_t>(bytes.begin(), bytes.begin() + len);
  }
};

namespace canon_detail {

struct Refiner {
  const CubicGraph* g = nullptr;
  int n = 0;
  std::array<std::uint16_t, kMaxN> color;      // current coloring
  std::array<std::uint16_t, kMaxN> cell_size;  // per color id

  void count_cells() {
    cell_size.fill(0);
    for (int v = 0; v < n; ++v) ++cell_size[color[v]];
  }

  // 1-WL refinement with invariant renumbering (cells ordered by signature).
  void refine() {
    std::array<std::uint64_t, kMaxN> sig;
    std::array<std::uint16_t, kMaxN> order;
    for (;;) {
      for (int v = 0; v < n; ++v) {
        const auto& nb = g->neighbors(v);
        std::uint64_t a = color[nb[0]], b = color[nb[1]], c = color[nb[2]];
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        sig[v] = (std::uint64_t)color[v] << 24 | a << 16 | b << 8 | c;
      }
      for (int v = 0; v < n; ++v) order[v] = (std::uint16_t)v;
      std::sort(order.begin(), order.begin() + n,
                [&](int x, int y) { return sig[x] < sig[y]; });
      int ncolors = 0;
      std::array<std::uint16_t, kMaxN> next;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++ncolors;
        next[order[i]] = (std::uint16_t)ncolors;
      }
      bool changed = false;
      for (int v = 0; v < n; ++v)
        if (next[v] != color[v]) { changed = true; break; }
      color = next;
      if (!changed) break;
    }
    count_cells();
  }

  bool discrete() const {
    for (int v = 0; v < n; ++v)
      if (cell_size[color[v]] != 1) return false;
    return true;
  }

  int first_nonsingleton_color() const {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (cell_size[color[v]] > 1 && (best < 0 || color[v] < best)) best = color[v];
    return best;
  }
};

// distance profile invariant: hashed BFS level sizes from each vertex
inline void initial_colors(const CubicGraph& g, std::array<std::uint16_t, kMaxN>& color) {
  int n = g.order();
  std::array<std::uint64_t, kMaxN> inv;
  for (int v = 0; v < n; ++v) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    VertexMask seen = bit(v), frontier = bit(v);
    while (frontier) {
      VertexMask next = 0;
      VertexMask f = frontier;
      while (f) {
        int u = lowest_bit(f);
        f &= f - 1;
        next |= g.adjacency_mask(u);
      }
      frontier = next & ~seen;
      seen |= next;
      h = (h ^ (std::uint64_t)popcount(frontier)) * 0x100000001b3ull;
    }
    inv[v] = h;
  }
  std::array<std::uint16_t, kMaxN> order;
  for (int v = 0; v < n; ++v) order[v] = (std::uint16_t)v;
  std::sort(order.begin(), order.begin() + n, [&](int x, int y) { return inv[x] < inv[y]; });
  int c = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && inv[order[i]] != inv[order[i - 1]]) ++c;
    color[order[i]] = (std::uint16_t)c;
  }
}

struct UnionFind {
  std::array<std::int16_t, kMaxN> parent;
  void init(int n) {
    for (int i = 0; i < n; ++i) parent[i] = (std::int16_t)i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = (std::int16_t)find(b); }
};

struct CanonSearch {
  const CubicGraph* g = nullptr;
  int n = 0;
  bool have_best = false;
  std::array<std::uint8_t, kMaxN> best_inv;   // position -> vertex of best leaf
  std::array<std::uint8_t, kMaxN> leaf_inv;
  UnionFind root_orbits;

  // -1: candidate smaller (new best), 0: equal, 1: larger
  int compare_leaf(const Refiner& r) {
    for (int v = 0; v < n; ++v) leaf_inv[r.color[v]] = (std::uint8_t)v;
    if (!have_best) return -1;
    for (int i = 0; i < n; ++i) {
      VertexMask row_new = 0, row_best = 0;
      // relabeled adjacency row i restricted to columns > i
      VertexMask mask_new = g->adjacency_mask(leaf_inv[i]);
      VertexMask mask_best = g->adjacency_mask(best_inv[i]);
      for (int j = i + 1; j < n; ++j) {
        row_new = row_new << 1 | ((mask_new >> leaf_inv[j]) & 1);
        row_best = row_best << 1 | ((mask_best >> best_inv[j]) & 1);
        if (j - i == 63) break;  // n<=62 keeps rows within one word
      }
      if (row_new != row_best) return row_new < row_best ? -1 : 1;
    }
    return 0;
  }

  void search(Refiner& r, int depth) {
    if (r.discrete()) {
      int cmp = compare_leaf(r);
      if (cmp < 0) {
        best_inv = leaf_inv;
        have_best = true;
      } else if (cmp == 0) {
        // equal leaves give an automorphism
        for (int i = 0; i < n; ++i) root_orbits.unite(best_inv[i], leaf_inv[i]);
      }
      return;
    }
    int cell = r.first_nonsingleton_color();
    std::array<std::uint8_t, kMaxN> members;
    int count = 0;
    for (int v = 0; v < n; ++v)
      if (r.color[v] == cell) members[count++] = (std::uint8_t)v;

    std::array<std::int16_t, kMaxN> tried{};
    int tried_count = 0;
    for (int idx = 0; idx < count; ++idx) {
      int v = members[idx];
      if (depth == 0) {
        bool skip = false;
        for (int t = 0; t < tried_count && !skip; ++t)
          if (root_orbits.find(v) == root_orbits.find(tried[t])) skip = true;
        if (skip) continue;
        tried[tried_count++] = (std::int16_t)v;
      }
      Refiner child = r;
      for (int u = 0; u < n; ++u)
        child.color[u] = (std::uint16_t)(2 * child.color[u] + (u == v ? 0 : 1));
      child.refine();  // renumbers compactly and invariantly
      search(child, depth + 1);
    }
  }
};

}  // namespace canon_detail

// Canonical relabeling: returns inv (position -> vertex).
inline std::array<std::uint8_t, kMaxN> canonical_labeling(const CubicGraph& g) {
  canon_detail::Refiner r;
  r.g = &g;
  r.n = g.order();
  canon_detail::initial_colors(g, r.color);
  r.refine();
  canon_detail::CanonSearch s;
  s.g = &g;
  s.n = g.order();
  s.root_orbits.init(g.order());
  s.search(r, 0);
  return s.best_inv;
}

inline CanonicalCode canonical_code(const CubicGraph& g) {
  auto inv = canonical_labeling(g);
  int n = g.order();
  CanonicalCode code;
  code.order = (std::uint8_t)n;
  code.bytes[0] = (std::uint8_t)n;
  int pos = 8;  // bit position, byte 0 holds the order
  for (int i = 0; i < n; ++i) {
    VertexMask mask = g.adjacency_mask(inv[i]);
    for (int j = i + 1; j < n; ++j) {
      if ((mask >> inv[j]) & 1) code.bytes[pos >> 3] |= (std::uint8_t)(1 << (7 - (pos & 7)));
      ++pos;
    }
  }
  code.len = (pos + 7) / 8;
  return code;
}

inline bool are_isomorphic(const CubicGraph& a, const CubicGraph& b) {
  if (a.order() != b.order()) return false;
  return canonical_code(a) == canonical_code(b);
}

// 128-bit hash of the canonical adjacency, for dedup sets.
inline std::pair<std::uint64_t, std::uint64_t> canonical_hash(const CubicGraph& g) {
  auto inv = canonical_labeling(g);
  int n = g.order();
  std::uint64_t h1 = 0x243f6a8885a308d3ull ^ (std::uint64_t)n;
  std::uint64_t h2 = 0x13198a2e03707344ull + (std::uint64_t)n;
  for (int i = 0; i < n; ++i) {
    VertexMask mask = g.adjacency_mask(inv[i]);
    std::uint64_t row = 0;
    for (int j = i + 1; j < n; ++j) row = row << 1 | ((mask >> inv[j]) & 1);
    h1 = (h1 ^ row) * 0x9e3779b97f4a7c15ull;
    h1 ^= h1 >> 29;
    h2 = (h2 + row) * 0xc2b2ae3d27d4eb4full;
    h2 ^= h2 >> 31;
  }
  return {h1, h2};
}

// ---------------------------------------------------------------------------
// Automorphisms by explicit backtracking over color-preserving maps.

inline std::vector<std::array<std::uint8_t, kMaxN>> automorphisms(const CubicGraph& g) {
  int n = g.order();
  canon_detail::Refiner r;
  r.g = &g;
  r.n = n;
  canon_detail::initial_colors(g, r.color);
  r.refine();

  std::vector<std::array<std::uint8_t, kMaxN>> result;
  std::array<std::int16_t, kMaxN> image;
  image.fill(-1);
  VertexMask used = 0;

  // map vertices in a fixed order; candidate images share the refined color
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      std::array<std::uint8_t, kMaxN> perm{};
      for (int i = 0; i < n; ++i) perm[i] = (std::uint8_t)image[i];
      result.push_back(perm);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1) continue;
      if (r.color[w] != r.color[v]) continue;
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        int u = g.neighbors(v)[i];
        if (image[u] >= 0 && !g.has_edge(image[u], w)) ok = false;
      }
      if (!ok) continue;
      image[v] = (std::int16_t)w;
      used |= bit(w);
      self(self, v + 1);
      used &= ~bit(w);
      image[v] = -1;
    }
  };
  rec(rec, 0);
  return result;
}

inline long long automorphism_count(const CubicGraph& g) {
  return (long long)automorphisms(g).size();
}

inline std::vector<int> vertex_orbits(const CubicGraph& g) {
  canon_detail::UnionFind uf;
  uf.init(g.order());
  for (const auto& perm : automorphisms(g))
    for (int v = 0; v < g.order(); ++v) uf.unite(v, perm[v]);
  std::vector<int> orbit(g.order());
  for (int v = 0; v < g.order(); ++v) orbit[v] = uf.find(v);
  return orbit;
}

inline bool is_vertex_transitive(const CubicGraph& g) {
  auto orbit = vertex_orbits(g);
  for (int v = 1; v < g.order(); ++v)
    if (orbit[v] != orbit[0]) return false;
  return true;
}

}  // namespace snark
