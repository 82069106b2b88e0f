// Parsing and serialization: the appendix upper-adjacency format and graph6,
// plus the built-in fixture registry.
//
// Upper-adjacency format: a braces-and-commas list of integers; vertices are
// implicitly numbered from 1 and each vertex's higher-numbered neighbors are
// listed in sequence.  There are no per-vertex delimiters: a vertex's list
// ends exactly when its total degree (counting previously assigned
// lower-numbered neighbors) reaches 3.

#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "snark/core.hpp"
#include "snark/fixture_data.hpp"

namespace snark {

struct CodecError : std::runtime_error {
  explicit CodecError(const std::string& msg) : std::runtime_error(msg) {}
};

inline CubicGraph parse_upper_adjacency(const std::string& text) {
  std::vector<int> tokens;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isdigit((unsigned char)c)) {
      int x = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i]))
        x = x * 10 + (text[i++] - '0');
      tokens.push_back(x);
    } else if (c == '{' || c == '}' || c == ',' || c == '\\' ||
               std::isspace((unsigned char)c)) {
      ++i;
    } else {
      throw CodecError(std::string("unexpected character '") + c + "' in adjacency text");
    }
  }
  if (tokens.size() % 3 != 0) throw CodecError("token count is not a multiple of 3");
  int n = (int)(2 * tokens.size() / 3);
  if (n < 4) throw CodecError("too few tokens for a cubic graph");
  std::vector<int> deg(n + 1, 0);
  std::vector<std::vector<int>> lists(n);
  int v = 1;
  for (int x : tokens) {
    while (v <= n && deg[v] == 3) ++v;
    if (v > n) throw CodecError("tokens remain after all degrees reached 3");
    if (x <= v) throw CodecError("neighbor " + std::to_string(x) +
                                 " is not higher-numbered than vertex " + std::to_string(v));
    if (x > n) throw CodecError("neighbor exceeds implied order");
    for (int w : lists[v - 1])
      if (w == x - 1) throw CodecError("duplicate edge in adjacency text");
    if (deg[x] >= 3)
      throw CodecError("vertex " + std::to_string(x) + " exceeds degree 3");
    lists[v - 1].push_back(x - 1);
    lists[x - 1].push_back(v - 1);
    ++deg[v];
    ++deg[x];
  }
  for (int u = 1; u <= n; ++u)
    if (deg[u] != 3)
      throw CodecError("vertex " + std::to_string(u) + " ends with degree " +
                       std::to_string(deg[u]));
  return CubicGraph::from_lists(n, lists);
}

inline std::string emit_upper_adjacency(const CubicGraph& g) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v = 0; v < g.order(); ++v)
    for (int i = 0; i < 3; ++i) {
      int w = g.neighbors(v)[i];
      if (w <= v) continue;
      if (!first) out << ", ";
      out << (w + 1);
      first = false;
    }
  out << '}';
  return out.str();
}

// ---------------------------------------------------------------------------
// graph6: header byte n+63, then the upper triangle column-major in pairs
// (0,1),(0,2),(1,2),(0,3),..., packed in 6-bit groups each offset by 63.

inline std::string graph6_encode(const CubicGraph& g) {
  int n = g.order();
  std::string out;
  out.push_back((char)(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back((char)(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back((char)((acc << (6 - nbits)) + 63));
  return out;
}

inline CubicGraph graph6_decode(const std::string& line, bool require_cubic = true) {
  std::string s = line;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw CodecError("empty graph6 line");
  int n = (int)(unsigned char)s[0] - 63;
  if (n < 1 || n > kMaxN) throw CodecError("unsupported graph6 order");
  int need = (n * (n - 1) / 2 + 5) / 6;
  if ((int)s.size() != 1 + need)
    throw CodecError("graph6 length mismatch: expected " + std::to_string(1 + need) +
                     " bytes, got " + std::to_string(s.size()));
  std::vector<std::vector<int>> lists(n);
  int pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int byte = (int)(unsigned char)s[1 + pos / 6] - 63;
      if (byte < 0 || byte > 63) throw CodecError("graph6 byte out of range");
      if ((byte >> (5 - pos % 6)) & 1) {
        lists[i].push_back(j);
        lists[j].push_back(i);
      }
      ++pos;
    }
  if (require_cubic) {
    for (int v = 0; v < n; ++v)
      if (lists[v].size() != 3)
        throw CodecError("decoded graph is not cubic at vertex " + std::to_string(v));
    return CubicGraph::from_lists(n, lists);
  }
  for (int v = 0; v < n; ++v)
    if (lists[v].size() != 3) throw CodecError("decoded graph is not cubic");
  return CubicGraph::from_lists(n, lists);
}

inline std::vector<CubicGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CodecError("cannot open " + path);
  std::vector<CubicGraph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const CodecError& e) {
      throw CodecError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline void write_graph6_file(const std::string& path, const std::vector<CubicGraph>& graphs) {
  std::ofstream out(path);
  if (!out) throw CodecError("cannot open " + path + " for writing");
  for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

// ---------------------------------------------------------------------------
// Fixture registry.

enum class FixtureId {
  petersen,
  appendix_als,
  appendix_stable32,
  appendix_strong34,
  appendix_strong36,
  appendix_no5cdc30,
  appendix_no5cdc36,
  appendix_perm34,
};

inline const char* fixture_name(FixtureId id) {
  switch (id) {
    case FixtureId::petersen: return "petersen";
    case FixtureId::appendix_als: return "appendix-ALS";
    case FixtureId::appendix_stable32: return "appendix-stable32";
    case FixtureId::appendix_strong34: return "appendix-strong34";
    case FixtureId::appendix_strong36: return "appendix-strong36";
    case FixtureId::appendix_no5cdc30: return "appendix-no5cdc30";
    case FixtureId::appendix_no5cdc36: return "appendix-no5cdc36";
    case FixtureId::appendix_perm34: return "appendix-perm34";
  }
  return "?";
}

inline bool fixture_from_name(const std::string& name, FixtureId& out) {
  for (FixtureId id : {FixtureId::petersen, FixtureId::appendix_als, FixtureId::appendix_stable32,
                       FixtureId::appendix_strong34, FixtureId::appendix_strong36,
                       FixtureId::appendix_no5cdc30, FixtureId::appendix_no5cdc36,
                       FixtureId::appendix_perm34}) {
    if (name == fixture_name(id)) {
      out = id;
      return true;
    }
  }
  return false;
}

inline std::vector<CubicGraph> load_fixture(FixtureId id) {
  auto parse_all = [](const std::vector<std::string>& texts) {
    std::vector<CubicGraph> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_upper_adjacency(t));
    return out;
  };
  switch (id) {
    case FixtureId::petersen: return {petersen()};
    case FixtureId::appendix_als: return parse_all(fixture_data::appendix_als());
    case FixtureId::appendix_stable32: return parse_all(fixture_data::appendix_stable32());
    case FixtureId::appendix_strong34: return parse_all(fixture_data::appendix_strong34());
    case FixtureId::appendix_strong36: return parse_all(fixture_data::appendix_strong36());
    case FixtureId::appendix_no5cdc30: return parse_all(fixture_data::appendix_no5cdc30());
    case FixtureId::appendix_no5cdc36: return parse_all(fixture_data::appendix_no5cdc36());
    case FixtureId::appendix_perm34: return parse_all(fixture_data::appendix_perm34());
  }
  throw CodecError("unknown fixture id");
}

}  // namespace snark
