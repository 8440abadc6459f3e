#pragma once

// graph6 text records for graphs on at most 16 vertices (single size byte).
//
// The upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... are packed six
// per byte, most significant bit first, each byte offset by 63.

#include <qgl/error.hpp>
#include <qgl/graph.hpp>

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qgl {

namespace graph6_detail {
inline constexpr int kOffset = 63;
inline constexpr int kMaxByte = 126;

constexpr int data_bytes(int n) { return (n * (n - 1) / 2 + 5) / 6; }
}  // namespace graph6_detail

inline Graph decode_graph6(std::string_view text) {
  using namespace graph6_detail;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::truncated_record, "empty graph6 record");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int byte = static_cast<unsigned char>(text[i]);
    if (byte < kOffset || byte > kMaxByte) {
      throw Error(Errc::malformed_record,
                  "byte " + std::to_string(byte) + " at offset " + std::to_string(i) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kOffset;
  if (n > kMaxVertices) {
    throw Error(Errc::unsupported_size, "graph6 order " + std::to_string(n) + " exceeds 16");
  }
  const int needed = data_bytes(n);
  const int present = static_cast<int>(text.size()) - 1;
  if (present < needed) {
    throw Error(Errc::truncated_record, "expected " + std::to_string(needed) + " data bytes, found " +
                                            std::to_string(present));
  }
  if (present > needed) {
    throw Error(Errc::malformed_record, "trailing bytes after " + std::to_string(needed) + " data bytes");
  }

  Graph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int chunk = static_cast<unsigned char>(text[1 + static_cast<std::size_t>(bit / 6)]) - kOffset;
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::string encode_graph6(const Graph& g) {
  using namespace graph6_detail;
  const int n = g.order();
  if (n > kMaxVertices) throw Error(Errc::unsupported_size, "graph6 order above 16");
  std::string out(1 + static_cast<std::size_t>(data_bytes(n)), static_cast<char>(kOffset));
  out[0] = static_cast<char>(n + kOffset);
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (g.has_edge(u, v)) out[1 + static_cast<std::size_t>(bit / 6)] += static_cast<char>(1 << (5 - bit % 6));
    }
  }
  return out;
}

/// One record per line; blank lines are skipped. Graph ids are the 1-based
/// line positions among records.
inline std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::uint64_t index = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g = decode_graph6(line);
    g.id = ++index;
    graphs.push_back(g);
  }
  return graphs;
}

inline std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path.string());
  return read_graph6(in);
}

inline void write_graph6(std::ostream& out, std::span<const Graph> graphs) {
  for (const Graph& g : graphs) out << encode_graph6(g) << '\n';
}

}  // namespace qgl
