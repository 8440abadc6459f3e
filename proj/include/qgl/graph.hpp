#pragma once

#include <qgl/error.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qgl {

inline constexpr int kMaxVertices = 16;

/// Bit v set <=> vertex v is in the set.
using VertexMask = std::uint16_t;

struct Edge {
  int u = 0;
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 16 vertices stored as neighbour masks.
///
/// Equality compares structure only; `id` is a label carried along for
/// bookkeeping (the 1-based position inside an enumeration).
class Graph {
 public:
  Graph() = default;

  explicit Graph(int order) : n_(order) {
    if (order < 0 || order > kMaxVertices) {
      throw Error(Errc::unsupported_size, "graph order " + std::to_string(order) + " outside 0..16");
    }
  }

  Graph(int order, std::initializer_list<Edge> edges) : Graph(order) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  Graph(int order, std::span<const Edge> edges) : Graph(order) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  int order() const noexcept { return n_; }

  VertexMask all_vertices() const noexcept {
    return static_cast<VertexMask>((1u << n_) - 1u);
  }

  VertexMask neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }

  bool has_edge(int u, int v) const noexcept { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }

  int degree(int v) const noexcept { return std::popcount(neighbors(v)); }

  int edge_count() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (has_edge(u, v)) out.push_back({u, v});
      }
    }
    return out;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[static_cast<std::size_t>(u)] |= static_cast<VertexMask>(1u << v);
    adj_[static_cast<std::size_t>(v)] |= static_cast<VertexMask>(1u << u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[static_cast<std::size_t>(u)] &= static_cast<VertexMask>(~(1u << v));
    adj_[static_cast<std::size_t>(v)] &= static_cast<VertexMask>(~(1u << u));
  }

  std::optional<std::uint64_t> id;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw Error(Errc::parameter, "edge endpoint outside 0.." + std::to_string(n_ - 1));
    }
    if (u == v) throw Error(Errc::parameter, "self-loop at vertex " + std::to_string(u));
  }

  int n_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

/// Image-list permutation: vertex v is sent to perm[v].
using Permutation = std::vector<int>;

inline bool is_permutation_of_order(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::uint32_t seen = 0;
  for (int image : perm) {
    if (image < 0 || image >= n || ((seen >> image) & 1u)) return false;
    seen |= 1u << image;
  }
  return true;
}

/// Moves vertex v to position perm[v]: (u, v) is an edge of the result iff
/// (perm^-1(u), perm^-1(v)) is an edge of g.
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  if (!is_permutation_of_order(perm, g.order())) {
    throw Error(Errc::invalid_permutation, "not a bijection on 0.." + std::to_string(g.order() - 1));
  }
  Graph out(g.order());
  for (const Edge& e : g.edges()) {
    out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  out.id = g.id;
  return out;
}

/// Vertices reachable from `start`.
inline VertexMask reachable_from(const Graph& g, int start, VertexMask allowed) {
  VertexMask seen = static_cast<VertexMask>(1u << start);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= static_cast<VertexMask>(f - 1)) {
      next |= g.neighbors(std::countr_zero(f));
    }
    next &= allowed;
    next &= static_cast<VertexMask>(~seen);
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return reachable_from(g, 0, g.all_vertices()) == g.all_vertices();
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degrees;
  degrees.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

}  // namespace qgl
