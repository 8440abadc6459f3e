#pragma once

// Non-symmetry graph invariants: distances, cliques, cut vertices,
// bipartiteness, Euler's criterion, distance regularity and cycle structure.

#include <qgl/error.hpp>
#include <qgl/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qgl {

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n * n), 0) {}

  int order() const noexcept { return n_; }
  int operator()(int u, int v) const noexcept { return d_[index(u, v)]; }
  int& at(int u, int v) noexcept { return d_[index(u, v)]; }

  int max_entry() const noexcept { return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end()); }

 private:
  std::size_t index(int u, int v) const noexcept { return static_cast<std::size_t>(u * n_ + v); }
  int n_ = 0;
  std::vector<int> d_;
};

inline void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw Error(Errc::disconnected_graph, std::string(what) + " needs a connected graph");
}

/// Breadth-first layers from every vertex.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  require_connected(g, "all_pairs_distances");
  const int n = g.order();
  DistanceMatrix d(n);
  for (int s = 0; s < n; ++s) {
    VertexMask seen = static_cast<VertexMask>(1u << s);
    VertexMask layer = seen;
    for (int dist = 1; layer; ++dist) {
      VertexMask next = 0;
      for (VertexMask m = layer; m; m &= static_cast<VertexMask>(m - 1)) next |= g.neighbors(std::countr_zero(m));
      next &= static_cast<VertexMask>(~seen);
      for (VertexMask m = next; m; m &= static_cast<VertexMask>(m - 1)) d.at(s, std::countr_zero(m)) = dist;
      seen |= next;
      layer = next;
    }
  }
  return d;
}

inline int diameter(const Graph& g) { return all_pairs_distances(g).max_entry(); }

namespace structure_detail {

inline void grow_clique(const Graph& g, int size, VertexMask candidates, int& best) {
  if (!candidates) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + std::popcount(candidates) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= static_cast<VertexMask>(candidates - 1);
    grow_clique(g, size + 1, static_cast<VertexMask>(candidates & g.neighbors(v)), best);
  }
}

}  // namespace structure_detail

/// Branch and bound over candidate masks, cut when the clique so far plus
/// every remaining candidate cannot beat the incumbent.
inline int clique_number(const Graph& g) {
  int best = 0;
  structure_detail::grow_clique(g, 0, g.all_vertices(), best);
  return best;
}

namespace structure_detail {

struct LowpointState {
  const Graph* g;
  std::array<int, kMaxVertices> disc{};
  std::array<int, kMaxVertices> low{};
  VertexMask cut = 0;
  int clock = 0;

  void visit(int v, int parent) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = ++clock;
    int children = 0;
    for (VertexMask m = g->neighbors(v); m; m &= static_cast<VertexMask>(m - 1)) {
      const int w = std::countr_zero(m);
      if (disc[static_cast<std::size_t>(w)] == 0) {
        ++children;
        visit(w, v);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (parent >= 0 && low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) {
          cut |= static_cast<VertexMask>(1u << v);
        }
      } else if (w != parent) {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
      }
    }
    if (parent < 0 && children > 1) cut |= static_cast<VertexMask>(1u << v);
  }
};

}  // namespace structure_detail

/// Articulation points by depth-first lowpoints, ascending.
inline std::vector<int> cut_vertices(const Graph& g) {
  require_connected(g, "cut_vertices");
  std::vector<int> out;
  if (g.order() == 0) return out;
  structure_detail::LowpointState state{&g};
  state.visit(0, -1);
  for (int v = 0; v < g.order(); ++v) {
    if ((state.cut >> v) & 1) out.push_back(v);
  }
  return out;
}

inline bool bipartite_test(const Graph& g) {
  const int n = g.order();
  std::array<int, kMaxVertices> side{};
  side.fill(-1);
  std::array<int, kMaxVertices> queue{};
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    int head = 0;
    int tail = 0;
    queue[static_cast<std::size_t>(tail++)] = s;
    while (head < tail) {
      const int u = queue[static_cast<std::size_t>(head++)];
      for (VertexMask m = g.neighbors(u); m; m &= static_cast<VertexMask>(m - 1)) {
        const int w = std::countr_zero(m);
        if (side[static_cast<std::size_t>(w)] < 0) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(u)];
          queue[static_cast<std::size_t>(tail++)] = w;
        } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Euler's criterion: connected with every degree even.
inline bool eulerian_test(const Graph& g) {
  if (!is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return true;
}

enum class DistanceRegularity {
  /// Every vertex has the same count of vertices at each distance.
  layered,
  /// Intersection numbers depend only on the distance.
  strict,
};

inline bool distance_regular_test(const Graph& g, DistanceRegularity mode) {
  const DistanceMatrix d = all_pairs_distances(g);
  const int n = g.order();
  const int diam = d.max_entry();
  if (mode == DistanceRegularity::layered) {
    std::vector<int> reference;
    for (int v = 0; v < n; ++v) {
      std::vector<int> layer_sizes(static_cast<std::size_t>(diam) + 1, 0);
      for (int u = 0; u < n; ++u) ++layer_sizes[static_cast<std::size_t>(d(v, u))];
      if (v == 0) {
        reference = std::move(layer_sizes);
      } else if (layer_sizes != reference) {
        return false;
      }
    }
    return true;
  }
  // (c_i, a_i, b_i) for each distance i, fixed by the first pair seen.
  std::vector<std::array<int, 3>> numbers(static_cast<std::size_t>(diam) + 1, {-1, -1, -1});
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int i = d(u, v);
      std::array<int, 3> counts{0, 0, 0};
      for (VertexMask m = g.neighbors(v); m; m &= static_cast<VertexMask>(m - 1)) {
        const int dw = d(u, std::countr_zero(m));
        ++counts[static_cast<std::size_t>(dw - i + 1)];
      }
      auto& expected = numbers[static_cast<std::size_t>(i)];
      if (expected[0] < 0) {
        expected = counts;
      } else if (expected != counts) {
        return false;
      }
    }
  }
  return true;
}

/// A closed walk without repeated vertices, listed from its smallest vertex.
using Cycle = std::vector<int>;

struct CycleCensus {
  /// Every simple cycle exactly once, in discovery order.
  std::vector<Cycle> cycles;
  /// counts[k] = number of simple cycles of length k (index 0..n).
  std::vector<int> counts;
};

/// Exhaustive depth-first enumeration: each cycle is rooted at its minimum
/// vertex and kept only in the direction whose second vertex is smaller than
/// its last.
inline CycleCensus cycle_census(const Graph& g) {
  const int n = g.order();
  CycleCensus census;
  census.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  Cycle path;
  auto extend = [&](auto&& self, int root, int v, VertexMask on_path) -> void {
    for (VertexMask m = g.neighbors(v); m; m &= static_cast<VertexMask>(m - 1)) {
      const int w = std::countr_zero(m);
      if (w == root && path.size() >= 3 && path[1] < path.back()) {
        census.cycles.push_back(path);
        ++census.counts[path.size()];
      }
      if (w <= root || ((on_path >> w) & 1)) continue;
      path.push_back(w);
      self(self, root, w, static_cast<VertexMask>(on_path | (1u << w)));
      path.pop_back();
    }
  };
  for (int root = 0; root < n; ++root) {
    path.assign(1, root);
    extend(extend, root, root, static_cast<VertexMask>(1u << root));
  }
  return census;
}

/// Fundamental cycles of the stack-driven spanning tree grown from vertex 0
/// (neighbours scanned in ascending order, newest vertex expanded first).
/// Each cycle is the vertex sequence closing a non-tree edge; later
/// components are rooted at their largest vertex.
inline std::vector<Cycle> cycle_basis(const Graph& g) {
  const int n = g.order();
  std::vector<Cycle> basis;
  std::array<int, kMaxVertices> pred{};
  std::array<VertexMask, kMaxVertices> used{};
  VertexMask visited = 0;
  int root = 0;
  while (visited != g.all_vertices()) {
    std::vector<int> stack{root};
    pred[static_cast<std::size_t>(root)] = root;
    used[static_cast<std::size_t>(root)] = 0;
    visited |= static_cast<VertexMask>(1u << root);
    while (!stack.empty()) {
      const int z = stack.back();
      stack.pop_back();
      for (VertexMask m = g.neighbors(z); m; m &= static_cast<VertexMask>(m - 1)) {
        const int nbr = std::countr_zero(m);
        if (!((visited >> nbr) & 1)) {
          pred[static_cast<std::size_t>(nbr)] = z;
          stack.push_back(nbr);
          used[static_cast<std::size_t>(nbr)] = static_cast<VertexMask>(1u << z);
          visited |= static_cast<VertexMask>(1u << nbr);
        } else if (!((used[static_cast<std::size_t>(z)] >> nbr) & 1)) {
          const VertexMask nbr_used = used[static_cast<std::size_t>(nbr)];
          Cycle cycle{nbr, z};
          int p = pred[static_cast<std::size_t>(z)];
          while (!((nbr_used >> p) & 1)) {
            cycle.push_back(p);
            p = pred[static_cast<std::size_t>(p)];
          }
          cycle.push_back(p);
          basis.push_back(std::move(cycle));
          used[static_cast<std::size_t>(nbr)] |= static_cast<VertexMask>(1u << z);
        }
      }
    }
    for (int v = n - 1; v >= 0; --v) {
      if (!((visited >> v) & 1)) {
        root = v;
        break;
      }
    }
  }
  return basis;
}

/// Count of simple cycles whose length is the odd girth; 0 when bipartite.
inline int min_odd_cycle_count(const CycleCensus& census) {
  for (std::size_t k = 3; k < census.counts.size(); k += 2) {
    if (census.counts[k] > 0) return census.counts[k];
  }
  return 0;
}

inline int odd_cycle_count(const std::vector<Cycle>& cycles) {
  return static_cast<int>(std::count_if(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.size() % 2 == 1; }));
}

/// Edges of a cycle in traversal order, closing edge last.
inline std::vector<Edge> cycle_edges(const Cycle& cycle) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    out.push_back({cycle[i], cycle[(i + 1) % cycle.size()]});
  }
  return out;
}

struct StructureProfile {
  int edges = 0;
  int diameter = 0;
  int clique_number = 0;
  bool bipartite = false;
  bool eulerian = false;
  bool distance_regular_layered = false;
  bool distance_regular_strict = false;
  std::vector<int> cut_vertices;
  int cut_vertex_count = 0;
  std::vector<int> degree_sequence;
  /// cycle_counts[k] for k = 0..n; entries below 3 are always zero.
  std::vector<int> cycle_counts;
  std::vector<Cycle> cycle_basis;
  /// Shortest odd cycles (odd girth count); label-independent.
  int min_odd_cycle_count = 0;
  /// Odd cycles among cycle_basis; depends on the vertex labeling.
  int basis_odd_cycle_count = 0;

  friend bool operator==(const StructureProfile&, const StructureProfile&) = default;
};

inline StructureProfile structure_profile(const Graph& g) {
  require_connected(g, "structure_profile");
  if (g.order() > 8) throw Error(Errc::unsupported_size, "cycle census supports n <= 8");
  StructureProfile p;
  p.edges = g.edge_count();
  p.diameter = diameter(g);
  p.clique_number = clique_number(g);
  p.bipartite = bipartite_test(g);
  p.eulerian = eulerian_test(g);
  p.distance_regular_layered = distance_regular_test(g, DistanceRegularity::layered);
  p.distance_regular_strict = distance_regular_test(g, DistanceRegularity::strict);
  p.cut_vertices = cut_vertices(g);
  p.cut_vertex_count = static_cast<int>(p.cut_vertices.size());
  p.degree_sequence = degree_sequence(g);
  const CycleCensus census = cycle_census(g);
  p.cycle_counts = census.counts;
  p.cycle_basis = cycle_basis(g);
  p.min_odd_cycle_count = min_odd_cycle_count(census);
  p.basis_odd_cycle_count = odd_cycle_count(p.cycle_basis);
  return p;
}

}  // namespace qgl
