#pragma once

// Canonical labeling by exhaustive permutation search.
//
// Vertices are first split by iterated degree refinement (the coarsest
// equitable partition, with cells ordered by their refinement signature).
// Position k of the canonical order may only hold a vertex of the k-th cell,
// and among those labelings the lexicographically smallest upper-triangle
// bit string (graph6 bit order) wins. Cell order is label-independent, so
// two graphs receive the same code iff they are isomorphic.

#include <qgl/graph.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace qgl {

/// Column j holds the bits x(0,j) .. x(j-1,j) with row 0 as the most
/// significant of its j bits, so comparing columns in order compares the
/// upper-triangle bit strings lexicographically.
struct CanonicalCode {
  int n = 0;
  std::array<VertexMask, kMaxVertices> columns{};

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

  std::string bits() const {
    std::string out;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) out.push_back(((columns[static_cast<std::size_t>(j)] >> (j - 1 - i)) & 1) ? '1' : '0');
    }
    return out;
  }

  Graph to_graph() const {
    Graph g(n);
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if ((columns[static_cast<std::size_t>(j)] >> (j - 1 - i)) & 1) g.add_edge(i, j);
      }
    }
    return g;
  }
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.n);
    for (VertexMask col : c.columns) h = h * 1000003u ^ col;
    return h;
  }
};

/// Colour classes of the coarsest equitable partition refining the degree
/// partition. Colours are dense 0..k-1 and ordered by a label-independent
/// signature, so isomorphic vertices in isomorphic graphs get equal colours.
inline std::vector<int> refined_vertex_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  int classes = n > 0 ? 1 : 0;
  for (;;) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.assign(static_cast<std::size_t>(classes) + 1, 0);
      sig[0] = color[static_cast<std::size_t>(v)];
      for (VertexMask m = g.neighbors(v); m; m &= static_cast<VertexMask>(m - 1)) {
        ++sig[1 + static_cast<std::size_t>(color[static_cast<std::size_t>(std::countr_zero(m))])];
      }
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), signature[static_cast<std::size_t>(v)]) -
          distinct.begin());
    }
    const int next = static_cast<int>(distinct.size());
    if (next == classes) break;
    classes = next;
  }
  return color;
}

struct CanonicalLabeling {
  CanonicalCode code;
  /// perm[v] is the canonical position of vertex v.
  Permutation perm;
};

namespace canonical_detail {

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {
    const std::vector<int> color = refined_vertex_classes(g);
    class_of_vertex_ = color;
    slot_class_ = color;
    std::sort(slot_class_.begin(), slot_class_.end());
    best_.n = n_;
    best_.columns.fill(static_cast<VertexMask>(0xFFFF));
    current_.n = n_;
  }

  CanonicalLabeling run() {
    if (n_ == 0) return {CanonicalCode{}, {}};
    descend(0, 0, true);
    best_.columns[0] = 0;
    for (int j = n_; j < kMaxVertices; ++j) best_.columns[static_cast<std::size_t>(j)] = 0;
    Permutation perm(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) perm[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(k)])] = k;
    return {best_, perm};
  }

 private:
  // prefix_tied: slots [0, slot) spell exactly the incumbent's prefix.
  // Otherwise the prefix is strictly smaller (larger ones are cut).
  void descend(int slot, VertexMask used, bool prefix_tied) {
    if (slot == n_) {
      if (!have_leaf_ || !prefix_tied) {
        best_ = current_;
        best_order_ = order_;
        have_leaf_ = true;
        ++updates_;
      }
      return;
    }
    const int wanted = slot_class_[static_cast<std::size_t>(slot)];
    for (int v = 0; v < n_; ++v) {
      if (((used >> v) & 1) || class_of_vertex_[static_cast<std::size_t>(v)] != wanted) continue;
      VertexMask column = 0;
      for (int i = 0; i < slot; ++i) {
        column = static_cast<VertexMask>((column << 1) | (g_.has_edge(order_[static_cast<std::size_t>(i)], v) ? 1 : 0));
      }
      bool child_tied = false;
      if (have_leaf_ && prefix_tied) {
        const VertexMask incumbent = best_.columns[static_cast<std::size_t>(slot)];
        if (column > incumbent) continue;
        child_tied = column == incumbent;
      }
      current_.columns[static_cast<std::size_t>(slot)] = column;
      order_[static_cast<std::size_t>(slot)] = v;
      const std::uint64_t before = updates_;
      descend(slot + 1, static_cast<VertexMask>(used | (1u << v)), child_tied);
      // A new incumbent found below shares this prefix.
      if (updates_ != before) prefix_tied = true;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> class_of_vertex_;
  std::vector<int> slot_class_;
  std::array<int, kMaxVertices> order_{};
  std::array<int, kMaxVertices> best_order_{};
  CanonicalCode current_;
  CanonicalCode best_;
  bool have_leaf_ = false;
  std::uint64_t updates_ = 0;
};

}  // namespace canonical_detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  return canonical_detail::Search(g).run();
}

inline CanonicalCode canonical_form(const Graph& g) { return canonical_labeling(g).code; }

/// The relabeled copy of g whose adjacency spells its canonical code.
inline Graph canonical_graph(const Graph& g) {
  Graph out = canonical_labeling(g).code.to_graph();
  out.id = g.id;
  return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

}  // namespace qgl
