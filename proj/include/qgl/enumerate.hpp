#pragma once

// Isomorph-free generation by vertex extension: every class on k-1 vertices
// (connected or not) is extended by a new vertex joined to each subset of the
// old ones, and the results are deduplicated by canonical code.

#include <qgl/canonical.hpp>
#include <qgl/error.hpp>
#include <qgl/graph.hpp>

#include <map>
#include <string>
#include <vector>

namespace qgl {

inline constexpr int kMinEnumerationOrder = 3;
inline constexpr int kMaxEnumerationOrder = 8;

/// All isomorphism classes on exactly n vertices, as canonical graphs sorted
/// by canonical code.
inline std::vector<Graph> enumerate_all_classes(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(Errc::unsupported_size, "enumeration order " + std::to_string(n) + " outside 1..8");
  }
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::map<CanonicalCode, Graph> classes;
    for (const Graph& base : level) {
      for (unsigned subset = 0; subset < (1u << (k - 1)); ++subset) {
        Graph extended(k);
        for (const Edge& e : base.edges()) extended.add_edge(e.u, e.v);
        for (int v = 0; v < k - 1; ++v) {
          if ((subset >> v) & 1u) extended.add_edge(v, k - 1);
        }
        CanonicalCode code = canonical_form(extended);
        if (!classes.contains(code)) {
          Graph rep = code.to_graph();
          classes.emplace(std::move(code), std::move(rep));
        }
      }
    }
    level.clear();
    level.reserve(classes.size());
    for (auto& [code, rep] : classes) level.push_back(std::move(rep));
  }
  return level;
}

/// One canonical representative per class of connected graphs on n
/// vertices, ordered by canonical code, ids 1..N_n in that order.
inline std::vector<Graph> enumerate_connected(int n) {
  if (n < kMinEnumerationOrder || n > kMaxEnumerationOrder) {
    throw Error(Errc::unsupported_size, "enumeration order " + std::to_string(n) + " outside 3..8");
  }
  std::vector<Graph> out;
  for (Graph& g : enumerate_all_classes(n)) {
    if (!is_connected(g)) continue;
    g.id = out.size() + 1;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace qgl
