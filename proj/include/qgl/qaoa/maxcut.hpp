#pragma once

#include <qgl/error.hpp>
#include <qgl/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace qgl {

/// Cut value of every assignment z (bit v of z = side of vertex v).
inline std::vector<int> cost_vector(const Graph& g) {
  const int n = g.order();
  std::vector<int> cost(std::size_t{1} << n, 0);
  for (std::uint32_t z = 1; z < cost.size(); ++z) {
    const int top = 31 - std::countl_zero(z);
    const std::uint32_t below = z ^ (1u << top);
    // Moving `top` to side 1 cuts its edges to side 0 and heals those to side 1.
    const unsigned nbrs = g.neighbors(top);
    cost[z] = cost[below] + std::popcount(nbrs & ~below) - std::popcount(nbrs & below);
  }
  return cost;
}

struct MaxCutSummary {
  int cmax = 0;
  std::uint64_t optimal_count = 0;
  /// optimal_mask[z] <=> cost(z) == cmax.
  std::vector<bool> optimal_mask;
};

inline MaxCutSummary maxcut_bruteforce(const Graph& g) {
  if (g.order() > kMaxVertices) throw Error(Errc::unsupported_size, "max cut supports n <= 16");
  const std::vector<int> cost = cost_vector(g);
  MaxCutSummary out;
  out.cmax = *std::max_element(cost.begin(), cost.end());
  out.optimal_mask.resize(cost.size());
  for (std::size_t z = 0; z < cost.size(); ++z) {
    if (cost[z] == out.cmax) {
      out.optimal_mask[z] = true;
      ++out.optimal_count;
    }
  }
  return out;
}

}  // namespace qgl
