#pragma once

#include <qgl/error.hpp>
#include <qgl/graph.hpp>
#include <qgl/qaoa/maxcut.hpp>
#include <qgl/qaoa/simulator.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qgl {

/// Below this remaining gap the level p-1 state is already optimal and the
/// delta ratio is undefined.
inline constexpr double kDeltaGapEpsilon = 1e-9;

struct OptimizerStats {
  int starts = 0;
  /// Index of the start that produced the kept angles; -1 for the p = 0 row,
  /// -2 for the grid oracle, -3 for a supplied extra start.
  int best_start = -1;
  std::uint64_t evaluations = 0;
  std::string method;
};

struct QaoaOutcome {
  std::uint64_t graph_id = 0;
  int n = 0;
  int p = 0;
  AngleVector best_angles;
  double exp_c = 0.0;
  double prob_cmax = 0.0;
  double ratio = 0.0;
  std::optional<double> delta_ratio;
  int cmax = 0;
  std::uint64_t optimal_count = 0;
  std::uint64_t seed = 0;
  OptimizerStats stats;
};

inline std::optional<double> delta_ratio(double exp_c, double previous_exp_c, int cmax) {
  const double gap = cmax - previous_exp_c;
  if (gap < kDeltaGapEpsilon) return std::nullopt;
  return (exp_c - previous_exp_c) / gap;
}

/// Fills ratio and delta_ratio for outcomes listed at p = 0, 1, ..., P.
inline std::vector<QaoaOutcome> metrics_bundle(const Graph& g, const MaxCutSummary& mc, std::vector<QaoaOutcome> outcomes) {
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    QaoaOutcome& o = outcomes[i];
    if (o.p != static_cast<int>(i)) {
      throw Error(Errc::sequencing, "outcome at position " + std::to_string(i) + " has p = " + std::to_string(o.p));
    }
    o.n = g.order();
    o.cmax = mc.cmax;
    o.optimal_count = mc.optimal_count;
    o.ratio = mc.cmax > 0 ? o.exp_c / mc.cmax : 1.0;
    o.delta_ratio = i == 0 ? std::nullopt : delta_ratio(o.exp_c, outcomes[i - 1].exp_c, mc.cmax);
  }
  return outcomes;
}

/// The parameter-free p = 0 row: the uniform superposition.
inline QaoaOutcome uniform_outcome(const QaoaSimulator& sim, std::uint64_t graph_id) {
  const Statevector psi = sim.uniform_state();
  QaoaOutcome o;
  o.graph_id = graph_id;
  o.n = sim.order();
  o.p = 0;
  o.exp_c = sim.expectation(psi);
  o.prob_cmax = sim.prob_cmax(psi);
  o.cmax = sim.maxcut().cmax;
  o.optimal_count = sim.maxcut().optimal_count;
  o.ratio = o.cmax > 0 ? o.exp_c / o.cmax : 1.0;
  o.stats.method = "uniform";
  return o;
}

}  // namespace qgl
