#pragma once

// Angle optimization: multi-start BFGS on -<C> with adjoint gradients,
// plus a dense (gamma, beta) grid scan that serves as the p = 1 oracle.

#include <qgl/canonical.hpp>
#include <qgl/error.hpp>
#include <qgl/graph.hpp>
#include <qgl/qaoa/metrics.hpp>
#include <qgl/qaoa/simulator.hpp>

#include <ceres/ceres.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace qgl {

inline constexpr int kMaxDepth = 3;
inline constexpr int kMinGridResolution = 64;

struct OptimizerOptions {
  int max_iterations = 500;
  double function_tolerance = 1e-8;
  double gradient_tolerance = 1e-10;
  /// Grid points per axis for the p = 1 oracle.
  int grid_resolution = 128;
  /// Grid local maxima handed to the local polish, best first.
  int grid_polish = 4;
};

struct LocalResult {
  AngleVector angles;
  double exp_c = 0.0;
  std::uint64_t evaluations = 0;
};

namespace optimize_detail {

class NegatedExpectation final : public ceres::FirstOrderFunction {
 public:
  NegatedExpectation(const QaoaSimulator& sim, int depth, std::uint64_t& evaluations)
      : sim_(sim), depth_(depth), evaluations_(evaluations) {}

  bool Evaluate(const double* x, double* cost, double* gradient) const override {
    ++evaluations_;
    const AngleVector angles = AngleVector::from_flat(std::span<const double>(x, static_cast<std::size_t>(2 * depth_)));
    if (gradient == nullptr) {
      cost[0] = -sim_.expectation(angles);
      return true;
    }
    std::span<double> g(gradient, static_cast<std::size_t>(2 * depth_));
    cost[0] = -sim_.expectation_and_gradient(angles, g);
    for (double& v : g) v = -v;
    return true;
  }

  int NumParameters() const override { return 2 * depth_; }

 private:
  const QaoaSimulator& sim_;
  int depth_;
  std::uint64_t& evaluations_;
};

}  // namespace optimize_detail

/// Local BFGS ascent of <C> from `start`. Never returns a point worse than
/// the start.
inline LocalResult polish(const QaoaSimulator& sim, const AngleVector& start, const OptimizerOptions& options) {
  LocalResult out;
  const int depth = start.depth();
  std::vector<double> x = start.flat();
  const double start_value = sim.expectation(start);
  out.evaluations = 1;
  if (depth > 0) {
    ceres::GradientProblemSolver::Options solver;
    solver.line_search_direction_type = ceres::BFGS;
    solver.max_num_iterations = options.max_iterations;
    solver.function_tolerance = options.function_tolerance;
    solver.gradient_tolerance = options.gradient_tolerance;
    solver.parameter_tolerance = 1e-12;
    solver.logging_type = ceres::SILENT;
    ceres::GradientProblem problem(new optimize_detail::NegatedExpectation(sim, depth, out.evaluations));
    ceres::GradientProblemSolver::Summary summary;
    ceres::Solve(solver, problem, x.data(), &summary);
  }
  out.angles = AngleVector::from_flat(x).canonical();
  out.exp_c = sim.expectation(out.angles);
  ++out.evaluations;
  if (out.exp_c < start_value) {
    out.angles = start.canonical();
    out.exp_c = sim.expectation(out.angles);
  }
  return out;
}

/// Uniform draw from the canonical domain, keyed by (seed, canonical form,
/// start index) so isomorphic inputs see identical starts.
inline AngleVector random_start(std::uint64_t seed, const CanonicalCode& code, int start_index, int depth) {
  std::vector<std::uint32_t> key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                 static_cast<std::uint32_t>(code.n)};
  for (int j = 1; j < code.n; ++j) key.push_back(code.columns[static_cast<std::size_t>(j)]);
  key.push_back(static_cast<std::uint32_t>(start_index));
  std::seed_seq seq(key.begin(), key.end());
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> gamma(0.0, kGammaPeriod);
  std::uniform_real_distribution<double> beta(0.0, kBetaPeriod);
  AngleVector out = AngleVector::zeros(depth);
  for (int l = 0; l < depth; ++l) {
    out.gammas[static_cast<std::size_t>(l)] = gamma(rng);
    out.betas[static_cast<std::size_t>(l)] = beta(rng);
  }
  return out;
}

struct GridResult {
  double gamma = 0.0;
  double beta = 0.0;
  double exp_c = 0.0;
  std::uint64_t evaluations = 0;
};

/// <C> over the full [0, 2pi) x [0, pi) grid at p = 1, then BFGS from the
/// best grid local maxima.
inline GridResult grid_scan_p1(const QaoaSimulator& sim, int resolution, const OptimizerOptions& options = {}) {
  if (resolution < kMinGridResolution) {
    throw Error(Errc::parameter, "grid resolution " + std::to_string(resolution) + " below 64");
  }
  const auto r = static_cast<std::size_t>(resolution);
  std::vector<double> value(r * r);
  const Statevector uniform = sim.uniform_state();
  for (std::size_t i = 0; i < r; ++i) {
    Statevector phased = uniform;
    sim.apply_phase(phased, kGammaPeriod * static_cast<double>(i) / resolution);
    for (std::size_t j = 0; j < r; ++j) {
      Statevector psi = phased;
      sim.apply_mixer(psi, kBetaPeriod * static_cast<double>(j) / resolution);
      value[i * r + j] = sim.expectation(psi);
    }
  }
  GridResult out;
  out.evaluations = r * r;

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const double v = value[i * r + j];
      bool peak = true;
      for (int di = -1; di <= 1 && peak; ++di) {
        for (int dj = -1; dj <= 1 && peak; ++dj) {
          const auto ni = static_cast<std::size_t>(static_cast<int>(i) + resolution + di) % r;
          const auto nj = static_cast<std::size_t>(static_cast<int>(j) + resolution + dj) % r;
          if (value[ni * r + nj] > v) peak = false;
        }
      }
      if (peak) peaks.push_back(i * r + j);
    }
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return value[a] > value[b]; });
  if (peaks.size() > static_cast<std::size_t>(std::max(1, options.grid_polish))) {
    peaks.resize(static_cast<std::size_t>(std::max(1, options.grid_polish)));
  }

  out.exp_c = -1.0;
  for (std::size_t cell : peaks) {
    const AngleVector seed_point({kGammaPeriod * static_cast<double>(cell / r) / resolution},
                                 {kBetaPeriod * static_cast<double>(cell % r) / resolution});
    const LocalResult local = polish(sim, seed_point, options);
    out.evaluations += local.evaluations;
    if (local.exp_c > out.exp_c) {
      out.exp_c = local.exp_c;
      out.gamma = local.angles.gammas[0];
      out.beta = local.angles.betas[0];
    }
  }
  return out;
}

inline GridResult grid_scan_p1(const Graph& g, int resolution, const OptimizerOptions& options = {}) {
  return grid_scan_p1(QaoaSimulator(g), resolution, options);
}

/// Best of `starts` random-start local ascents (plus any extra starts, and
/// the grid oracle at p = 1). Metrics are evaluated at the kept angles.
inline QaoaOutcome optimize_angles(const QaoaSimulator& sim, const CanonicalCode& code, int depth, int starts,
                                   std::uint64_t seed, const OptimizerOptions& options = {},
                                   std::span<const AngleVector> extra_starts = {}) {
  if (depth < 1 || depth > kMaxDepth) throw Error(Errc::unsupported_depth, "p = " + std::to_string(depth) + " outside 1..3");
  if (starts < 1) throw Error(Errc::parameter, "starts must be at least 1");

  QaoaOutcome out;
  out.p = depth;
  out.n = sim.order();
  out.seed = seed;
  out.cmax = sim.maxcut().cmax;
  out.optimal_count = sim.maxcut().optimal_count;
  out.stats.starts = starts;
  out.stats.method = "bfgs+adjoint-gradient";
  double best = -1.0;
  auto consider = [&](const AngleVector& angles, double value, int origin) {
    if (value > best) {
      best = value;
      out.best_angles = angles;
      out.stats.best_start = origin;
    }
  };

  for (int s = 0; s < starts; ++s) {
    const LocalResult local = polish(sim, random_start(seed, code, s, depth), options);
    out.stats.evaluations += local.evaluations;
    consider(local.angles, local.exp_c, s);
  }
  for (const AngleVector& extra : extra_starts) {
    const LocalResult local = polish(sim, extra.padded(depth), options);
    out.stats.evaluations += local.evaluations;
    consider(local.angles, local.exp_c, -3);
  }
  if (depth == 1) {
    const GridResult grid = grid_scan_p1(sim, options.grid_resolution, options);
    out.stats.evaluations += grid.evaluations;
    consider(AngleVector({grid.gamma}, {grid.beta}), grid.exp_c, -2);
  }

  const Statevector psi = sim.evolve(out.best_angles);
  out.exp_c = sim.expectation(psi);
  out.prob_cmax = sim.prob_cmax(psi);
  out.ratio = out.cmax > 0 ? out.exp_c / out.cmax : 1.0;
  return out;
}

inline QaoaOutcome optimize_angles(const Graph& g, int depth, int starts, std::uint64_t seed,
                                   const OptimizerOptions& options = {}) {
  if (depth < 1 || depth > kMaxDepth) throw Error(Errc::unsupported_depth, "p = " + std::to_string(depth) + " outside 1..3");
  QaoaOutcome out = optimize_angles(QaoaSimulator(g), canonical_form(g), depth, starts, seed, options);
  out.graph_id = g.id.value_or(0);
  return out;
}

/// Rows p = 0..max_depth for one graph. Each level also polishes the
/// zero-padded optimum of the level below, so <C> never decreases with p.
inline std::vector<QaoaOutcome> optimize_depths(const Graph& g, int max_depth, int starts, std::uint64_t seed,
                                                const OptimizerOptions& options = {}) {
  if (max_depth < 0 || max_depth > kMaxDepth) {
    throw Error(Errc::unsupported_depth, "p = " + std::to_string(max_depth) + " outside 0..3");
  }
  const QaoaSimulator sim(g);
  const CanonicalCode code = canonical_form(g);
  const std::uint64_t id = g.id.value_or(0);
  std::vector<QaoaOutcome> rows{uniform_outcome(sim, id)};
  rows.front().seed = seed;
  for (int p = 1; p <= max_depth; ++p) {
    const AngleVector previous = rows.back().best_angles;
    QaoaOutcome o = optimize_angles(sim, code, p, starts, seed, options, std::span<const AngleVector>(&previous, 1));
    o.graph_id = id;
    rows.push_back(std::move(o));
  }
  return metrics_bundle(g, sim.maxcut(), std::move(rows));
}

}  // namespace qgl
