#pragma once

// Batch drivers: per-graph work fans out over worker threads and is joined
// before anything is written, so output order never depends on scheduling.

#include <qgl/config.hpp>
#include <qgl/dataset.hpp>
#include <qgl/enumerate.hpp>
#include <qgl/graph6.hpp>
#include <qgl/parallel.hpp>
#include <qgl/qaoa/optimize.hpp>
#include <qgl/record.hpp>

#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

namespace qgl {

inline std::vector<DatasetRow> compute_dataset(std::span<const Graph> graphs, int workers) {
  std::vector<DatasetRow> rows(graphs.size());
  parallel_for(graphs.size(), workers, [&](std::size_t i) { rows[i] = make_dataset_row(graphs[i]); });
  return rows;
}

/// Rows p = 0..max_depth for every graph, grouped by graph in input order.
inline std::vector<QaoaOutcome> compute_qaoa(std::span<const Graph> graphs, int max_depth, int starts,
                                             std::uint64_t seed, const OptimizerOptions& options, int workers) {
  std::vector<std::vector<QaoaOutcome>> per_graph(graphs.size());
  parallel_for(graphs.size(), workers, [&](std::size_t i) {
    per_graph[i] = optimize_depths(graphs[i], max_depth, starts, seed, options);
  });
  std::vector<QaoaOutcome> out;
  for (auto& rows : per_graph) {
    for (auto& o : rows) out.push_back(std::move(o));
  }
  return out;
}

/// graph6 lookup for the QAOA writer.
inline std::function<std::string(const QaoaOutcome&)> graph6_lookup(std::span<const Graph> graphs) {
  auto table = std::make_shared<std::map<std::uint64_t, std::string>>();
  for (const Graph& g : graphs) (*table)[g.id.value_or(0)] = encode_graph6(g);
  return [table](const QaoaOutcome& o) {
    const auto it = table->find(o.graph_id);
    return it == table->end() ? std::string() : it->second;
  };
}

inline void write_qaoa_results_file(const std::filesystem::path& path, std::span<const QaoaOutcome> outcomes,
                                    std::span<const Graph> graphs) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io, "cannot write " + path.string());
  write_qaoa_results(out, outcomes, graph6_lookup(graphs));
}

inline std::vector<QaoaResultRow> read_qaoa_results_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path.string());
  return read_qaoa_results(in);
}

/// Enumerates each n in the configured range and writes graphs_n<k>.g6,
/// graphs_n<k>.csv and qaoa_n<k>.csv under the output directory.
inline void run_pipeline(const RunConfig& config) {
  config.validate();
  const int workers = resolve_workers(config.workers);
  std::filesystem::create_directories(config.output_dir);
  for (int n = config.n_min; n <= config.n_max; ++n) {
    const std::vector<Graph> graphs = enumerate_connected(n);
    {
      std::ofstream g6(config.output_dir / fmt::format("graphs_n{}.g6", n));
      write_graph6(g6, graphs);
    }
    const std::vector<DatasetRow> rows = compute_dataset(graphs, workers);
    write_dataset_file(config.output_dir / dataset_filename(n), rows);
    const std::vector<QaoaOutcome> outcomes =
        compute_qaoa(graphs, config.p_max, config.starts, config.seed, config.optimizer, workers);
    write_qaoa_results_file(config.output_dir / fmt::format("qaoa_n{}.csv", n), outcomes, graphs);
  }
}

}  // namespace qgl
