#include "verify.hpp"

#include <qgl/qgl.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMissingInput = 3;

int exit_code_for(qgl::Errc code) {
  switch (code) {
    case qgl::Errc::parameter:
    case qgl::Errc::unsupported_size:
    case qgl::Errc::unsupported_depth: return kExitUsage;
    case qgl::Errc::io:
    case qgl::Errc::missing_data:
    case qgl::Errc::schema:
    case qgl::Errc::malformed_record:
    case qgl::Errc::truncated_record: return kExitMissingInput;
    default: return kExitFailure;
  }
}

void require_input(const std::string& path) {
  if (!std::filesystem::exists(path)) throw qgl::Error(qgl::Errc::io, "input not found: " + path);
}

/// Writes to `path`, or stdout when it is empty or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw qgl::Error(qgl::Errc::io, "cannot write " + path);
  fn(out);
}

struct AnalyzeArgs {
  std::string props, qaoa, out, flag, metric = "prob_cmax";
  int bins = 20;
  int p = -1;
};

std::set<std::pair<int, int>> slices(const std::vector<qgl::QaoaOutcome>& outcomes) {
  std::set<std::pair<int, int>> out;
  for (const auto& o : outcomes) out.emplace(o.n, o.p);
  return out;
}

int run_analyze(const std::string& mode, const AnalyzeArgs& a) {
  require_input(a.props);
  require_input(a.qaoa);
  const auto rows = qgl::read_dataset_file(a.props);
  const auto outcomes = qgl::outcomes_of(qgl::read_qaoa_results_file(a.qaoa));
  if (rows.empty() || outcomes.empty()) throw qgl::Error(qgl::Errc::missing_data, "empty input");
  const int n = rows.front().n;
  const auto have = slices(outcomes);

  if (mode == "corr") {
    std::vector<qgl::CorrelationCell> cells;
    for (const auto& [sn, sp] : have) {
      if (sn != n || (a.p >= 0 && sp != a.p)) continue;
      for (const auto& c : qgl::correlation_table(rows, outcomes, sn, sp)) cells.push_back(c);
    }
    with_output(a.out, [&](std::ostream& os) { qgl::write_correlations(os, cells); });
  } else if (mode == "avg") {
    std::vector<qgl::Flag> flags;
    if (a.flag.empty()) flags = {qgl::Flag::bipartite, qgl::Flag::eulerian};
    else flags = {qgl::parse_flag(a.flag)};
    std::vector<qgl::GroupAverageRow> out;
    for (const auto& [sn, sp] : have) {
      if (sn != n || (a.p >= 0 && sp != a.p)) continue;
      for (qgl::Flag f : flags) {
        const auto [member, non_member] = qgl::group_averages(rows, outcomes, sn, sp, f);
        out.push_back(member);
        out.push_back(non_member);
      }
    }
    with_output(a.out, [&](std::ostream& os) { qgl::write_group_averages(os, out); });
  } else if (mode == "hist") {
    int p = a.p;
    if (p < 0) {
      for (const auto& [sn, sp] : have) {
        if (sn == n) p = std::max(p, sp);
      }
    }
    const auto flag = qgl::parse_flag(a.flag.empty() ? "bipartite" : a.flag);
    const auto h = qgl::histogram(rows, outcomes, n, p, flag, qgl::parse_metric(a.metric), a.bins);
    with_output(a.out, [&](std::ostream& os) { qgl::write_histogram(os, h); });
  } else {
    std::vector<qgl::CorrelationCell> cells;
    for (const auto& [sn, sp] : have) {
      if (sn != n || sp < 1) continue;
      for (const auto& c : qgl::correlation_table(rows, outcomes, sn, sp)) cells.push_back(c);
    }
    if (cells.empty()) throw qgl::Error(qgl::Errc::missing_data, "no p >= 1 results for the sign summary");
    const auto signs = qgl::sign_summary(cells);
    with_output(a.out, [&](std::ostream& os) { qgl::write_signs(os, signs); });
  }
  return 0;
}

int run_verify(const std::string& suite, qgl::verify::Options options) {
  qgl::verify::Workspace ws(std::move(options));
  const auto reports = suite == "golden" ? qgl::verify::golden_suite(ws) : qgl::verify::invariants_suite(ws);
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << qgl::verify::summary_line(r) << std::endl;
    ok = ok && r.passed();
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph structure and QAOA MaxCut toolkit"};
  app.require_subcommand(1);

  auto* graphs = app.add_subcommand("graphs", "enumerate connected graphs");
  graphs->require_subcommand(1);
  int graphs_n = 0;
  std::string graphs_out;
  auto* gen = graphs->add_subcommand("gen", "write graph6 lines for every connected graph on n vertices");
  gen->add_option("--n", graphs_n, "vertex count (3..8)")->required();
  gen->add_option("--out", graphs_out, "output file (default stdout)");
  auto* count = graphs->add_subcommand("count", "print the number of connected graphs on n vertices");
  count->add_option("--n", graphs_n, "vertex count (3..8)")->required();

  std::string in_path, out_path;
  int workers = 0;
  auto* props = app.add_subcommand("props", "structural properties of every graph in a graph6 file");
  props->add_option("--in", in_path, "graph6 input")->required();
  props->add_option("--out", out_path, "dataset CSV output")->required();
  props->add_option("--workers", workers, "worker threads");

  int depth = 3, starts = 200;
  std::uint64_t seed = 1;
  qgl::OptimizerOptions optimizer;
  auto* qaoa = app.add_subcommand("qaoa", "optimize QAOA angles for p = 0..P");
  qaoa->add_option("--in", in_path, "graph6 input")->required();
  qaoa->add_option("--p", depth, "maximum depth (0..3)")->required();
  qaoa->add_option("--starts", starts, "random starts per depth")->capture_default_str();
  qaoa->add_option("--seed", seed, "seed")->capture_default_str();
  qaoa->add_option("--out", out_path, "results CSV output")->required();
  qaoa->add_option("--workers", workers, "worker threads");
  qaoa->add_option("--max-iterations", optimizer.max_iterations)->capture_default_str();
  qaoa->add_option("--function-tolerance", optimizer.function_tolerance)->capture_default_str();
  qaoa->add_option("--grid-resolution", optimizer.grid_resolution)->capture_default_str();

  AnalyzeArgs analyze_args;
  std::string analyze_mode;
  auto* analyze = app.add_subcommand("analyze", "correlations, averages, histograms and sign summary");
  analyze->add_option("mode", analyze_mode, "corr | avg | hist | signs")
      ->required()
      ->check(CLI::IsMember({"corr", "avg", "hist", "signs"}));
  analyze->add_option("--props", analyze_args.props, "dataset CSV")->required();
  analyze->add_option("--qaoa", analyze_args.qaoa, "QAOA results CSV")->required();
  analyze->add_option("--flag", analyze_args.flag, "bipartite | eulerian | distance_regular")
      ->check(CLI::IsMember({"bipartite", "eulerian", "distance_regular"}));
  analyze->add_option("--bins", analyze_args.bins, "histogram bins")->capture_default_str();
  analyze->add_option("--metric", analyze_args.metric, "histogram metric")
      ->check(CLI::IsMember({"exp_c", "prob_cmax", "ratio", "delta_ratio"}))
      ->capture_default_str();
  analyze->add_option("--p", analyze_args.p, "restrict to one depth");
  analyze->add_option("--out", analyze_args.out, "CSV output (default stdout)");

  std::string suite;
  qgl::verify::Options verify_options;
  verify_options.fixtures = QGL_FIXTURE_DIR;
  std::string long_data;
  auto* verify = app.add_subcommand("verify", "run an acceptance suite");
  verify->add_option("--suite", suite, "golden | invariants")->required()->check(CLI::IsMember({"golden", "invariants"}));
  verify->add_option("--fixtures", verify_options.fixtures, "directory with graph<n>c.g6 reference files");
  verify->add_flag("--long", verify_options.long_mode, "include the n = 8 sign grid");
  verify->add_option("--long-data", long_data, "cache directory for n = 8 results");

  std::string config_path;
  auto* run = app.add_subcommand("run", "full pipeline from a key=value config file");
  run->add_option("--config", config_path, "config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const int threads = qgl::resolve_workers(workers > 0 ? std::optional<int>(workers) : std::nullopt);
    if (gen->parsed()) {
      const auto list = qgl::enumerate_connected(graphs_n);
      with_output(graphs_out, [&](std::ostream& os) { qgl::write_graph6(os, list); });
    } else if (count->parsed()) {
      fmt::print("{}\n", qgl::enumerate_connected(graphs_n).size());
    } else if (props->parsed()) {
      require_input(in_path);
      const auto list = qgl::read_graph6_file(in_path);
      qgl::write_dataset_file(out_path, qgl::compute_dataset(list, threads));
    } else if (qaoa->parsed()) {
      require_input(in_path);
      const auto list = qgl::read_graph6_file(in_path);
      const auto outcomes = qgl::compute_qaoa(list, depth, starts, seed, optimizer, threads);
      qgl::write_qaoa_results_file(out_path, outcomes, list);
    } else if (analyze->parsed()) {
      return run_analyze(analyze_mode, analyze_args);
    } else if (verify->parsed()) {
      if (!long_data.empty()) verify_options.long_data = long_data;
      verify_options.workers = threads;
      return run_verify(suite, verify_options);
    } else if (run->parsed()) {
      require_input(config_path);
      qgl::run_pipeline(qgl::read_run_config(config_path));
    }
  } catch (const qgl::Error& e) {
    fmt::print(std::cerr, "qgl: {}\n", e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    fmt::print(std::cerr, "qgl: {}\n", e.what());
    return kExitFailure;
  }
  return 0;
}
