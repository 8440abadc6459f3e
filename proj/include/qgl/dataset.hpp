#pragma once

// Dataset files: one graphs_n<k>.csv per vertex count, plus the QAOA
// results table. Schemas are fixed; readers reject any header drift.

#include <qgl/csv.hpp>
#include <qgl/error.hpp>
#include <qgl/qaoa/metrics.hpp>
#include <qgl/record.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace qgl {

inline constexpr std::string_view kDatasetSchema = "qgl-dataset-v1";
inline constexpr std::string_view kQaoaSchema = "qgl-qaoa-v1";

inline std::filesystem::path dataset_filename(int n) { return fmt::format("graphs_n{}.csv", n); }

inline std::vector<std::string> dataset_header(int n) {
  std::vector<std::string> h{"graph_id",         "n",           "graph6",        "bipartite",
                             "edges",            "diameter",    "clique_number", "distance_regular",
                             "distance_regular_strict",         "eulerian",      "cut_vertices",
                             "cut_vertex_count", "cycle_basis", "degree_sequence",
                             "automorphism_generators",         "group_size",    "orbits",
                             "orbit_count"};
  for (int k = 3; k <= n; ++k) h.push_back(fmt::format("cycle_count_{}", k));
  h.emplace_back("min_odd_cycle_count");
  h.emplace_back("basis_odd_cycle_count");
  return h;
}

namespace dataset_detail {

inline std::string join_ints(std::span<const int> xs) { return fmt::format("{}", fmt::join(xs, " ")); }

inline std::string format_basis(const std::vector<Cycle>& basis) {
  std::vector<std::string> cycles;
  for (const Cycle& c : basis) {
    std::vector<std::string> edges;
    for (const Edge& e : cycle_edges(c)) edges.push_back(fmt::format("{}-{}", e.u, e.v));
    cycles.push_back(fmt::format("{}", fmt::join(edges, " ")));
  }
  return fmt::format("{}", fmt::join(cycles, ";"));
}

inline std::vector<Cycle> parse_basis(std::string_view text) {
  std::vector<Cycle> basis;
  for (std::string_view cycle_text : csv::split_on(text, ';')) {
    Cycle cycle;
    for (std::string_view edge : csv::split_on(cycle_text, ' ')) {
      const std::size_t dash = edge.find('-');
      if (dash == std::string_view::npos) throw Error(Errc::schema, "column 'cycle_basis': bad edge '" + std::string(edge) + "'");
      cycle.push_back(csv::parse_number<int>(edge.substr(0, dash), "cycle_basis"));
    }
    basis.push_back(std::move(cycle));
  }
  return basis;
}

inline std::string format_generators(const std::vector<Permutation>& gens) {
  std::vector<std::string> parts;
  for (const Permutation& g : gens) parts.push_back(fmt::format("({})", fmt::join(g, " ")));
  return fmt::format("{}", fmt::join(parts, ";"));
}

inline std::vector<Permutation> parse_generators(std::string_view text) {
  std::vector<Permutation> gens;
  for (std::string_view part : csv::split_on(text, ';')) {
    if (part.size() < 2 || part.front() != '(' || part.back() != ')') {
      throw Error(Errc::schema, "column 'automorphism_generators': bad permutation '" + std::string(part) + "'");
    }
    gens.push_back(csv::parse_ints(part.substr(1, part.size() - 2), "automorphism_generators"));
  }
  return gens;
}

inline std::string format_orbits(const std::vector<std::vector<int>>& orbits) {
  std::vector<std::string> parts;
  for (const auto& o : orbits) parts.push_back(join_ints(o));
  return fmt::format("{}", fmt::join(parts, ";"));
}

inline std::vector<std::vector<int>> parse_orbits(std::string_view text) {
  std::vector<std::vector<int>> out;
  for (std::string_view part : csv::split_on(text, ';')) out.push_back(csv::parse_ints(part, "orbits"));
  return out;
}

}  // namespace dataset_detail

inline void write_dataset(std::ostream& out, std::span<const DatasetRow> rows) {
  using namespace dataset_detail;
  if (rows.empty()) throw Error(Errc::missing_data, "no dataset rows to write");
  const int n = rows.front().n;
  out << csv::join(dataset_header(n)) << '\n';
  for (const DatasetRow& row : rows) {
    if (row.n != n) throw Error(Errc::shape, "dataset rows mix vertex counts");
    const StructureProfile& s = row.structure;
    std::vector<std::string> f{
        std::to_string(row.graph_id),
        std::to_string(row.n),
        csv::quoted(row.graph6),
        s.bipartite ? "true" : "false",
        std::to_string(s.edges),
        std::to_string(s.diameter),
        std::to_string(s.clique_number),
        s.distance_regular_layered ? "true" : "false",
        s.distance_regular_strict ? "true" : "false",
        s.eulerian ? "true" : "false",
        csv::quoted(join_ints(s.cut_vertices)),
        std::to_string(s.cut_vertex_count),
        csv::quoted(format_basis(s.cycle_basis)),
        csv::quoted(join_ints(s.degree_sequence)),
        csv::quoted(format_generators(row.symmetry.generators)),
        std::to_string(row.symmetry.group_size),
        csv::quoted(format_orbits(row.symmetry.orbits)),
        std::to_string(row.symmetry.orbit_count),
    };
    for (int k = 3; k <= n; ++k) f.push_back(std::to_string(s.cycle_counts[static_cast<std::size_t>(k)]));
    f.push_back(std::to_string(s.min_odd_cycle_count));
    f.push_back(std::to_string(s.basis_odd_cycle_count));
    out << csv::join(f) << '\n';
  }
}

inline std::vector<DatasetRow> read_dataset(std::istream& in) {
  using namespace dataset_detail;
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::schema, std::string(kDatasetSchema) + ": empty file");
  const std::vector<std::string> header = csv::split(line);
  int n = 2;
  while (std::find(header.begin(), header.end(), fmt::format("cycle_count_{}", n + 1)) != header.end()) ++n;
  csv::expect_header(header, dataset_header(n), kDatasetSchema);

  std::vector<DatasetRow> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = csv::split(line);
    if (f.size() != header.size()) {
      throw Error(Errc::schema, fmt::format("{}: row {} has {} fields, header has {}", kDatasetSchema,
                                            rows.size() + 1, f.size(), header.size()));
    }
    auto col = [&](std::size_t i) -> const std::string& { return f[i]; };
    auto name = [&](std::size_t i) -> const std::string& { return header[i]; };
    DatasetRow row;
    row.graph_id = csv::parse_number<std::uint64_t>(col(0), name(0));
    row.n = csv::parse_number<int>(col(1), name(1));
    row.graph6 = col(2);
    StructureProfile& s = row.structure;
    s.bipartite = csv::parse_bool(col(3), name(3));
    s.edges = csv::parse_number<int>(col(4), name(4));
    s.diameter = csv::parse_number<int>(col(5), name(5));
    s.clique_number = csv::parse_number<int>(col(6), name(6));
    s.distance_regular_layered = csv::parse_bool(col(7), name(7));
    s.distance_regular_strict = csv::parse_bool(col(8), name(8));
    s.eulerian = csv::parse_bool(col(9), name(9));
    s.cut_vertices = csv::parse_ints(col(10), name(10));
    s.cut_vertex_count = csv::parse_number<int>(col(11), name(11));
    s.cycle_basis = parse_basis(col(12));
    s.degree_sequence = csv::parse_ints(col(13), name(13));
    row.symmetry.generators = parse_generators(col(14));
    row.symmetry.group_size = csv::parse_number<std::uint64_t>(col(15), name(15));
    row.symmetry.orbits = parse_orbits(col(16));
    row.symmetry.orbit_count = csv::parse_number<int>(col(17), name(17));
    s.cycle_counts.assign(static_cast<std::size_t>(n) + 1, 0);
    std::size_t i = 18;
    for (int k = 3; k <= n; ++k, ++i) s.cycle_counts[static_cast<std::size_t>(k)] = csv::parse_number<int>(col(i), name(i));
    s.min_odd_cycle_count = csv::parse_number<int>(col(i), name(i));
    ++i;
    s.basis_odd_cycle_count = csv::parse_number<int>(col(i), name(i));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void write_dataset_file(const std::filesystem::path& path, std::span<const DatasetRow> rows) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io, "cannot write " + path.string());
  write_dataset(out, rows);
}

inline std::vector<DatasetRow> read_dataset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path.string());
  return read_dataset(in);
}

// QAOA results ------------------------------------------------------------

inline std::vector<std::string> qaoa_header(int max_depth) {
  std::vector<std::string> h{"graph_id", "n", "graph6", "p"};
  for (int l = 1; l <= max_depth; ++l) h.push_back(fmt::format("gamma_{}", l));
  for (int l = 1; l <= max_depth; ++l) h.push_back(fmt::format("beta_{}", l));
  for (const char* c : {"exp_c", "prob_cmax", "ratio", "delta_ratio", "cmax", "optimal_count", "starts", "seed"}) {
    h.emplace_back(c);
  }
  return h;
}

/// One row per (graph, p); angle columns beyond a row's depth stay empty.
inline void write_qaoa_results(std::ostream& out, std::span<const QaoaOutcome> outcomes,
                               const std::function<std::string(const QaoaOutcome&)>& graph6_of) {
  int max_depth = 0;
  for (const QaoaOutcome& o : outcomes) max_depth = std::max(max_depth, o.p);
  out << csv::join(qaoa_header(max_depth)) << '\n';
  for (const QaoaOutcome& o : outcomes) {
    std::vector<std::string> f{std::to_string(o.graph_id), std::to_string(o.n), csv::quoted(graph6_of(o)),
                               std::to_string(o.p)};
    for (int l = 0; l < max_depth; ++l) {
      f.push_back(l < o.p ? csv::real(o.best_angles.gammas[static_cast<std::size_t>(l)]) : std::string());
    }
    for (int l = 0; l < max_depth; ++l) {
      f.push_back(l < o.p ? csv::real(o.best_angles.betas[static_cast<std::size_t>(l)]) : std::string());
    }
    f.push_back(csv::real(o.exp_c));
    f.push_back(csv::real(o.prob_cmax));
    f.push_back(csv::real(o.ratio));
    f.push_back(csv::real(o.delta_ratio));
    f.push_back(std::to_string(o.cmax));
    f.push_back(std::to_string(o.optimal_count));
    f.push_back(std::to_string(o.stats.starts));
    f.push_back(std::to_string(o.seed));
    out << csv::join(f) << '\n';
  }
}

struct QaoaResultRow {
  QaoaOutcome outcome;
  std::string graph6;
};

inline std::vector<QaoaResultRow> read_qaoa_results(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::schema, std::string(kQaoaSchema) + ": empty file");
  const std::vector<std::string> header = csv::split(line);
  int max_depth = 0;
  while (std::find(header.begin(), header.end(), fmt::format("gamma_{}", max_depth + 1)) != header.end()) ++max_depth;
  csv::expect_header(header, qaoa_header(max_depth), kQaoaSchema);

  std::vector<QaoaResultRow> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = csv::split(line);
    if (f.size() != header.size()) {
      throw Error(Errc::schema, fmt::format("{}: row {} has {} fields, header has {}", kQaoaSchema, rows.size() + 1,
                                            f.size(), header.size()));
    }
    QaoaResultRow row;
    QaoaOutcome& o = row.outcome;
    o.graph_id = csv::parse_number<std::uint64_t>(f[0], header[0]);
    o.n = csv::parse_number<int>(f[1], header[1]);
    row.graph6 = f[2];
    o.p = csv::parse_number<int>(f[3], header[3]);
    if (o.p > max_depth) throw Error(Errc::schema, fmt::format("{}: p = {} exceeds angle columns", kQaoaSchema, o.p));
    o.best_angles = AngleVector::zeros(o.p);
    std::size_t i = 4;
    for (int l = 0; l < max_depth; ++l, ++i) {
      if (l < o.p) o.best_angles.gammas[static_cast<std::size_t>(l)] = csv::parse_number<double>(f[i], header[i]);
    }
    for (int l = 0; l < max_depth; ++l, ++i) {
      if (l < o.p) o.best_angles.betas[static_cast<std::size_t>(l)] = csv::parse_number<double>(f[i], header[i]);
    }
    o.exp_c = csv::parse_number<double>(f[i], header[i]);
    ++i;
    o.prob_cmax = csv::parse_number<double>(f[i], header[i]);
    ++i;
    o.ratio = csv::parse_number<double>(f[i], header[i]);
    ++i;
    o.delta_ratio = csv::parse_optional_real(f[i], header[i]);
    ++i;
    o.cmax = csv::parse_number<int>(f[i], header[i]);
    ++i;
    o.optimal_count = csv::parse_number<std::uint64_t>(f[i], header[i]);
    ++i;
    o.stats.starts = csv::parse_number<int>(f[i], header[i]);
    ++i;
    o.seed = csv::parse_number<std::uint64_t>(f[i], header[i]);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<QaoaOutcome> outcomes_of(std::span<const QaoaResultRow> rows) {
  std::vector<QaoaOutcome> out;
  out.reserve(rows.size());
  for (const QaoaResultRow& r : rows) out.push_back(r.outcome);
  return out;
}

}  // namespace qgl
