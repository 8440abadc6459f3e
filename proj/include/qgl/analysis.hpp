#pragma once

// Correlations between graph properties and QAOA metrics, subgroup
// averages, histograms and the sign summary.

#include <qgl/csv.hpp>
#include <qgl/error.hpp>
#include <qgl/qaoa/metrics.hpp>
#include <qgl/record.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgl {

enum class Property {
  edges,
  diameter,
  clique_number,
  bipartite,
  eulerian,
  distance_regular,
  cut_vertices,
  min_odd_cycles,
  group_size,
  orbit_count,
  /// Shortest odd cycles; not one of the standard ten columns.
  odd_girth_cycles,
};

/// The ten standard property columns, in table order.
inline constexpr std::array<Property, 10> kTableProperties{
    Property::edges,          Property::diameter,   Property::clique_number, Property::bipartite,
    Property::eulerian,       Property::distance_regular, Property::cut_vertices, Property::min_odd_cycles,
    Property::group_size,     Property::orbit_count};

enum class Metric { exp_c, prob_cmax, ratio, delta_ratio };

inline constexpr std::array<Metric, 4> kMetrics{Metric::exp_c, Metric::prob_cmax, Metric::ratio, Metric::delta_ratio};

enum class Flag { bipartite, eulerian, distance_regular };

inline std::string_view to_string(Property p) {
  switch (p) {
    case Property::edges: return "edges";
    case Property::diameter: return "diameter";
    case Property::clique_number: return "clique_number";
    case Property::bipartite: return "bipartite";
    case Property::eulerian: return "eulerian";
    case Property::distance_regular: return "distance_regular";
    case Property::cut_vertices: return "cut_vertex_count";
    case Property::min_odd_cycles: return "min_odd_cycles";
    case Property::group_size: return "group_size";
    case Property::orbit_count: return "orbit_count";
    case Property::odd_girth_cycles: return "odd_girth_cycles";
  }
  return "?";
}

inline std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::exp_c: return "exp_c";
    case Metric::prob_cmax: return "prob_cmax";
    case Metric::ratio: return "ratio";
    case Metric::delta_ratio: return "delta_ratio";
  }
  return "?";
}

inline std::string_view to_string(Flag f) {
  switch (f) {
    case Flag::bipartite: return "bipartite";
    case Flag::eulerian: return "eulerian";
    case Flag::distance_regular: return "distance_regular";
  }
  return "?";
}

inline Flag parse_flag(std::string_view text) {
  for (Flag f : {Flag::bipartite, Flag::eulerian, Flag::distance_regular}) {
    if (to_string(f) == text) return f;
  }
  throw Error(Errc::parameter, fmt::format("unknown flag '{}'", text));
}

inline Metric parse_metric(std::string_view text) {
  for (Metric m : kMetrics) {
    if (to_string(m) == text) return m;
  }
  throw Error(Errc::parameter, fmt::format("unknown metric '{}'", text));
}

/// Booleans are encoded TRUE = 1, FALSE = 0. distance_regular is the strict
/// flag and min_odd_cycles counts odd cycles of the stored cycle basis.
inline double property_value(const DatasetRow& row, Property p) {
  const StructureProfile& s = row.structure;
  switch (p) {
    case Property::edges: return s.edges;
    case Property::diameter: return s.diameter;
    case Property::clique_number: return s.clique_number;
    case Property::bipartite: return s.bipartite ? 1.0 : 0.0;
    case Property::eulerian: return s.eulerian ? 1.0 : 0.0;
    case Property::distance_regular: return s.distance_regular_strict ? 1.0 : 0.0;
    case Property::cut_vertices: return s.cut_vertex_count;
    case Property::min_odd_cycles: return s.basis_odd_cycle_count;
    case Property::group_size: return static_cast<double>(row.symmetry.group_size);
    case Property::orbit_count: return row.symmetry.orbit_count;
    case Property::odd_girth_cycles: return s.min_odd_cycle_count;
  }
  return 0.0;
}

inline bool flag_value(const DatasetRow& row, Flag f) {
  switch (f) {
    case Flag::bipartite: return row.structure.bipartite;
    case Flag::eulerian: return row.structure.eulerian;
    case Flag::distance_regular: return row.structure.distance_regular_strict;
  }
  return false;
}

inline std::optional<double> metric_value(const QaoaOutcome& o, Metric m) {
  switch (m) {
    case Metric::exp_c: return o.exp_c;
    case Metric::prob_cmax: return o.prob_cmax;
    case Metric::ratio: return o.ratio;
    case Metric::delta_ratio: return o.delta_ratio;
  }
  return std::nullopt;
}

/// Product-moment correlation with n-denominator moments. NA for fewer than
/// two points or a constant vector.
inline std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(Errc::shape, fmt::format("pearson: lengths {} and {} differ", x.size(), y.size()));
  }
  const std::size_t n = x.size();
  if (n < 2) return std::nullopt;
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
  };
  if (constant(x) || constant(y)) return std::nullopt;

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

struct CorrelationCell {
  int n = 0;
  int p = 0;
  Property property = Property::edges;
  Metric metric = Metric::exp_c;
  std::optional<double> r;
  int sample_size = 0;
};

namespace analysis_detail {

struct Joined {
  const DatasetRow* row;
  const QaoaOutcome* outcome;
};

/// Pairs every n-vertex profile with its depth-p outcome by graph id.
inline std::vector<Joined> join(std::span<const DatasetRow> rows, std::span<const QaoaOutcome> outcomes, int n, int p) {
  std::map<std::uint64_t, const QaoaOutcome*> by_id;
  for (const QaoaOutcome& o : outcomes) {
    if (o.n == n && o.p == p) by_id.emplace(o.graph_id, &o);
  }
  std::vector<Joined> joined;
  std::vector<std::uint64_t> missing;
  std::map<std::uint64_t, bool> seen;
  for (const DatasetRow& r : rows) {
    if (r.n != n) continue;
    seen[r.graph_id] = true;
    const auto it = by_id.find(r.graph_id);
    if (it == by_id.end()) {
      missing.push_back(r.graph_id);
    } else {
      joined.push_back({&r, it->second});
    }
  }
  if (!missing.empty()) {
    throw Error(Errc::missing_data, fmt::format("n = {}, p = {}: no outcome for graph ids {}", n, p, fmt::join(missing, " ")));
  }
  for (const auto& [id, o] : by_id) {
    if (!seen.contains(id)) missing.push_back(id);
  }
  if (!missing.empty()) {
    throw Error(Errc::missing_data, fmt::format("n = {}, p = {}: no profile for graph ids {}", n, p, fmt::join(missing, " ")));
  }
  if (joined.empty()) throw Error(Errc::missing_data, fmt::format("n = {}, p = {}: no graphs", n, p));
  return joined;
}

}  // namespace analysis_detail

/// One cell per (property, metric). Graphs whose metric is NA are dropped
/// from that cell only.
inline std::vector<CorrelationCell> correlation_table(std::span<const DatasetRow> rows,
                                                      std::span<const QaoaOutcome> outcomes, int n, int p,
                                                      std::span<const Property> properties = kTableProperties) {
  const auto joined = analysis_detail::join(rows, outcomes, n, p);
  std::vector<CorrelationCell> cells;
  for (Property prop : properties) {
    for (Metric metric : kMetrics) {
      std::vector<double> x, y;
      for (const auto& j : joined) {
        if (const auto v = metric_value(*j.outcome, metric)) {
          x.push_back(property_value(*j.row, prop));
          y.push_back(*v);
        }
      }
      cells.push_back({n, p, prop, metric, pearson(x, y), static_cast<int>(x.size())});
    }
  }
  return cells;
}

struct GroupAverageRow {
  int n = 0;
  int p = 0;
  Flag flag = Flag::bipartite;
  bool member = true;
  int sample_size = 0;
  int delta_sample_size = 0;
  std::optional<double> mean_prob;
  std::optional<double> mean_exp_c;
  std::optional<double> mean_ratio;
  std::optional<double> mean_delta;
};

/// Members first, then non-members.
inline std::pair<GroupAverageRow, GroupAverageRow> group_averages(std::span<const DatasetRow> rows,
                                                                  std::span<const QaoaOutcome> outcomes, int n, int p,
                                                                  Flag flag) {
  const auto joined = analysis_detail::join(rows, outcomes, n, p);
  auto average = [&](bool member) {
    GroupAverageRow g;
    g.n = n;
    g.p = p;
    g.flag = flag;
    g.member = member;
    double prob = 0.0, exp_c = 0.0, ratio = 0.0, delta = 0.0;
    for (const auto& j : joined) {
      if (flag_value(*j.row, flag) != member) continue;
      ++g.sample_size;
      prob += j.outcome->prob_cmax;
      exp_c += j.outcome->exp_c;
      ratio += j.outcome->ratio;
      if (j.outcome->delta_ratio) {
        ++g.delta_sample_size;
        delta += *j.outcome->delta_ratio;
      }
    }
    if (g.sample_size > 0) {
      const double k = g.sample_size;
      g.mean_prob = prob / k;
      g.mean_exp_c = exp_c / k;
      g.mean_ratio = ratio / k;
    }
    if (g.delta_sample_size > 0) g.mean_delta = delta / g.delta_sample_size;
    return g;
  };
  return {average(true), average(false)};
}

struct HistogramSeries {
  std::string subgroup;
  int sample_size = 0;
  std::vector<double> fractions;
};

struct HistogramSpec {
  Metric metric = Metric::prob_cmax;
  std::vector<double> edges;
  std::vector<HistogramSeries> series;
};

/// Uniform bins over [0, 1]; the last bin is closed on the right. Values a
/// hair outside the range (rounding) land in the end bins.
inline HistogramSpec histogram(std::span<const DatasetRow> rows, std::span<const QaoaOutcome> outcomes, int n, int p,
                               Flag flag, Metric metric, int bins = 20) {
  if (bins < 1) throw Error(Errc::parameter, "histogram needs at least one bin");
  const auto joined = analysis_detail::join(rows, outcomes, n, p);
  HistogramSpec h;
  h.metric = metric;
  for (int i = 0; i <= bins; ++i) h.edges.push_back(static_cast<double>(i) / bins);

  const std::string name(to_string(flag));
  for (bool member : {true, false}) {
    HistogramSeries s{member ? name : "non-" + name, 0, std::vector<double>(static_cast<std::size_t>(bins), 0.0)};
    for (const auto& j : joined) {
      if (flag_value(*j.row, flag) != member) continue;
      const auto v = metric_value(*j.outcome, metric);
      if (!v) continue;
      const int bin = std::clamp(static_cast<int>(std::floor(*v * bins)), 0, bins - 1);
      s.fractions[static_cast<std::size_t>(bin)] += 1.0;
      ++s.sample_size;
    }
    if (s.sample_size > 0) {
      for (double& f : s.fractions) f /= s.sample_size;
    }
    h.series.push_back(std::move(s));
  }
  return h;
}

struct SignCell {
  Property property = Property::edges;
  Metric metric = Metric::exp_c;
  std::optional<double> mean_r;
  /// '+', '-' or ' '.
  char symbol = ' ';
};

inline constexpr double kSignThreshold = 0.1;

inline char sign_symbol(std::optional<double> mean_r) {
  if (!mean_r) return ' ';
  if (*mean_r >= kSignThreshold) return '+';
  if (*mean_r <= -kSignThreshold) return '-';
  return ' ';
}

/// Mean r over the p >= 1 cells supplied, per (property, metric); NA cells
/// are left out of the mean.
inline std::vector<SignCell> sign_summary(std::span<const CorrelationCell> cells) {
  std::vector<std::pair<Property, Metric>> order;
  std::map<std::pair<Property, Metric>, std::pair<double, int>> sums;
  for (const CorrelationCell& c : cells) {
    if (c.p < 1) continue;
    const auto key = std::make_pair(c.property, c.metric);
    auto [it, inserted] = sums.try_emplace(key, 0.0, 0);
    if (inserted) order.push_back(key);
    if (c.r) {
      it->second.first += *c.r;
      ++it->second.second;
    }
  }
  std::vector<SignCell> out;
  for (const auto& key : order) {
    const auto [sum, count] = sums.at(key);
    SignCell s;
    s.property = key.first;
    s.metric = key.second;
    if (count > 0) s.mean_r = sum / count;
    s.symbol = sign_symbol(s.mean_r);
    out.push_back(s);
  }
  return out;
}

// CSV output ---------------------------------------------------------------

inline void write_correlations(std::ostream& out, std::span<const CorrelationCell> cells) {
  out << "n,p,property,metric,r,sample_size\n";
  for (const CorrelationCell& c : cells) {
    out << csv::join({std::to_string(c.n), std::to_string(c.p), std::string(to_string(c.property)),
                      std::string(to_string(c.metric)), csv::real(c.r), std::to_string(c.sample_size)})
        << '\n';
  }
}

inline void write_group_averages(std::ostream& out, std::span<const GroupAverageRow> rows) {
  out << "n,p,flag,polarity,mean_prob,mean_exp_c,mean_ratio,mean_delta\n";
  for (const GroupAverageRow& g : rows) {
    out << csv::join({std::to_string(g.n), std::to_string(g.p), std::string(to_string(g.flag)),
                      g.member ? "member" : "non-member", csv::real(g.mean_prob), csv::real(g.mean_exp_c),
                      csv::real(g.mean_ratio), csv::real(g.mean_delta)})
        << '\n';
  }
}

inline void write_histogram(std::ostream& out, const HistogramSpec& h) {
  out << "bin_lo,bin_hi,subgroup,fraction\n";
  for (const HistogramSeries& s : h.series) {
    for (std::size_t b = 0; b < s.fractions.size(); ++b) {
      out << csv::join({csv::real(h.edges[b]), csv::real(h.edges[b + 1]), s.subgroup, csv::real(s.fractions[b])})
          << '\n';
    }
  }
}

inline void write_signs(std::ostream& out, std::span<const SignCell> cells) {
  out << "property,metric,mean_r,symbol\n";
  for (const SignCell& s : cells) {
    out << csv::join({std::string(to_string(s.property)), std::string(to_string(s.metric)), csv::real(s.mean_r),
                      s.symbol == ' ' ? std::string() : std::string(1, s.symbol)})
        << '\n';
  }
}

}  // namespace qgl
