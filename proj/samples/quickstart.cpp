// Profiles a few small graphs and optimizes QAOA MaxCut angles up to p = 2.

#include <qgl/qgl.hpp>

#include <fmt/format.h>

int main() {
  using namespace qgl;
  for (const Graph& g : {families::cycle(4), families::paw(), families::complete(4)}) {
    const DatasetRow row = make_dataset_row(g);
    fmt::print("{}  edges={} diameter={} bipartite={} |Aut|={}\n", row.graph6, row.structure.edges,
               row.structure.diameter, row.structure.bipartite, row.symmetry.group_size);
    for (const QaoaOutcome& o : optimize_depths(g, 2, 50, 1)) {
      fmt::print("  p={} <C>={:.4f} P(Cmax)={:.4f} ratio={:.4f}\n", o.p, o.exp_c, o.prob_cmax, o.ratio);
    }
  }
}
