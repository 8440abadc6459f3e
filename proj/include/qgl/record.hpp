#pragma once

#include <qgl/graph.hpp>
#include <qgl/graph6.hpp>
#include <qgl/structure.hpp>
#include <qgl/symmetry.hpp>

#include <cstdint>
#include <string>

namespace qgl {

/// Everything stored about one graph in the per-n dataset file.
struct DatasetRow {
  std::uint64_t graph_id = 0;
  int n = 0;
  std::string graph6;
  StructureProfile structure;
  AutomorphismSummary symmetry;

  friend bool operator==(const DatasetRow&, const DatasetRow&) = default;
};

inline DatasetRow make_dataset_row(const Graph& g) {
  DatasetRow row;
  row.graph_id = g.id.value_or(0);
  row.n = g.order();
  row.graph6 = encode_graph6(g);
  row.structure = structure_profile(g);
  row.symmetry = automorphism_group(g);
  return row;
}

}  // namespace qgl
