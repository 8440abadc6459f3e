#include <qgl/enumerate.hpp>
#include <qgl/families.hpp>
#include <qgl/graph6.hpp>
#include <qgl/structure.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

using namespace qgl;

namespace {

std::vector<Graph> all_connected_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 3; n <= max_n; ++n) {
    for (Graph& g : enumerate_connected(n)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1000));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v) {
      if (g.has_edge(u, v)) d[u][v] = 1;
    }
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

int clique_by_subsets(const Graph& g) {
  int best = 0;
  for (unsigned s = 1; s < (1u << g.order()); ++s) {
    bool clique = true;
    for (int u = 0; u < g.order() && clique; ++u)
      for (int v = u + 1; v < g.order() && clique; ++v)
        if ((s >> u & 1) && (s >> v & 1) && !g.has_edge(u, v)) clique = false;
    if (clique) best = std::max(best, std::popcount(s));
  }
  return best;
}

// Counts simple cycles by length: every cyclic vertex sequence, each cycle
// seen 2k times (k rotations, two directions).
std::vector<int> cycle_counts_by_permutation(const Graph& g) {
  const int n = g.order();
  std::vector<long> raw(static_cast<std::size_t>(n) + 1, 0);
  for (unsigned s = 1; s < (1u << n); ++s) {
    const int k = std::popcount(s);
    if (k < 3) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) verts.push_back(v);
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = g.has_edge(verts[i], verts[(i + 1) % k]);
      raw[k] += ok;
    } while (std::next_permutation(verts.begin(), verts.end()));
  }
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 3; k <= n; ++k) counts[k] = static_cast<int>(raw[k] / (2 * k));
  return counts;
}

// GF(2) rank of edge-incidence vectors.
int cycle_space_rank(const Graph& g, const std::vector<Cycle>& cycles) {
  const auto edges = g.edges();
  std::vector<std::uint64_t> rows;
  for (const Cycle& c : cycles) {
    std::uint64_t mask = 0;
    for (const Edge& e : cycle_edges(c)) {
      const Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
      const auto it = std::find(edges.begin(), edges.end(), key);
      EXPECT_NE(it, edges.end());
      mask ^= std::uint64_t{1} << (it - edges.begin());
    }
    rows.push_back(mask);
  }
  int rank = 0;
  for (int bit = 0; bit < 64; ++bit) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](std::uint64_t r) { return r >> bit & 1; });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[static_cast<std::size_t>(rank)]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != static_cast<std::size_t>(rank) && (rows[i] >> bit & 1)) rows[i] ^= rows[static_cast<std::size_t>(rank)];
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Distances, Examples) {
  const DistanceMatrix k4 = all_pairs_distances(families::complete(4));
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) EXPECT_EQ(k4(u, v), u == v ? 0 : 1);
  EXPECT_EQ(all_pairs_distances(families::path(4))(0, 3), 3);
  const DistanceMatrix c6 = all_pairs_distances(families::cycle(6));
  for (int u = 0; u < 6; ++u) EXPECT_EQ(c6(u, (u + 3) % 6), 3);
}

TEST(Distances, AgreeWithFloydWarshall) {
  for (const Graph& g : all_connected_up_to(6)) {
    const DistanceMatrix d = all_pairs_distances(g);
    const auto ref = floyd_warshall(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) ASSERT_EQ(d(u, v), ref[u][v]);
  }
}

TEST(Distances, DisconnectedInputIsRejected) {
  const Graph g(4, {{0, 1}, {2, 3}});
  for (auto call : {+[](const Graph& h) { all_pairs_distances(h); }, +[](const Graph& h) { diameter(h); },
                    +[](const Graph& h) { cut_vertices(h); },
                    +[](const Graph& h) { distance_regular_test(h, DistanceRegularity::strict); }}) {
    try {
      call(g);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::disconnected_graph);
    }
  }
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(families::complete(8)), 1);
  EXPECT_EQ(diameter(families::cycle(8)), 4);
  EXPECT_EQ(diameter(families::star(7)), 2);
}

TEST(Clique, Examples) {
  EXPECT_EQ(clique_number(families::complete(5)), 5);
  EXPECT_EQ(clique_number(families::cycle(5)), 2);
  EXPECT_EQ(clique_number(families::paw()), 3);
}

TEST(Clique, AgreesWithSubsetSearch) {
  for (const Graph& g : all_connected_up_to(7)) ASSERT_EQ(clique_number(g), clique_by_subsets(g)) << encode_graph6(g);
}

TEST(CutVertices, Examples) {
  EXPECT_TRUE(cut_vertices(families::cycle(4)).empty());
  EXPECT_EQ(cut_vertices(families::star(3)), (std::vector<int>{0}));
  EXPECT_EQ(cut_vertices(families::path(4)), (std::vector<int>{1, 2}));
}

TEST(CutVertices, LowpointMatchesDeletion) {
  for (const Graph& g : all_connected_up_to(7)) {
    std::vector<int> expected;
    for (int v = 0; v < g.order(); ++v) {
      Graph h(g.order() - 1);
      for (const Edge& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        h.add_edge(e.u - (e.u > v), e.v - (e.v > v));
      }
      if (!is_connected(h)) expected.push_back(v);
    }
    ASSERT_EQ(cut_vertices(g), expected) << encode_graph6(g);
  }
}

TEST(Bipartite, Examples) {
  EXPECT_TRUE(bipartite_test(families::cycle(6)));
  EXPECT_FALSE(bipartite_test(families::cycle(5)));
  EXPECT_TRUE(bipartite_test(families::complete_bipartite(3, 3)));
}

TEST(Eulerian, Examples) {
  EXPECT_TRUE(eulerian_test(families::cycle(4)));
  EXPECT_FALSE(eulerian_test(families::path(4)));
  EXPECT_TRUE(eulerian_test(families::complete(5)));
  EXPECT_FALSE(eulerian_test(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
}

TEST(DistanceRegular, Examples) {
  for (auto mode : {DistanceRegularity::layered, DistanceRegularity::strict}) {
    EXPECT_TRUE(distance_regular_test(families::cycle(5), mode));
    EXPECT_FALSE(distance_regular_test(families::path(4), mode));
  }
  EXPECT_TRUE(distance_regular_test(families::triangular_prism(), DistanceRegularity::layered));
  EXPECT_FALSE(distance_regular_test(families::triangular_prism(), DistanceRegularity::strict));
}

TEST(DistanceRegular, StrictCensusUpToSixVertices) {
  std::vector<std::string> strict;
  for (const Graph& g : all_connected_up_to(6)) {
    if (distance_regular_test(g, DistanceRegularity::strict)) strict.push_back(encode_graph6(g));
  }
  std::set<std::string> expected;
  for (const Graph& g : {families::complete(3), families::cycle(4), families::complete(4), families::cycle(5),
                         families::complete(5), families::cycle(6), families::complete(6),
                         families::complete_bipartite(3, 3), families::octahedron()}) {
    expected.insert(encode_graph6(canonical_graph(g)));
  }
  EXPECT_EQ(std::set<std::string>(strict.begin(), strict.end()), expected);
}

TEST(CycleCensus, Examples) {
  const CycleCensus c5 = cycle_census(families::cycle(5));
  EXPECT_EQ(c5.counts[5], 1);
  EXPECT_EQ(c5.counts[3] + c5.counts[4], 0);
  const CycleCensus k4 = cycle_census(families::complete(4));
  EXPECT_EQ(k4.counts[3], 4);
  EXPECT_EQ(k4.counts[4], 3);
  EXPECT_EQ(k4.cycles.size(), 7u);
  const CycleCensus star = cycle_census(families::star(3));
  EXPECT_TRUE(star.cycles.empty());
  EXPECT_TRUE(cycle_basis(families::star(3)).empty());
  EXPECT_EQ(cycle_basis(families::cycle(5)).size(), 1u);
}

TEST(CycleCensus, AgreesWithPermutationCount) {
  for (const Graph& g : all_connected_up_to(6)) ASSERT_EQ(cycle_census(g).counts, cycle_counts_by_permutation(g));
}

TEST(CycleBasis, MatchesStackBasedReferenceOutput) {
  // Outputs of the stack-based fundamental cycle basis rooted at vertex 0
  // from an independent implementation (networkx cycle_basis).
  const std::vector<std::pair<std::string, std::vector<Cycle>>> cases{
      {"C~", {{1, 3, 0}, {2, 3, 0}, {1, 2, 0}}},
      {"DQw", {{2, 4, 0}}},
      {"E?zW", {{4, 5, 0}, {4, 1, 5}}},
      {"FCpb_", {{3, 6, 1, 4, 0}, {5, 2, 6, 1}}},
      {"G?bFF_", {{6, 2, 7, 0}, {5, 1, 7, 0}, {6, 1, 7, 0}}},
  };
  for (const auto& [text, expected] : cases) EXPECT_EQ(cycle_basis(decode_graph6(text)), expected) << text;
}

TEST(CycleBasis, SpansTheCycleSpace) {
  for (const Graph& g : all_connected_up_to(7)) {
    const auto basis = cycle_basis(g);
    ASSERT_EQ(static_cast<int>(basis.size()), g.edge_count() - g.order() + 1);
    for (const Cycle& c : basis) {
      ASSERT_GE(c.size(), 3u);
      for (const Edge& e : cycle_edges(c)) ASSERT_TRUE(g.has_edge(e.u, e.v));
    }
    ASSERT_EQ(cycle_space_rank(g, basis), static_cast<int>(basis.size()));
  }
}

TEST(OddCycles, Examples) {
  EXPECT_EQ(min_odd_cycle_count(cycle_census(families::cycle(4))), 0);
  EXPECT_EQ(min_odd_cycle_count(cycle_census(families::complete(4))), 4);
  EXPECT_EQ(min_odd_cycle_count(cycle_census(families::cycle(5))), 1);
  // Odd girth 5 with a triangle-free graph holding two 5-cycles.
  const Graph two_pentagons(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 2}});
  const CycleCensus census = cycle_census(two_pentagons);
  EXPECT_EQ(census.counts[3], 0);
  EXPECT_EQ(min_odd_cycle_count(census), census.counts[5]);
}

TEST(Profile, InvariantsOnAllGraphsUpToSeven) {
  for (const Graph& g : all_connected_up_to(7)) {
    const StructureProfile s = structure_profile(g);
    const int n = g.order();
    ASSERT_GE(s.diameter, 1);
    ASSERT_LE(s.diameter, n - 1);
    int odd = 0;
    for (std::size_t k = 3; k < s.cycle_counts.size(); k += 2) odd += s.cycle_counts[k];
    ASSERT_EQ(s.bipartite, odd == 0);
    ASSERT_EQ(s.min_odd_cycle_count == 0, s.bipartite);
    ASSERT_EQ(s.basis_odd_cycle_count == 0, s.bipartite);
    const bool even = std::all_of(s.degree_sequence.begin(), s.degree_sequence.end(), [](int d) { return d % 2 == 0; });
    ASSERT_EQ(s.eulerian, even);
    ASSERT_EQ(s.cut_vertex_count, static_cast<int>(s.cut_vertices.size()));
    ASSERT_LE(s.cut_vertex_count, n - 2);
    ASSERT_EQ(std::accumulate(s.degree_sequence.begin(), s.degree_sequence.end(), 0), 2 * s.edges);
    ASSERT_TRUE(std::is_sorted(s.degree_sequence.rbegin(), s.degree_sequence.rend()));
    ASSERT_EQ(static_cast<int>(s.cycle_basis.size()), s.edges - n + 1);
    if (s.distance_regular_strict) ASSERT_TRUE(s.distance_regular_layered);
    if (s.distance_regular_layered) ASSERT_EQ(s.degree_sequence.front(), s.degree_sequence.back());
    ASSERT_EQ(s.basis_odd_cycle_count, odd_cycle_count(s.cycle_basis));
  }
}

TEST(Profile, RejectsLargeOrDisconnectedGraphs) {
  EXPECT_THROW(structure_profile(families::cycle(9)), Error);
  EXPECT_THROW(structure_profile(Graph(4, {{0, 1}, {2, 3}})), Error);
}
