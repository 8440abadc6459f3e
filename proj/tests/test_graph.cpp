#include <qgl/families.hpp>
#include <qgl/graph.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace qgl;

TEST(Graph, AdjacencyIsSymmetricWithoutLoops) {
  const Graph g = families::triangular_prism();
  for (int u = 0; u < g.order(); ++u) {
    EXPECT_FALSE(g.has_edge(u, u));
    EXPECT_EQ(g.neighbors(u) >> g.order(), 0);
    for (int v = 0; v < g.order(); ++v) EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
  }
  EXPECT_EQ(g.edge_count(), 9);
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
  EXPECT_THROW(Graph(17), Error);
}

TEST(Graph, DegreeSequenceIsNonIncreasing) {
  EXPECT_EQ(degree_sequence(families::star(3)), (std::vector<int>{3, 1, 1, 1}));
  EXPECT_EQ(degree_sequence(families::paw()), (std::vector<int>{3, 2, 2, 1}));
}

TEST(Relabel, IdentityKeepsGraph) {
  const Graph g = families::paw();
  EXPECT_EQ(relabel(g, std::vector<int>{0, 1, 2, 3}), g);
}

TEST(Relabel, AnyPermutationOfCompleteGraphIsComplete) {
  std::mt19937 rng(3);
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  for (int t = 0; t < 20; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(relabel(families::complete(5), perm), families::complete(5));
  }
}

TEST(Relabel, SwapOnPath) {
  const Graph path = families::path(3);
  const Graph swapped = relabel(path, std::vector<int>{1, 0, 2});
  EXPECT_EQ(swapped.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(Relabel, MovesEdgesThroughThePermutation) {
  const Graph g = families::paw();
  const std::vector<int> perm{2, 0, 3, 1};
  const Graph h = relabel(g, perm);
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) EXPECT_EQ(g.has_edge(u, v), h.has_edge(perm[u], perm[v]));
  }
}

TEST(Relabel, RejectsNonBijection) {
  const Graph g = families::path(3);
  try {
    relabel(g, std::vector<int>{0, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_permutation);
  }
  EXPECT_THROW(relabel(g, std::vector<int>{0, 1}), Error);
  EXPECT_THROW(relabel(g, std::vector<int>{0, 1, 3}), Error);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(families::cycle(4)));
  EXPECT_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(Graph(1)));
}
