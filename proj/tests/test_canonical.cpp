#include <qgl/canonical.hpp>
#include <qgl/enumerate.hpp>
#include <qgl/families.hpp>
#include <qgl/graph6.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace qgl;

namespace {

// Isomorphism by trying every bijection; fine up to 7 vertices.
bool isomorphic_by_search(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph random_graph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST(Canonical, CompleteGraphIsAllOnes) { EXPECT_EQ(canonical_form(families::complete(4)).bits(), "111111"); }

TEST(Canonical, PathAndTriangleDiffer) {
  EXPECT_NE(canonical_form(families::path(3)), canonical_form(families::complete(3)));
}

TEST(Canonical, RelabelledCycleKeepsItsForm) {
  std::mt19937_64 rng(5);
  const CanonicalCode c5 = canonical_form(families::cycle(5));
  for (int t = 0; t < 50; ++t) EXPECT_EQ(canonical_form(relabel(families::cycle(5), random_permutation(rng, 5))), c5);
}

TEST(Canonical, InvariantUnderHundredRandomRelabelings) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    const int n = 3 + k % 6;
    const Graph g = random_graph(rng, n, 0.45);
    const CanonicalCode code = canonical_form(g);
    for (int t = 0; t < 100; ++t) ASSERT_EQ(canonical_form(relabel(g, random_permutation(rng, n))), code);
  }
}

TEST(Canonical, LabelingMapsOntoTheCode) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    const Graph g = random_graph(rng, 2 + k % 7, 0.5);
    const CanonicalLabeling lab = canonical_labeling(g);
    EXPECT_EQ(relabel(g, lab.perm), lab.code.to_graph());
  }
}

TEST(Canonical, EqualFormsExactlyForIsomorphicPairs) {
  std::mt19937_64 rng(17);
  int isomorphic_pairs = 0;
  for (int k = 0; k < 1500; ++k) {
    const int n = 4 + k % 3;
    const Graph a = random_graph(rng, n, 0.5);
    const Graph b = random_graph(rng, n, 0.5);
    const bool same = isomorphic_by_search(a, b);
    isomorphic_pairs += same;
    ASSERT_EQ(canonical_form(a) == canonical_form(b), same) << encode_graph6(a) << " " << encode_graph6(b);
  }
  EXPECT_GT(isomorphic_pairs, 10);
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_connected(3).size(), 2u);
  EXPECT_EQ(enumerate_connected(4).size(), 6u);
  EXPECT_EQ(enumerate_connected(5).size(), 21u);
  EXPECT_EQ(enumerate_connected(6).size(), 112u);
}

TEST(Enumerate, AllClassCounts) {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_all_classes(n).size(), expected[static_cast<std::size_t>(n - 1)]);
}

TEST(Enumerate, ThreeVertices) {
  const auto graphs = enumerate_connected(3);
  ASSERT_EQ(graphs.size(), 2u);
  std::set<int> edge_counts{graphs[0].edge_count(), graphs[1].edge_count()};
  EXPECT_EQ(edge_counts, (std::set<int>{2, 3}));
}

TEST(Enumerate, SortedDistinctConnectedWithIds) {
  for (int n = 3; n <= 7; ++n) {
    const auto graphs = enumerate_connected(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      EXPECT_TRUE(is_connected(graphs[i]));
      EXPECT_EQ(graphs[i].id, i + 1);
      EXPECT_EQ(canonical_graph(graphs[i]), graphs[i]);
      if (i > 0) EXPECT_LT(canonical_form(graphs[i - 1]), canonical_form(graphs[i]));
    }
  }
}

TEST(Enumerate, SameClassesAsReferenceFiles) {
  for (int n = 3; n <= 7; ++n) {
    std::vector<CanonicalCode> ours, reference;
    for (const Graph& g : enumerate_connected(n)) ours.push_back(canonical_form(g));
    for (const Graph& g : read_graph6_file(std::string(QGL_FIXTURE_DIR) + "/graph" + std::to_string(n) + "c.g6")) {
      reference.push_back(canonical_form(g));
    }
    std::sort(reference.begin(), reference.end());
    EXPECT_EQ(ours, reference) << "n = " << n;
  }
}

TEST(Enumerate, RejectsUnsupportedOrders) {
  for (int n : {2, 9}) {
    try {
      enumerate_connected(n);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::unsupported_size);
    }
  }
}
