#include <qgl/enumerate.hpp>
#include <qgl/families.hpp>
#include <qgl/qaoa/maxcut.hpp>
#include <qgl/qaoa/metrics.hpp>
#include <qgl/qaoa/simulator.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qgl;

namespace {

using Matrix = std::vector<std::vector<Amplitude>>;

// Dense reference: the mixer as an explicit Kronecker product.
Matrix mixer_matrix(int n, double beta) {
  const Amplitude c = std::cos(beta), s = Amplitude(0.0, -std::sin(beta));
  Matrix m{{1.0}};
  for (int q = 0; q < n; ++q) {
    const std::size_t d = m.size();
    Matrix next(2 * d, std::vector<Amplitude>(2 * d));
    // Qubit q is bit q of the index, so it becomes the most significant factor.
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) next[a * d + i][b * d + j] = (a == b ? c : s) * m[i][j];
    m = std::move(next);
  }
  return m;
}

Statevector reference_evolve(const Graph& g, const AngleVector& angles) {
  const int n = g.order();
  const std::size_t dim = std::size_t{1} << n;
  Statevector psi(dim, Amplitude(1.0 / std::sqrt(static_cast<double>(dim))));
  for (int l = 0; l < angles.depth(); ++l) {
    for (std::size_t z = 0; z < dim; ++z) {
      int cut = 0;
      for (const Edge& e : g.edges()) cut += ((z >> e.u) & 1) != ((z >> e.v) & 1);
      psi[z] *= std::exp(Amplitude(0.0, -angles.gammas[l] * cut));
    }
    const Matrix m = mixer_matrix(n, angles.betas[l]);
    Statevector out(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) out[i] += m[i][j] * psi[j];
    psi = std::move(out);
  }
  return psi;
}

AngleVector random_angles(std::mt19937_64& rng, int p) {
  std::uniform_real_distribution<double> u(-7.0, 7.0);
  AngleVector a = AngleVector::zeros(p);
  for (auto& x : a.gammas) x = u(rng);
  for (auto& x : a.betas) x = u(rng);
  return a;
}

double norm(const Statevector& psi) {
  double total = 0.0;
  for (const Amplitude& z : psi) total += std::norm(z);
  return total;
}

}  // namespace

TEST(MaxCut, Examples) {
  const auto c4 = maxcut_bruteforce(families::cycle(4));
  EXPECT_EQ(c4.cmax, 4);
  EXPECT_EQ(c4.optimal_count, 2u);
  const auto k4 = maxcut_bruteforce(families::complete(4));
  EXPECT_EQ(k4.cmax, 4);
  EXPECT_EQ(k4.optimal_count, 6u);
  const auto k5 = maxcut_bruteforce(families::complete(5));
  EXPECT_EQ(k5.cmax, 6);
  EXPECT_EQ(k5.optimal_count, 20u);
}

TEST(MaxCut, SummaryInvariants) {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const auto mc = maxcut_bruteforce(g);
      const auto cost = cost_vector(g);
      ASSERT_GE(mc.cmax, 1);
      ASSERT_LE(mc.cmax, g.edge_count());
      ASSERT_EQ(mc.optimal_count % 2, 0u);
      std::uint64_t count = 0;
      for (std::size_t z = 0; z < cost.size(); ++z) {
        ASSERT_EQ(static_cast<bool>(mc.optimal_mask[z]), cost[z] == mc.cmax);
        count += mc.optimal_mask[z];
      }
      ASSERT_EQ(count, mc.optimal_count);
    }
  }
}

TEST(CostVector, Examples) {
  EXPECT_EQ(cost_vector(families::paw())[0], 0);
  EXPECT_EQ(cost_vector(families::complete(2))[0b01], 1);
  EXPECT_EQ(cost_vector(families::cycle(4))[0b0101], 4);
}

TEST(CostVector, CountsCutEdges) {
  for (const Graph& g : enumerate_connected(6)) {
    const auto cost = cost_vector(g);
    for (std::size_t z = 0; z < cost.size(); ++z) {
      int cut = 0;
      for (const Edge& e : g.edges()) cut += ((z >> e.u) & 1) != ((z >> e.v) & 1);
      ASSERT_EQ(cost[z], cut);
    }
  }
}

TEST(Simulator, MatchesDenseReference) {
  std::mt19937_64 rng(1);
  for (const Graph& g : {families::complete(2), families::paw(), families::cycle(4), families::star(3),
                         Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}})}) {
    for (int p = 0; p <= 3; ++p) {
      const AngleVector a = random_angles(rng, p);
      const Statevector got = evolve(g, a);
      const Statevector want = reference_evolve(g, a);
      for (std::size_t z = 0; z < got.size(); ++z) ASSERT_LT(std::abs(got[z] - want[z]), 1e-12);
    }
  }
}

TEST(Simulator, UniformState) {
  const Graph c4 = families::cycle(4);
  const QaoaSimulator sim(c4);
  const Statevector psi = sim.uniform_state();
  EXPECT_DOUBLE_EQ(sim.expectation(psi), 2.0);
  EXPECT_DOUBLE_EQ(sim.prob_cmax(psi), 0.125);
  EXPECT_DOUBLE_EQ(expectation(c4, psi), 2.0);
  EXPECT_DOUBLE_EQ(prob_cmax(c4, psi, sim.maxcut()), 0.125);
  for (const Amplitude& z : psi) EXPECT_NEAR(std::norm(z), 1.0 / 16, 1e-15);
}

TEST(Simulator, ZeroAnglesMatchUniformState) {
  for (const Graph& g : enumerate_connected(5)) {
    const QaoaSimulator sim(g);
    for (int p = 0; p <= 3; ++p) {
      ASSERT_NEAR(sim.expectation(AngleVector::zeros(p)), g.edge_count() / 2.0, 1e-12);
      ASSERT_NEAR(sim.prob_cmax(sim.evolve(AngleVector::zeros(p))), sim.prob_cmax(sim.uniform_state()), 1e-12);
    }
  }
}

TEST(Simulator, NormIsPreserved) {
  std::mt19937_64 rng(2);
  for (const Graph& g : enumerate_connected(6)) {
    ASSERT_NEAR(norm(evolve(g, random_angles(rng, 3))), 1.0, 1e-12);
  }
}

TEST(Simulator, Periodicity) {
  std::mt19937_64 rng(3);
  for (const Graph& g : enumerate_connected(5)) {
    const QaoaSimulator sim(g);
    const AngleVector a = random_angles(rng, 2);
    AngleVector shifted = a;
    shifted.gammas[0] += kGammaPeriod;
    shifted.betas[1] += kBetaPeriod;
    const Statevector x = sim.evolve(a), y = sim.evolve(shifted);
    ASSERT_NEAR(sim.expectation(x), sim.expectation(y), 1e-10);
    ASSERT_NEAR(sim.prob_cmax(x), sim.prob_cmax(y), 1e-10);
    ASSERT_NEAR(sim.expectation(a.canonical()), sim.expectation(a), 1e-10);
  }
}

TEST(Simulator, ExpectationIsCostWeightedProbability) {
  std::mt19937_64 rng(4);
  for (const Graph& g : enumerate_connected(5)) {
    const QaoaSimulator sim(g);
    const Statevector psi = sim.evolve(random_angles(rng, 2));
    const auto cost = cost_vector(g);
    double total = 0.0;
    for (std::size_t z = 0; z < psi.size(); ++z) total += cost[z] * std::norm(psi[z]);
    ASSERT_NEAR(sim.expectation(psi), total, 1e-12);
    const double prob = sim.prob_cmax(psi);
    ASSERT_GE(prob, 0.0);
    ASSERT_LE(prob, 1.0 + 1e-12);
  }
}

TEST(Simulator, AdjointGradientMatchesCentralDifferences) {
  std::mt19937_64 rng(5);
  const auto graphs = enumerate_connected(5);
  const double h = 1e-5;
  for (int sample = 0; sample < 100; ++sample) {
    const Graph& g = graphs[static_cast<std::size_t>(sample) % graphs.size()];
    const QaoaSimulator sim(g);
    const int p = 1 + sample % 3;
    const AngleVector a = random_angles(rng, p);
    std::vector<double> grad(static_cast<std::size_t>(2 * p));
    const double value = sim.expectation_and_gradient(a, grad);
    ASSERT_NEAR(value, sim.expectation(a), 1e-12);
    const std::vector<double> x = a.flat();
    for (std::size_t k = 0; k < x.size(); ++k) {
      std::vector<double> up = x, down = x;
      up[k] += h;
      down[k] -= h;
      const double fd = (sim.expectation(AngleVector::from_flat(up)) - sim.expectation(AngleVector::from_flat(down))) / (2 * h);
      ASSERT_LE(std::abs(grad[k] - fd), 1e-6 * std::max(1.0, std::abs(fd))) << "sample " << sample << " k " << k;
    }
  }
}

TEST(AngleVector, CanonicalAndPadding) {
  const AngleVector a({-0.5, 7.0}, {4.0, -1.0});
  const AngleVector c = a.canonical();
  for (double g : c.gammas) {
    EXPECT_GE(g, 0.0);
    EXPECT_LT(g, kGammaPeriod);
  }
  for (double b : c.betas) {
    EXPECT_GE(b, 0.0);
    EXPECT_LT(b, kBetaPeriod);
  }
  const AngleVector p = a.padded(3);
  EXPECT_EQ(p.depth(), 3);
  EXPECT_EQ(p.gammas[2], 0.0);
  EXPECT_EQ(p.betas[2], 0.0);
  EXPECT_EQ(AngleVector::from_flat(a.flat()).gammas, a.gammas);
}

TEST(Metrics, DeltaRatio) {
  EXPECT_DOUBLE_EQ(*delta_ratio(3.0, 2.0, 4), 0.5);
  EXPECT_FALSE(delta_ratio(4.0, 4.0, 4).has_value());
  EXPECT_DOUBLE_EQ(*delta_ratio(2.5, 2.5, 4), 0.0);
}

TEST(Metrics, BundleFillsRatiosAndDeltas) {
  const Graph c4 = families::cycle(4);
  const QaoaSimulator sim(c4);
  std::vector<QaoaOutcome> rows{uniform_outcome(sim, 1)};
  for (double exp_c : {3.0, 4.0, 4.0}) {
    QaoaOutcome o;
    o.p = static_cast<int>(rows.size());
    o.exp_c = exp_c;
    rows.push_back(o);
  }
  const auto out = metrics_bundle(c4, sim.maxcut(), rows);
  EXPECT_FALSE(out[0].delta_ratio.has_value());
  EXPECT_DOUBLE_EQ(out[0].ratio, 0.5);
  EXPECT_DOUBLE_EQ(*out[1].delta_ratio, 0.5);
  EXPECT_DOUBLE_EQ(out[1].ratio, 0.75);
  EXPECT_DOUBLE_EQ(*out[2].delta_ratio, 1.0);
  EXPECT_FALSE(out[3].delta_ratio.has_value());
  for (const auto& o : out) EXPECT_EQ(o.cmax, 4);
}

TEST(Metrics, BundleRequiresConsecutiveDepths) {
  const Graph c4 = families::cycle(4);
  const QaoaSimulator sim(c4);
  QaoaOutcome skipped;
  skipped.p = 2;
  try {
    metrics_bundle(c4, sim.maxcut(), {uniform_outcome(sim, 1), skipped});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::sequencing);
  }
}
