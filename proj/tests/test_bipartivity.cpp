#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bipnet/bipartivity.hpp"
#include "bipnet/error.hpp"
#include "bipnet/io.hpp"
#include "bipnet/matrices.hpp"
#include "support.hpp"

using namespace bipnet;
using testing_support::complete;
using testing_support::cycle;
using testing_support::make_graph;

namespace {

// Oracle values for K_3 from the Jacobi spectrum and exhaustive scan.
struct TriangleOracle {
  double b_K, b_A, b_N, b_c, f;
};

TriangleOracle triangle_oracle() {
  const auto a = oracle::adjacency(3, complete(3));
  const auto ka = oracle::jacobi_eigen(oracle::signless(a)).values;
  const auto aa = oracle::jacobi_eigen(a).values;
  const auto na = oracle::jacobi_eigen(oracle::normalized(a)).values;
  double sh = 0, ex = 0;
  for (double l : aa) {
    sh += std::sinh(l);
    ex += std::exp(l);
  }
  return {3.0 / (8.0 * 3.0) * ka.front(), 1.0 - std::abs(aa.front() / aa.back()), na.front() + 1.0, sh / ex,
          oracle::min_frustration(3, complete(3))};
}

TEST(Oracle, TriangleFrozenValues) {
  const auto o = triangle_oracle();
  EXPECT_NEAR(o.b_K, 0.125, 1e-12);
  EXPECT_NEAR(o.b_A, 0.5, 1e-12);
  EXPECT_NEAR(o.b_N, 0.5, 1e-12);
  EXPECT_NEAR(o.b_c, 0.15710, 1e-5);
  EXPECT_EQ(o.f, 1.0);
}

class Measures : public ::testing::TestWithParam<bool> {
protected:
  SolverConfig cfg() const { return GetParam() ? testing_support::krylov_config() : SolverConfig{}; }
};

INSTANTIATE_TEST_SUITE_P(Solver, Measures, ::testing::Values(false, true),
                         [](const auto& info) { return info.param ? "krylov" : "dense"; });

TEST_P(Measures, Triangle) {
  const Graph g = make_graph(3, complete(3));
  const auto o = triangle_oracle();
  EXPECT_NEAR(measure_bK(g, cfg()), o.b_K, 1e-8);
  EXPECT_NEAR(measure_bA(g, cfg()), o.b_A, 1e-8);
  EXPECT_NEAR(measure_bN(g, cfg()), o.b_N, 1e-8);
  EXPECT_NEAR(measure_bc(g, {}), o.b_c, 1e-12);
}

TEST_P(Measures, BipartiteGraphsAreZero) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const int nl = 2 + trial % 7, nr = 1 + trial % 5;
    const Graph g = make_graph(nl + nr, oracle::random_bipartite(nl, nr, 0.4, rng));
    EXPECT_NEAR(measure_bK(g, cfg()), 0.0, 1e-8);
    EXPECT_NEAR(measure_bA(g, cfg()), 0.0, 1e-8);
    EXPECT_NEAR(measure_bN(g, cfg()), 0.0, 1e-8);
    EXPECT_NEAR(measure_bc(g, {}), 0.0, 1e-8);
  }
  const Graph c4 = make_graph(4, cycle(4));
  EXPECT_NEAR(measure_bK(c4, cfg()), 0.0, 1e-8);
}

TEST_P(Measures, KnownValues) {
  std::vector<oracle::WEdge> star{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_NEAR(measure_bA(make_graph(4, star), cfg()), 0.0, 1e-8);
  EXPECT_NEAR(measure_bA(make_graph(4, complete(4)), cfg()), 2.0 / 3.0, 1e-8);
  EXPECT_NEAR(measure_bN(make_graph(2, {{0, 1}}), cfg()), 0.0, 1e-8);
}

TEST(MeasureCases, OddCycleRatioExamples) {
  EXPECT_NEAR(measure_bc(make_graph(2, {{0, 1}}), {}), 0.0, 1e-15);
  const Graph empty(3, {}, false, IdMap::identity(3));
  EXPECT_EQ(measure_bc(empty, {}), 0.0);
  const double want = (std::sinh(2.0) + 2 * std::sinh(-1.0)) / (std::exp(2.0) + 2 * std::exp(-1.0));
  EXPECT_NEAR(measure_bc(make_graph(3, complete(3)), {}), want, 1e-14);
  // Large eigenvalues must not overflow.
  const std::vector<double> big{800.0, -3.0, 2.0};
  EXPECT_NEAR(odd_cycle_ratio(big), 0.5, 1e-12);
}

TEST(MeasureCases, ScaleLimitForOddCycleRatio) {
  SolverConfig cfg;
  cfg.dense_threshold = 3;
  EXPECT_THROW(measure_bc(make_graph(4, cycle(4)), cfg), Error);
}

TEST(MeasureCases, EmptyGraphRejected) {
  const Graph empty(3, {}, false, IdMap::identity(3));
  try {
    measure_bA(empty, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::empty_graph);
  }
}

TEST(MeasureCases, IsolatedNodesIgnoredByNormalizedAndSignless) {
  const Graph g(5, {{0, 1, 1.0, std::nullopt}, {1, 2, 1.0, std::nullopt}, {0, 2, 1.0, std::nullopt}}, false,
                IdMap::identity(5));
  EXPECT_NEAR(measure_bN(g, {}), 0.5, 1e-10);
  EXPECT_NEAR(measure_bK(g, {}), 0.125, 1e-10);
}

TEST(Frustration, Examples) {
  const auto t = frustration_exact(make_graph(3, complete(3)));
  EXPECT_EQ(t.frustration, 1.0);
  EXPECT_NEAR(t.ratio, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(frustration_exact(make_graph(5, complete(5))).frustration, 4.0);
  EXPECT_EQ(frustration_exact(make_graph(6, cycle(6))).frustration, 0.0);
  EXPECT_EQ(frustration_exact(make_graph(5, cycle(5))).frustration, 1.0);
  std::vector<oracle::WEdge> big_path = testing_support::path(21);
  EXPECT_THROW(frustration_exact(make_graph(21, big_path)), Error);
}

TEST(Frustration, WitnessAchievesMinimum) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 11;
    auto edges = oracle::random_graph(n, 0.5, rng, true);
    for (auto& e : edges) e.w = 1.0 + static_cast<double>(rng() % 3);
    const auto r = frustration_exact(make_graph(n, edges));
    EXPECT_DOUBLE_EQ(r.frustration, oracle::min_frustration(n, edges));
    double f = 0.0;
    for (const auto& e : edges)
      if (r.side[e.u] == r.side[e.v]) f += e.w;
    EXPECT_DOUBLE_EQ(f, r.frustration);
  }
}

TEST(QuadraticForm, SignlessCountsFrustratedEdges) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 8;
    const auto edges = oracle::random_graph(n, 0.5, rng, false);
    if (edges.empty()) continue;
    const Eigen::MatrixXd k = signless_laplacian(make_graph(n, edges)).to_dense();
    oracle::for_each_bipartition(n, [&](std::uint64_t mask) {
      Eigen::VectorXd x(n);
      for (int u = 0; u < n; ++u) x(u) = oracle::side_of(mask, u) ? 0.5 : -0.5;
      double frustrated = 0;
      for (const auto& e : edges) frustrated += oracle::side_of(mask, e.u) == oracle::side_of(mask, e.v);
      EXPECT_DOUBLE_EQ(x.dot(k * x), frustrated);
    });
  }
}

TEST(Relaxation, SignlessBelowFrustrationRatio) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 14;
    const Graph g = make_graph(n, oracle::random_graph(n, 0.4, rng, true));
    EXPECT_LE(measure_bK(g, {}), frustration_exact(g).ratio + 1e-9);
  }
}

TEST(Ranges, RandomInstances) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial;
    const Graph g = make_graph(n, oracle::random_graph(n, 0.3, rng, true));
    const auto a = measure_bA(g, {}), nn = measure_bN(g, {}), c = measure_bc(g, {});
    EXPECT_GE(a, 0.0);
    EXPECT_LE(a, 1.0);
    EXPECT_GE(nn, 0.0);
    EXPECT_LE(nn, 1.0);
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 0.5);
  }
}

TEST(Scale, DisjointCopiesKeepAdjacencyMeasure) {
  std::mt19937_64 rng(107);
  const int n = 15;
  const auto edges = oracle::random_graph(n, 0.3, rng, true);
  auto doubled = edges;
  for (const auto& e : edges) doubled.push_back({e.u + n, e.v + n});
  EXPECT_NEAR(measure_bA(make_graph(n, edges), {}), measure_bA(make_graph(2 * n, doubled), {}), 1e-10);
}

TEST(Report, Triangle) {
  const BipartivityReport r = bipartivity_report(make_graph(3, complete(3)), {});
  EXPECT_NEAR(*r.b_K, 0.125, 1e-10);
  EXPECT_NEAR(*r.b_A, 0.5, 1e-10);
  EXPECT_NEAR(*r.b_N, 0.5, 1e-10);
  EXPECT_NEAR(*r.b_c, 0.15710, 1e-4);
  EXPECT_EQ(*r.f_exact, 1.0);
  EXPECT_TRUE(r.connected);
  EXPECT_TRUE(r.notes.empty());
}

TEST(Report, CycleAllZero) {
  const BipartivityReport r = bipartivity_report(make_graph(4, cycle(4)), {});
  for (const auto& v : {r.b_K, r.b_A, r.b_N, r.b_c, r.f_exact}) EXPECT_NEAR(*v, 0.0, 1e-8);
}

TEST(Report, GatesOddCycleRatioAboveThreshold) {
  std::mt19937_64 rng(109);
  const int n = 60;
  SolverConfig cfg;
  cfg.dense_threshold = 40;
  auto edges = oracle::random_graph(n, 0.08, rng, true);
  edges.push_back({0, 1});
  edges.push_back({1, 2});
  edges.push_back({0, 2});
  std::vector<oracle::WEdge> unique;
  for (const auto& e : edges)
    if (!oracle::has_edge(unique, e.u, e.v)) unique.push_back(e);
  const BipartivityReport r = bipartivity_report(make_graph(n, unique), cfg);
  EXPECT_FALSE(r.b_c.has_value());
  EXPECT_TRUE(r.notes.count("b_c"));
  EXPECT_TRUE(r.b_A && r.b_N && r.b_K);
  EXPECT_FALSE(r.f_exact.has_value());
}

TEST(Report, FlagsDisconnection) {
  const Graph g(6, {{0, 1, 1.0, std::nullopt}, {1, 2, 1.0, std::nullopt}, {0, 2, 1.0, std::nullopt},
                    {3, 4, 1.0, std::nullopt}, {4, 5, 1.0, std::nullopt}},
                false, IdMap::identity(6));
  const BipartivityReport r = bipartivity_report(g, {});
  EXPECT_FALSE(r.connected);
  EXPECT_TRUE(r.notes.count("graph"));
}

TEST(Report, Karate) {
  const auto g = std::get<Graph>(parse_network(BIPNET_TEST_DATA "/karate.tsv", {}));
  const BipartivityReport r = bipartivity_report(g, {});
  for (const auto& v : {r.b_K, r.b_A, r.b_N, r.b_c}) {
    ASSERT_TRUE(v.has_value());
    EXPECT_GT(*v, 0.0);
  }
}

}  // namespace
