#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bipnet/error.hpp"
#include "bipnet/linkpred.hpp"
#include "bipnet/matrices.hpp"
#include "bipnet/paths.hpp"
#include "support.hpp"

using namespace bipnet;
using testing_support::make_bipartite;
using testing_support::make_graph;

namespace {

ScoreModel fit(const Graph& g, Method m, std::optional<double> alpha = std::nullopt) {
  KernelParams p;
  p.alpha = alpha;
  return fit_kernel(g, m, p, {});
}

TEST(Methods, NamesRoundTrip) {
  for (const char* name : {"pa", "cn", "p3", "poly", "polyn", "neu", "sinh", "exp", "neumann", "n-poly", "n-polyn",
                           "n-neu", "n-heat", "com", "heat", "random"}) {
    const auto m = parse_method(name);
    ASSERT_TRUE(m.has_value()) << name;
    EXPECT_EQ(method_name(*m), name);
  }
  EXPECT_FALSE(parse_method("jaccard").has_value());
}

TEST(PreferentialAttachment, Examples) {
  // node 0 degree 3, node 4 degree 2
  const Graph g = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}});
  EXPECT_EQ(score_pa(g, 0, 4), 6.0);
  EXPECT_EQ(score_pa(g, 0, 5), 0.0);
  const ScoreModel m = fit(g, Method::pa);
  EXPECT_EQ(m.score(0, 4), 6.0);
  // Ranking of all v by score for a fixed u equals ranking by degree.
  for (NodeId u = 0; u < 6; ++u) {
    if (g.degree(u) == 0) continue;
    for (NodeId a = 0; a < 6; ++a)
      for (NodeId b = 0; b < 6; ++b)
        EXPECT_EQ(m.score(u, a) < m.score(u, b), g.degree(a) < g.degree(b));
  }
}

TEST(CommonNeighbors, Examples) {
  const Graph tri = make_graph(3, testing_support::complete(3));
  EXPECT_EQ(score_common_neighbors(tri, 0, 1), 1.0);
  EXPECT_EQ(score_common_neighbors(make_graph(4, testing_support::cycle(4)), 0, 2), 2.0);
  const BipartiteGraph bg = make_bipartite(2, 2, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_EQ(score_common_neighbors(bg.as_unipartite(), 0, 2), 0.0);
  EXPECT_THROW(fit_kernel(bg, Method::cn, {}, {}), Error);
}

TEST(P3, Examples) {
  const BipartiteGraph star = make_bipartite(1, 2, {{0, 1}, {0, 2}});
  EXPECT_EQ(score_p3(star, 0, 0), 2.0);
  EXPECT_EQ(score_p3(make_bipartite(2, 2, {{0, 2}, {1, 3}}), 0, 1), 0.0);
  const ScoreModel m = fit_kernel(star, Method::p3, {}, {});
  EXPECT_THROW(m.entry(1, 2), Error);  // both right
  EXPECT_THROW(fit_kernel(make_graph(2, {{0, 1}}), Method::p3, {}, {}), Error);
}

TEST(P3, MatchesBruteForceWalks) {
  std::mt19937_64 rng(167);
  for (int trial = 0; trial < 20; ++trial) {
    const int nl = 2 + trial % 5, nr = 2 + trial % 6;
    const auto edges = oracle::random_bipartite(nl, nr, 0.4, rng);
    const BipartiteGraph bg = make_bipartite(nl, nr, edges);
    const Graph flat = bg.as_unipartite();
    for (NodeId u = 0; u < nl; ++u)
      for (NodeId v = 0; v < nr; ++v)
        EXPECT_EQ(score_p3(bg, u, v), static_cast<double>(count_paths_bruteforce(flat, u, nl + v, 3)));
  }
}

TEST(Kernels, SingleEdgeValues) {
  const Graph k2 = make_graph(2, {{0, 1}});
  EXPECT_NEAR(fit(k2, Method::sinh, 1.0).score(0, 1), 1.17520, 1e-5);
  EXPECT_NEAR(fit(k2, Method::sinh, 1.0).score(0, 1), std::sinh(1.0), 1e-12);
  EXPECT_NEAR(fit(k2, Method::neu, 0.5).score(0, 1), 0.5 / 0.75, 1e-12);
  EXPECT_NEAR(fit(k2, Method::com).score(0, 1), -0.25, 1e-12);

  const BipartiteGraph k11 = make_bipartite(1, 1, {{0, 1}});
  KernelParams p;
  p.alpha = 1.0;
  EXPECT_NEAR(fit_kernel(k11, Method::sinh, p, {}).score(0, 0), std::sinh(1.0), 1e-12);
  p.alpha = 0.5;
  EXPECT_NEAR(fit_kernel(k11, Method::neu, p, {}).score(0, 0), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(fit_kernel(k11, Method::com, {}, {}).score(0, 0), -0.25, 1e-12);
}

TEST(Kernels, Defaults) {
  const Graph k2 = make_graph(2, {{0, 1}});
  EXPECT_NEAR(fit(k2, Method::neu).alpha(), 0.5, 1e-12);  // 0.5 / lambda_max
  EXPECT_EQ(fit(k2, Method::sinh).alpha(), 1.0);
  EXPECT_EQ(fit(k2, Method::heat).alpha(), 1.0);
  const ScoreModel poly = fit(k2, Method::poly);
  EXPECT_EQ(poly.coefficients(), (std::vector<double>{1.0, 1.0 / 6.0, 1.0 / 120.0}));
  EXPECT_NEAR(poly.score(0, 1), 1.0 + 1.0 / 6.0 + 1.0 / 120.0, 1e-12);
}

TEST(Kernels, ConvergenceRegionChecked) {
  const Graph k2 = make_graph(2, {{0, 1}});
  for (Method m : {Method::neu, Method::neumann, Method::n_neu}) {
    try {
      fit(k2, m, 1.0);
      FAIL() << method_name(m);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::domain);
    }
  }
  EXPECT_THROW(fit(k2, Method::sinh, -1.0), Error);
}

TEST(Kernels, NonnegativePolynomialRejectsNegativeCoefficients) {
  KernelParams p;
  p.poly_coefficients = {1.0, -0.5};
  const Graph k2 = make_graph(2, {{0, 1}});
  EXPECT_NO_THROW(fit_kernel(k2, Method::poly, p, {}));
  EXPECT_THROW(fit_kernel(k2, Method::polyn, p, {}), Error);
  EXPECT_THROW(fit_kernel(k2, Method::n_polyn, p, {}), Error);
}

TEST(Kernels, SymmetricScores) {
  std::mt19937_64 rng(173);
  const int n = 14;
  const Graph g = make_graph(n, oracle::random_graph(n, 0.3, rng, true));
  for (Method m : {Method::pa, Method::cn, Method::poly, Method::polyn, Method::neu, Method::sinh, Method::exp,
                   Method::neumann, Method::n_poly, Method::n_polyn, Method::n_neu, Method::n_heat, Method::com,
                   Method::heat, Method::random}) {
    const ScoreModel s = fit(g, m);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = 0; v < n; ++v) EXPECT_NEAR(s.score(u, v), s.score(v, u), 1e-10) << method_name(m);
  }
}

TEST(Kernels, IsolatedEndpointsScoreZero) {
  const Graph g(4, {{0, 1, 1, std::nullopt}, {1, 2, 1, std::nullopt}, {0, 2, 1, std::nullopt}}, false,
                IdMap::identity(4));
  for (Method m : {Method::sinh, Method::exp, Method::neumann, Method::n_heat, Method::com, Method::heat})
    EXPECT_EQ(fit(g, m).score(0, 3), 0.0) << method_name(m);
}

TEST(Kernels, MatchDenseOracle) {
  std::mt19937_64 rng(179);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 6 + trial * 2;
    const auto edges = oracle::random_graph(n, 0.35, rng, true);
    const Graph g = make_graph(n, edges);
    const auto a = oracle::adjacency(n, edges);
    const auto ea = oracle::jacobi_eigen(a);
    const auto en = oracle::jacobi_eigen(oracle::normalized(a));
    const auto el = oracle::jacobi_eigen(oracle::laplacian(a));
    const auto sinh = oracle::apply(ea, [](double x) { return std::sinh(x); });
    const auto heat = oracle::apply(el, [](double x) { return std::exp(-x); });
    const auto com = oracle::apply(el, [](double x) { return x > 1e-9 ? 1.0 / x : 0.0; });
    const auto nheat = oracle::apply(en, [](double x) { return std::sinh(x); });
    const ScoreModel ms = fit(g, Method::sinh), mh = fit(g, Method::heat), mc = fit(g, Method::com),
                     mn = fit(g, Method::n_heat);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        EXPECT_NEAR(ms.score(u, v), sinh[u][v], 1e-9);
        EXPECT_NEAR(mh.score(u, v), heat[u][v], 1e-9);
        EXPECT_NEAR(mc.score(u, v), com[u][v], 1e-9);
        EXPECT_NEAR(mn.score(u, v), nheat[u][v], 1e-9);
      }
  }
}

TEST(Kernels, BipartiteBlockMatchesFullDecomposition) {
  std::mt19937_64 rng(181);
  const int nl = 7, nr = 5;
  const auto edges = oracle::random_bipartite(nl, nr, 0.4, rng);
  const BipartiteGraph bg = make_bipartite(nl, nr, edges);
  const Graph flat = bg.as_unipartite();
  for (Method m : {Method::sinh, Method::neu, Method::poly, Method::n_poly, Method::n_heat}) {
    const ScoreModel block = fit_kernel(bg, m, {}, {});
    const ScoreModel full = fit_kernel(flat, m, {}, {});
    EXPECT_NEAR(block.alpha(), full.alpha(), 1e-12);
    for (NodeId u = 0; u < nl; ++u)
      for (NodeId v = 0; v < nr; ++v) EXPECT_NEAR(block.score(u, v), full.score(u, nl + v), 1e-9) << method_name(m);
    for (NodeId u = 0; u < nl; ++u)
      for (NodeId w = 0; w < nl; ++w) {
        EXPECT_EQ(block.entry(u, w), 0.0);
        EXPECT_NEAR(full.score(u, w), 0.0, 1e-10);
      }
  }
}

TEST(Kernels, LowRankKrylovMatchesDenseTruncation) {
  std::mt19937_64 rng(191);
  const int nl = 40, nr = 30;
  const BipartiteGraph bg = make_bipartite(nl, nr, oracle::random_bipartite(nl, nr, 0.15, rng));
  KernelParams p;
  p.rank = 6;
  const ScoreModel dense = fit_kernel(bg, Method::sinh, p, {});
  const ScoreModel krylov = fit_kernel(bg, Method::sinh, p, testing_support::krylov_config());
  EXPECT_EQ(dense.rank(), 6);
  for (NodeId u = 0; u < nl; ++u)
    for (NodeId v = 0; v < nr; ++v) EXPECT_NEAR(dense.score(u, v), krylov.score(u, v), 1e-6);

  const Graph flat = bg.as_unipartite();
  const ScoreModel ud = fit_kernel(flat, Method::heat, p, {});
  const ScoreModel uk = fit_kernel(flat, Method::heat, p, testing_support::krylov_config());
  for (NodeId u = 0; u < flat.node_count(); u += 3)
    for (NodeId v = 0; v < flat.node_count(); v += 5) EXPECT_NEAR(ud.score(u, v), uk.score(u, v), 1e-6);
}

TEST(Auc, Examples) {
  EXPECT_EQ(auc(std::vector<double>{0.9, 0.8}, std::vector<double>{0.1, 0.2}), 1.0);
  EXPECT_EQ(auc(std::vector<double>{0.5}, std::vector<double>{0.5}), 0.5);
  EXPECT_EQ(auc(std::vector<double>{1, 0}, std::vector<double>{0.5, 0.5}), 0.5);
  EXPECT_THROW(auc(std::vector<double>{}, std::vector<double>{1.0}), Error);
}

TEST(Auc, MatchesPairCountAndMonotoneInvariance) {
  std::mt19937_64 rng(193);
  std::uniform_int_distribution<int> level(0, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> pos(5 + trial), neg(3 + 2 * trial);
    for (auto& x : pos) x = level(rng);
    for (auto& x : neg) x = level(rng);
    double wins = 0;
    for (double p : pos)
      for (double q : neg) wins += p > q ? 1.0 : (p == q ? 0.5 : 0.0);
    const double want = wins / static_cast<double>(pos.size() * neg.size());
    EXPECT_NEAR(auc(pos, neg), want, 1e-15);
    auto tp = pos, tn = neg;
    for (auto& x : tp) x = std::exp(3 * x) - 7;
    for (auto& x : tn) x = std::exp(3 * x) - 7;
    EXPECT_NEAR(auc(tp, tn), want, 1e-15);
  }
}

Graph hundred_edge_graph(bool times) {
  std::vector<Edge> edges;
  for (int i = 0; i < 100; ++i) {
    Edge e{i % 30, 30 + (i * 7) % 40, 1.0, std::nullopt};
    if (times) e.time = 100.0 - i;
    edges.push_back(e);
  }
  return Graph(70, edges, false, IdMap::identity(70));
}

TEST(Split, Sizes) {
  const Graph g = hundred_edge_graph(false);
  const auto s = split(g, {});
  EXPECT_EQ(s.training.edge_count(), 75u);
  EXPECT_EQ(s.test.size(), 25u);
  EXPECT_EQ(s.training.node_count(), g.node_count());
  const auto again = split(g, {});
  for (std::size_t i = 0; i < s.test.size(); ++i) {
    EXPECT_EQ(s.test[i].u, again.test[i].u);
    EXPECT_EQ(s.test[i].v, again.test[i].v);
  }
  SplitSpec other;
  other.seed = 99;
  const auto diff = split(g, other);
  bool any = false;
  for (std::size_t i = 0; i < s.test.size(); ++i) any |= s.test[i].u != diff.test[i].u || s.test[i].v != diff.test[i].v;
  EXPECT_TRUE(any);
}

TEST(Split, Temporal) {
  SplitSpec spec;
  spec.temporal = true;
  const auto s = split(hundred_edge_graph(true), spec);
  double max_train = -1e300, min_test = 1e300;
  for (const Edge& e : s.training.edges()) max_train = std::max(max_train, *e.time);
  for (const Edge& e : s.test) min_test = std::min(min_test, *e.time);
  EXPECT_LE(max_train, min_test);
  EXPECT_THROW(split(hundred_edge_graph(false), spec), Error);
}

TEST(Split, Errors) {
  EXPECT_THROW(split(make_graph(4, testing_support::path(4)), {}), Error);
  SplitSpec bad;
  bad.train_fraction = 1.0;
  EXPECT_THROW(bad.validate(), Error);
}

TEST(ZeroEdges, OnlyCandidate) {
  // K_{2,3} minus (1, 2)
  const BipartiteGraph g = make_bipartite(2, 3, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}});
  const auto z = sample_zero_edges(g, 1, 5);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0], (NodePair{1, 2}));
  EXPECT_THROW(sample_zero_edges(g, 2, 5), Error);
}

TEST(ZeroEdges, DistinctNonEdges) {
  std::mt19937_64 rng(197);
  const Graph g = make_graph(40, oracle::random_graph(40, 0.1, rng, true));
  const auto z = sample_zero_edges(g, 100, 3);
  EXPECT_EQ(z.size(), 100u);
  std::set<std::pair<int, int>> seen;
  for (auto p : z) {
    EXPECT_NE(p.u, p.v);
    EXPECT_FALSE(g.has_edge(p.u, p.v));
    EXPECT_TRUE(seen.emplace(std::min(p.u, p.v), std::max(p.u, p.v)).second);
  }
  EXPECT_THROW(sample_zero_edges(make_graph(3, testing_support::complete(3)), 1, 1), Error);
}

TEST(Experiment, ReportShape) {
  std::mt19937_64 rng(199);
  const BipartiteGraph g = make_bipartite(24, 24, testing_support::planted_bicliques(12, 0.1, 4, rng));
  const std::vector<Method> methods{Method::pa, Method::p3, Method::sinh, Method::n_poly,
                                    Method::cn, Method::random, Method::neu};
  KernelParams p;
  const EvalReport r = run_experiment(g, methods, {}, p, {});
  EXPECT_EQ(r.results.size(), methods.size());
  EXPECT_EQ(r.zero_size, r.test_size);
  EXPECT_EQ(r.train_size + r.test_size, g.edge_count());
  for (const auto& m : r.results) {
    if (m.method == Method::cn) {
      EXPECT_TRUE(m.error.has_value());
      continue;
    }
    ASSERT_TRUE(m.auc.has_value()) << method_name(m.method) << ": " << m.error.value_or("");
    EXPECT_GE(*m.auc, 0.0);
    EXPECT_LE(*m.auc, 1.0);
  }
  EXPECT_GT(r.find(Method::sinh)->auc.value(), 0.7);
}

TEST(Experiment, NoTestLeakage) {
  std::mt19937_64 rng(211);
  const BipartiteGraph g = make_bipartite(20, 20, testing_support::planted_bicliques(10, 0.1, 3, rng));
  const auto s = split(g, {});
  // Rebuild the training graph with one edge removed and appended again.
  std::vector<Edge> edges(s.training.edges().begin(), s.training.edges().end());
  std::rotate(edges.begin(), edges.begin() + 1, edges.end());
  const BipartiteGraph same(g.left_count(), g.right_count(), edges, g.left_ids(), g.right_ids());
  for (Method m : {Method::sinh, Method::p3, Method::com}) {
    const ScoreModel a = fit_kernel(s.training, m, {}, {});
    const ScoreModel b = fit_kernel(same, m, {}, {});
    for (const Edge& e : s.test) EXPECT_NEAR(a.score(e.u, e.v), b.score(e.u, e.v), 1e-10);
  }
}

}  // namespace
