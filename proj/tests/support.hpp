#pragma once

#include <random>
#include <vector>

#include "bipnet/graph.hpp"
#include "bipnet/spectral.hpp"
#include "oracle/oracle.hpp"

namespace testing_support {

inline bipnet::Graph make_graph(int n, const std::vector<oracle::WEdge>& edges) {
  std::vector<bipnet::Edge> out;
  for (const auto& e : edges) out.push_back({e.u, e.v, e.w, std::nullopt});
  return bipnet::Graph(n, std::move(out), false, bipnet::IdMap::identity(n));
}

// Edges given over the unipartite numbering (left 0..nl-1, right after).
inline bipnet::BipartiteGraph make_bipartite(int nl, int nr, const std::vector<oracle::WEdge>& edges) {
  std::vector<bipnet::Edge> out;
  for (const auto& e : edges) {
    const int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    out.push_back({a, b - nl, e.w, std::nullopt});
  }
  return bipnet::BipartiteGraph(nl, nr, std::move(out), bipnet::IdMap::identity(nl), bipnet::IdMap::identity(nr));
}

inline std::vector<oracle::WEdge> complete(int n) {
  std::vector<oracle::WEdge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return e;
}

inline std::vector<oracle::WEdge> cycle(int n) {
  std::vector<oracle::WEdge> e;
  for (int u = 0; u < n; ++u) e.push_back({u, (u + 1) % n});
  return e;
}

inline std::vector<oracle::WEdge> path(int n) {
  std::vector<oracle::WEdge> e;
  for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  return e;
}

inline bipnet::SolverConfig krylov_config() {
  bipnet::SolverConfig cfg;
  cfg.dense_threshold = 2;
  return cfg;
}

// Two K_{k,k} blocks with a fraction of their edges removed and a few random
// cross-block edges. Left ids 0..2k-1, right ids 2k..4k-1.
inline std::vector<oracle::WEdge> planted_bicliques(int k, double removed, int cross, std::mt19937_64& rng) {
  std::vector<oracle::WEdge> edges;
  std::uniform_real_distribution<double> unit;
  const int nl = 2 * k;
  for (int block = 0; block < 2; ++block)
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v)
        if (unit(rng) >= removed) edges.push_back({block * k + u, nl + block * k + v});
  std::uniform_int_distribution<int> pick(0, k - 1);
  for (int c = 0; c < cross; ++c) {
    const int u = pick(rng), v = pick(rng);
    const bool flip = c % 2;
    const oracle::WEdge e{flip ? k + u : u, nl + (flip ? v : k + v)};
    if (!oracle::has_edge(edges, e.u, e.v)) edges.push_back(e);
  }
  return edges;
}

}  // namespace testing_support
