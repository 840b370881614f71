#include "bipnet/matrices.hpp"

#include <cmath>

#include "bipnet/error.hpp"

namespace bipnet {
namespace {

void require_undirected(const Graph& g) {
  if (g.directed()) throw Error(ErrorKind::invalid_input, "matrix requires an undirected graph");
}

std::vector<double> inverse_sqrt(std::span<const double> d) {
  std::vector<double> out(d.size(), 0.0);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0.0) out[i] = 1.0 / std::sqrt(d[i]);
  return out;
}

}  // namespace

SparseMatrix adjacency(const Graph& g) {
  std::vector<Triplet> t;
  t.reserve(g.edge_count() * 2);
  for (const Edge& e : g.edges()) {
    t.push_back({e.u, e.v, e.weight});
    if (!g.directed() && e.u != e.v) t.push_back({e.v, e.u, e.weight});
  }
  return SparseMatrix(g.node_count(), g.node_count(), std::move(t));
}

SparseMatrix adjacency(const BipartiteGraph& g) {
  const NodeId off = g.left_count();
  std::vector<Triplet> t;
  t.reserve(g.edge_count() * 2);
  for (const Edge& e : g.edges()) {
    t.push_back({e.u, off + e.v, e.weight});
    t.push_back({off + e.v, e.u, e.weight});
  }
  return SparseMatrix(g.node_count(), g.node_count(), std::move(t));
}

SparseMatrix biadjacency(const BipartiteGraph& g) {
  std::vector<Triplet> t;
  t.reserve(g.edge_count());
  for (const Edge& e : g.edges()) t.push_back({e.u, e.v, e.weight});
  return SparseMatrix(g.left_count(), g.right_count(), std::move(t));
}

SparseMatrix degree_matrix(const Graph& g) {
  require_undirected(g);
  return SparseMatrix::diagonal(g.degrees());
}

SparseMatrix laplacian(const Graph& g) {
  require_undirected(g);
  return degree_matrix(g).combine(1.0, adjacency(g), -1.0);
}

SparseMatrix signless_laplacian(const Graph& g) {
  require_undirected(g);
  return degree_matrix(g).combine(1.0, adjacency(g), 1.0);
}

SparseMatrix normalized_adjacency(const Graph& g) {
  require_undirected(g);
  const auto s = inverse_sqrt(g.degrees());
  std::vector<Triplet> t;
  t.reserve(g.edge_count() * 2);
  for (const Edge& e : g.edges()) {
    const double w = e.weight * s[e.u] * s[e.v];
    t.push_back({e.u, e.v, w});
    if (e.u != e.v) t.push_back({e.v, e.u, w});
  }
  return SparseMatrix(g.node_count(), g.node_count(), std::move(t));
}

SparseMatrix normalized_biadjacency(const BipartiteGraph& g) {
  std::vector<double> dl(static_cast<std::size_t>(g.left_count()));
  std::vector<double> dr(static_cast<std::size_t>(g.right_count()));
  for (NodeId u = 0; u < g.left_count(); ++u) dl[u] = g.left_degree(u);
  for (NodeId v = 0; v < g.right_count(); ++v) dr[v] = g.right_degree(v);
  const auto sl = inverse_sqrt(dl);
  const auto sr = inverse_sqrt(dr);
  std::vector<Triplet> t;
  t.reserve(g.edge_count());
  for (const Edge& e : g.edges()) t.push_back({e.u, e.v, e.weight * sl[e.u] * sr[e.v]});
  return SparseMatrix(g.left_count(), g.right_count(), std::move(t));
}

CharacteristicMatrices characteristic_matrices(const Graph& g) {
  return {adjacency(g),         degree_matrix(g), laplacian(g), signless_laplacian(g),
          normalized_adjacency(g), std::nullopt,  std::nullopt};
}

CharacteristicMatrices characteristic_matrices(const BipartiteGraph& g) {
  CharacteristicMatrices m = characteristic_matrices(g.as_unipartite());
  m.biadjacency = biadjacency(g);
  m.normalized_biadjacency = normalized_biadjacency(g);
  return m;
}

}  // namespace bipnet
