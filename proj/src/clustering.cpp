#include "bipnet/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bipnet/error.hpp"
#include "bipnet/matrices.hpp"

namespace bipnet {
namespace {

constexpr double kTie = 1e-12;

Partition sign_split(const Eigen::VectorXd& x) {
  Partition p;
  p.classes.resize(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) p.classes[i] = (x(i) > -kTie) ? 0 : 1;
  return p;
}

// Threshold split minimizing the ratio cut; nodes are taken in decreasing
// embedding order (index order on ties).
Partition sweep_split(const Graph& g, const Eigen::VectorXd& x) {
  const NodeId n = g.node_count();
  std::vector<NodeId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return x(a) > x(b); });

  std::vector<std::vector<std::pair<NodeId, double>>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  std::vector<char> in_x(static_cast<std::size_t>(n), 0);
  double cut = 0.0;
  double best = std::numeric_limits<double>::infinity();
  int best_k = 1;
  for (int k = 1; k < n; ++k) {
    const NodeId u = order[k - 1];
    for (const auto& [v, w] : adj[u]) cut += in_x[v] ? -w : w;
    in_x[u] = 1;
    const double rcut = (1.0 / k + 1.0 / (n - k)) * cut;
    if (rcut < best - 1e-12) {
      best = rcut;
      best_k = k;
    }
  }
  Partition p;
  p.classes.assign(static_cast<std::size_t>(n), 1);
  for (int k = 0; k < best_k; ++k) p.classes[order[k]] = 0;
  return p;
}

bool both_nonempty(const Partition& p) {
  const auto zeros = std::count(p.classes.begin(), p.classes.end(), 0);
  return zeros > 0 && zeros < static_cast<std::ptrdiff_t>(p.classes.size());
}

Partition split(const Graph& g, const Eigen::VectorXd& x, SplitRule rule) {
  if (rule == SplitRule::sign) {
    Partition p = sign_split(x);
    if (both_nonempty(p)) return p;
  }
  return sweep_split(g, x);
}

}  // namespace

Partition BipartitePartition::combined() const {
  Partition p;
  p.classes = left;
  p.classes.insert(p.classes.end(), right.begin(), right.end());
  return p;
}

CutReport evaluate_cut(const Graph& g, const Partition& p) {
  if (p.classes.size() != static_cast<std::size_t>(g.node_count()))
    throw Error(ErrorKind::invalid_input, "partition size does not match the graph");
  CutReport r;
  for (int c : p.classes) {
    if (c == 0) ++r.class_sizes.first;
    else if (c == 1) ++r.class_sizes.second;
    else throw Error(ErrorKind::invalid_input, "partition classes must be 0 or 1");
  }
  if (r.class_sizes.first == 0 || r.class_sizes.second == 0)
    throw Error(ErrorKind::invalid_input, "partition has an empty class");
  for (const Edge& e : g.edges())
    if (p.classes[e.u] != p.classes[e.v]) r.cut += e.weight;
  r.rcut = (1.0 / static_cast<double>(r.class_sizes.first) + 1.0 / static_cast<double>(r.class_sizes.second)) * r.cut;
  return r;
}

CutReport evaluate_cut(const BipartiteGraph& g, const BipartitePartition& p) {
  if (p.left.size() != static_cast<std::size_t>(g.left_count()) ||
      p.right.size() != static_cast<std::size_t>(g.right_count()))
    throw Error(ErrorKind::invalid_input, "partition size does not match the graph");
  return evaluate_cut(g.as_unipartite(), p.combined());
}

SpectralBipartition spectral_bipartition(const Graph& g, const SolverConfig& cfg, SplitRule rule) {
  if (g.directed()) throw Error(ErrorKind::invalid_input, "clustering needs an undirected graph");
  if (g.node_count() < 2) throw Error(ErrorKind::invalid_input, "clustering needs at least two nodes");
  const Spectrum s = smallest_nonzero_laplacian_vectors(laplacian(g), 1, cfg);
  SpectralBipartition out;
  out.embedding = s.vector(0);
  out.eigenvalue = s.eigenvalues[0];
  out.partition = split(g, out.embedding, rule);
  out.cut = evaluate_cut(g, out.partition);
  return out;
}

CoClustering spectral_cocluster(const BipartiteGraph& g, const SolverConfig& cfg, SplitRule rule) {
  if (g.left_count() < 2 || g.right_count() < 2)
    throw Error(ErrorKind::invalid_input, "co-clustering needs at least two nodes per side");
  if (!pattern_connected(adjacency(g))) throw Error(ErrorKind::disconnected, "graph disconnected");

  const SingularTriplets t = truncated_svd(normalized_biadjacency(g), 2, cfg);
  CoClustering out;
  out.sigma1 = t.singular_values[0];
  out.sigma2 = t.singular_values[1];
  if (out.sigma1 - out.sigma2 < 1e-10)
    throw Error(ErrorKind::ambiguous, "second singular value ties the first; co-clustering is ambiguous");

  out.left_embedding = t.left_vectors.col(1);
  out.right_embedding = t.right_vectors.col(1);
  for (NodeId u = 0; u < g.left_count(); ++u) out.left_embedding(u) /= std::sqrt(g.left_degree(u));
  for (NodeId v = 0; v < g.right_count(); ++v) out.right_embedding(v) /= std::sqrt(g.right_degree(v));

  Eigen::VectorXd x(g.node_count());
  x << out.left_embedding, out.right_embedding;
  const Graph flat = g.as_unipartite();
  const Partition p = split(flat, x, rule);
  out.partition.left.assign(p.classes.begin(), p.classes.begin() + g.left_count());
  out.partition.right.assign(p.classes.begin() + g.left_count(), p.classes.end());
  out.cut = evaluate_cut(flat, p);
  return out;
}

}  // namespace bipnet
