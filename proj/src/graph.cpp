#include "bipnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "bipnet/error.hpp"

namespace bipnet {

IdMap::IdMap(std::vector<ExternalId> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<NodeId>(i)).second)
      throw Error(ErrorKind::invalid_input, "duplicate label in id map");
  }
}

IdMap IdMap::identity(NodeId n) {
  std::vector<ExternalId> labels(static_cast<std::size_t>(n));
  for (NodeId i = 0; i < n; ++i) labels[i] = i;
  return IdMap(std::move(labels));
}

std::optional<NodeId> IdMap::internal(ExternalId label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void build_adjacency(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& arcs,
                     std::vector<std::int64_t>& ptr, std::vector<NodeId>& adj) {
  ptr.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [a, b] : arcs) ++ptr[a + 1];
  for (NodeId i = 0; i < n; ++i) ptr[i + 1] += ptr[i];
  adj.resize(arcs.size());
  std::vector<std::int64_t> fill(ptr.begin(), ptr.end() - 1);
  for (const auto& [a, b] : arcs) adj[fill[a]++] = b;
  for (NodeId i = 0; i < n; ++i) std::sort(adj.begin() + ptr[i], adj.begin() + ptr[i + 1]);
}

std::span<const NodeId> slice(const std::vector<std::int64_t>& ptr, const std::vector<NodeId>& adj,
                              NodeId u) {
  const auto len = static_cast<std::size_t>(ptr.at(static_cast<std::size_t>(u) + 1) - ptr[u]);
  return {adj.data() + ptr[u], len};
}

void check_edge_attributes(const Edge& e) {
  if (!std::isfinite(e.weight)) throw Error(ErrorKind::invalid_input, "edge weight must be finite");
  if (e.time && !std::isfinite(*e.time)) throw Error(ErrorKind::invalid_input, "edge time must be finite");
}

// First-appearance-ordered aggregation of parallel edges.
std::vector<Edge> aggregate(const std::vector<Edge>& raw, DuplicatePolicy policy) {
  std::map<std::pair<NodeId, NodeId>, std::size_t> seen;
  std::vector<Edge> out;
  out.reserve(raw.size());
  for (const Edge& e : raw) {
    const auto [it, inserted] = seen.emplace(std::make_pair(e.u, e.v), out.size());
    if (inserted) {
      out.push_back(e);
      continue;
    }
    if (policy == DuplicatePolicy::reject) throw Error(ErrorKind::invalid_input, "duplicate edge");
    Edge& kept = out[it->second];
    kept.weight += e.weight;
    if (e.time && (!kept.time || *e.time < *kept.time)) kept.time = e.time;
  }
  return out;
}

std::vector<ExternalId> sorted_labels(std::set<ExternalId> s) { return {s.begin(), s.end()}; }

}  // namespace

Graph::Graph(NodeId node_count, std::vector<Edge> edges, bool directed, IdMap ids)
    : node_count_(node_count), edges_(std::move(edges)), directed_(directed), ids_(std::move(ids)) {
  if (ids_.size() != node_count_) throw Error(ErrorKind::invalid_input, "id map size mismatch");
  degree_.assign(static_cast<std::size_t>(node_count_), 0.0);
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(edges_.size() * 2);
  std::set<std::pair<NodeId, NodeId>> unique;
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count_ || e.v >= node_count_)
      throw Error(ErrorKind::invalid_input, "edge endpoint out of range");
    check_edge_attributes(e);
    if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
    if (!unique.emplace(e.u, e.v).second) throw Error(ErrorKind::invalid_input, "duplicate edge");
    if (e.weight != 1.0) weighted_ = true;
    total_weight_ += e.weight;
    degree_[e.u] += e.weight;
    arcs.emplace_back(e.u, e.v);
    if (!directed_ && e.u != e.v) {
      degree_[e.v] += e.weight;
      arcs.emplace_back(e.v, e.u);
    }
  }
  build_adjacency(node_count_, arcs, adj_ptr_, adj_);
}

std::span<const NodeId> Graph::neighbors(NodeId u) const { return slice(adj_ptr_, adj_, u); }

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

BipartiteGraph::BipartiteGraph(NodeId left_count, NodeId right_count, std::vector<Edge> edges,
                               IdMap left_ids, IdMap right_ids)
    : left_count_(left_count),
      right_count_(right_count),
      edges_(std::move(edges)),
      left_ids_(std::move(left_ids)),
      right_ids_(std::move(right_ids)) {
  if (left_ids_.size() != left_count_ || right_ids_.size() != right_count_)
    throw Error(ErrorKind::invalid_input, "id map size mismatch");
  left_degree_.assign(static_cast<std::size_t>(left_count_), 0.0);
  right_degree_.assign(static_cast<std::size_t>(right_count_), 0.0);
  std::vector<std::pair<NodeId, NodeId>> la, ra;
  la.reserve(edges_.size());
  ra.reserve(edges_.size());
  std::set<std::pair<NodeId, NodeId>> unique;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= left_count_ || e.v >= right_count_)
      throw Error(ErrorKind::invalid_input, "edge endpoint out of range");
    check_edge_attributes(e);
    if (!unique.emplace(e.u, e.v).second) throw Error(ErrorKind::invalid_input, "duplicate edge");
    if (e.weight != 1.0) weighted_ = true;
    total_weight_ += e.weight;
    left_degree_[e.u] += e.weight;
    right_degree_[e.v] += e.weight;
    la.emplace_back(e.u, e.v);
    ra.emplace_back(e.v, e.u);
  }
  build_adjacency(left_count_, la, left_ptr_, left_adj_);
  build_adjacency(right_count_, ra, right_ptr_, right_adj_);
}

std::span<const NodeId> BipartiteGraph::left_neighbors(NodeId u) const {
  return slice(left_ptr_, left_adj_, u);
}

std::span<const NodeId> BipartiteGraph::right_neighbors(NodeId v) const {
  return slice(right_ptr_, right_adj_, v);
}

bool BipartiteGraph::has_edge(NodeId u, NodeId v) const {
  const auto n = left_neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

Graph BipartiteGraph::as_unipartite() const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.push_back({e.u, left_count_ + e.v, e.weight, e.time});
  return Graph(node_count(), std::move(edges), false, IdMap::identity(node_count()));
}

Graph build_graph(std::span<const InputEdge> input, bool directed, DuplicatePolicy policy) {
  if (input.empty()) throw Error(ErrorKind::empty_graph, "empty graph");
  std::set<ExternalId> labels;
  for (const InputEdge& e : input) {
    if (e.u < 0 || e.v < 0) throw Error(ErrorKind::invalid_input, "node ids must be nonnegative");
    labels.insert(e.u);
    labels.insert(e.v);
  }
  IdMap ids(sorted_labels(std::move(labels)));
  std::vector<Edge> raw;
  raw.reserve(input.size());
  for (const InputEdge& e : input) {
    NodeId a = *ids.internal(e.u);
    NodeId b = *ids.internal(e.v);
    if (!directed && a > b) std::swap(a, b);
    raw.push_back({a, b, e.weight.value_or(1.0), e.time});
  }
  const NodeId n = ids.size();
  return Graph(n, aggregate(raw, policy), directed, std::move(ids));
}

BipartiteGraph build_bipartite(std::span<const InputEdge> input, DuplicatePolicy policy) {
  if (input.empty()) throw Error(ErrorKind::empty_graph, "empty graph");
  std::set<ExternalId> left, right;
  for (const InputEdge& e : input) {
    if (e.u < 0 || e.v < 0) throw Error(ErrorKind::invalid_input, "node ids must be nonnegative");
    left.insert(e.u);
    right.insert(e.v);
  }
  IdMap lids(sorted_labels(std::move(left)));
  IdMap rids(sorted_labels(std::move(right)));
  std::vector<Edge> raw;
  raw.reserve(input.size());
  for (const InputEdge& e : input)
    raw.push_back({*lids.internal(e.u), *rids.internal(e.v), e.weight.value_or(1.0), e.time});
  const NodeId nl = lids.size();
  const NodeId nr = rids.size();
  return BipartiteGraph(nl, nr, aggregate(raw, policy), std::move(lids), std::move(rids));
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.size = g.node_count();
  s.volume = static_cast<std::int64_t>(g.edge_count());
  const double n = static_cast<double>(g.node_count());
  if (g.node_count() >= 2) s.fill = static_cast<double>(g.edge_count()) / (n * (n - 1.0) / 2.0);
  return s;
}

GraphStats stats(const BipartiteGraph& g) {
  GraphStats s;
  s.size = g.node_count();
  s.left_size = g.left_count();
  s.right_size = g.right_count();
  s.volume = static_cast<std::int64_t>(g.edge_count());
  const double pairs = static_cast<double>(g.left_count()) * static_cast<double>(g.right_count());
  if (pairs > 0) s.fill = static_cast<double>(g.edge_count()) / pairs;
  return s;
}

Graph project(const BipartiteGraph& g, Side side) {
  const bool left = side == Side::left;
  const NodeId n = left ? g.left_count() : g.right_count();
  const NodeId m = left ? g.right_count() : g.left_count();
  std::set<std::pair<NodeId, NodeId>> pairs;
  for (NodeId w = 0; w < m; ++w) {
    const auto nb = left ? g.right_neighbors(w) : g.left_neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) pairs.emplace(nb[i], nb[j]);
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({a, b, 1.0, std::nullopt});
  IdMap ids = left ? g.left_ids() : g.right_ids();
  return Graph(n, std::move(edges), false, std::move(ids));
}

std::vector<std::vector<NodeId>> hyperedges(const BipartiteGraph& g, Side side) {
  const bool left = side == Side::left;
  const NodeId m = left ? g.right_count() : g.left_count();
  std::vector<std::vector<NodeId>> out(static_cast<std::size_t>(m));
  for (NodeId w = 0; w < m; ++w) {
    const auto nb = left ? g.right_neighbors(w) : g.left_neighbors(w);
    out[w].assign(nb.begin(), nb.end());
  }
  return out;
}

BipartiteGraph double_cover(const Graph& g) {
  if (!g.directed()) throw Error(ErrorKind::invalid_input, "double cover requires a directed graph");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  return BipartiteGraph(g.node_count(), g.node_count(), std::move(edges), g.ids(), g.ids());
}

}  // namespace bipnet
