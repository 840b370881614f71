#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace bipnet {

using NodeId = std::int32_t;
using ExternalId = std::int64_t;

// Edge as read from an input file: ids are arbitrary nonnegative labels.
struct InputEdge {
  ExternalId u = 0;
  ExternalId v = 0;
  std::optional<double> weight;
  std::optional<double> time;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
  std::optional<double> time;
};

// Bidirectional mapping between dense internal ids and original labels.
class IdMap {
public:
  IdMap() = default;
  // Internal id i maps to labels[i]; labels must be distinct.
  explicit IdMap(std::vector<ExternalId> labels);
  static IdMap identity(NodeId n);

  NodeId size() const noexcept { return static_cast<NodeId>(labels_.size()); }
  ExternalId external(NodeId id) const { return labels_.at(static_cast<std::size_t>(id)); }
  std::optional<NodeId> internal(ExternalId label) const;
  std::span<const ExternalId> labels() const noexcept { return labels_; }

private:
  std::vector<ExternalId> labels_;
  std::unordered_map<ExternalId, NodeId> index_;
};

enum class DuplicatePolicy {
  aggregate,  // parallel edges merge into one edge whose weight is the sum
  reject,     // parallel edges are an error
};

// Unipartite graph, directed or undirected. Undirected edges are stored once
// with u <= v. Edge order follows first appearance in the input.
class Graph {
public:
  Graph(NodeId node_count, std::vector<Edge> edges, bool directed, IdMap ids);

  NodeId node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool directed() const noexcept { return directed_; }
  bool weighted() const noexcept { return weighted_; }
  const IdMap& ids() const noexcept { return ids_; }

  // Weighted degree (sum of incident edge weights, loops counted once).
  // For directed graphs this is the out-degree.
  double degree(NodeId u) const { return degree_.at(static_cast<std::size_t>(u)); }
  std::span<const double> degrees() const noexcept { return degree_; }
  double total_weight() const noexcept { return total_weight_; }

  // Sorted neighbor list (successors for directed graphs).
  std::span<const NodeId> neighbors(NodeId u) const;
  bool has_edge(NodeId u, NodeId v) const;

private:
  NodeId node_count_;
  std::vector<Edge> edges_;
  bool directed_;
  bool weighted_ = false;
  IdMap ids_;
  std::vector<double> degree_;
  double total_weight_ = 0.0;
  std::vector<std::int64_t> adj_ptr_;
  std::vector<NodeId> adj_;
};

// Two-mode graph. Left and right ids live in separate ranges [0, left_count)
// and [0, right_count).
class BipartiteGraph {
public:
  BipartiteGraph(NodeId left_count, NodeId right_count, std::vector<Edge> edges, IdMap left_ids,
                 IdMap right_ids);

  NodeId left_count() const noexcept { return left_count_; }
  NodeId right_count() const noexcept { return right_count_; }
  NodeId node_count() const noexcept { return left_count_ + right_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool weighted() const noexcept { return weighted_; }
  const IdMap& left_ids() const noexcept { return left_ids_; }
  const IdMap& right_ids() const noexcept { return right_ids_; }

  double left_degree(NodeId u) const { return left_degree_.at(static_cast<std::size_t>(u)); }
  double right_degree(NodeId v) const { return right_degree_.at(static_cast<std::size_t>(v)); }
  double total_weight() const noexcept { return total_weight_; }

  std::span<const NodeId> left_neighbors(NodeId u) const;
  std::span<const NodeId> right_neighbors(NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const;

  // The same graph viewed as unipartite: left node u becomes u, right node v
  // becomes left_count + v.
  Graph as_unipartite() const;

private:
  NodeId left_count_;
  NodeId right_count_;
  std::vector<Edge> edges_;
  bool weighted_ = false;
  IdMap left_ids_;
  IdMap right_ids_;
  std::vector<double> left_degree_;
  std::vector<double> right_degree_;
  double total_weight_ = 0.0;
  std::vector<std::int64_t> left_ptr_, right_ptr_;
  std::vector<NodeId> left_adj_, right_adj_;
};

Graph build_graph(std::span<const InputEdge> edges, bool directed,
                  DuplicatePolicy policy = DuplicatePolicy::aggregate);

// Column 1 ids are left labels, column 2 ids are right labels; the two
// namespaces are independent.
BipartiteGraph build_bipartite(std::span<const InputEdge> edges,
                               DuplicatePolicy policy = DuplicatePolicy::aggregate);

struct GraphStats {
  std::int64_t size = 0;
  std::optional<std::int64_t> left_size;
  std::optional<std::int64_t> right_size;
  std::int64_t volume = 0;
  // Unset when undefined (fewer than two possible node pairs).
  std::optional<double> fill;
};

GraphStats stats(const Graph& g);
GraphStats stats(const BipartiteGraph& g);

enum class Side { left, right };

// Unweighted one-mode projection onto `side`.
Graph project(const BipartiteGraph& g, Side side);

// Hyperedges over the nodes of `side`: one neighbor set per node of the
// opposite side, in id order. Sets are sorted.
std::vector<std::vector<NodeId>> hyperedges(const BipartiteGraph& g, Side side);

// Left copy of node u is (u,1), right copy is (u,2); each arc (u,v) becomes
// the edge (u,1)-(v,2).
BipartiteGraph double_cover(const Graph& g);

}  // namespace bipnet
