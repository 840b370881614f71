#pragma once

#include <string>
#include <vector>

#include "bipnet/graph.hpp"
#include "bipnet/spectral.hpp"

namespace bipnet {

enum class LayoutMethod { spectral, two_line };

enum class NodeSide { none, left, right };

// Row i describes node nodes[i] of the laid-out graph (the unipartite view
// for bipartite input, left nodes first).
struct LayoutCoords {
  LayoutMethod method = LayoutMethod::spectral;
  std::vector<NodeId> nodes;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<NodeSide> side;
  std::vector<ExternalId> labels;
  std::vector<double> eigenvalues;
};

struct LayoutOptions {
  // Lay out only the largest connected component instead of failing on
  // disconnected input.
  bool largest_component = false;
};

// x = Fiedler vector, y = eigenvector of the next nonzero Laplacian
// eigenvalue.
LayoutCoords spectral_layout(const Graph& g, const SolverConfig& cfg, const LayoutOptions& opts = {});
LayoutCoords spectral_layout(const BipartiteGraph& g, const SolverConfig& cfg, const LayoutOptions& opts = {});

// x = Fiedler vector of the bipartite Laplacian; y = +1 for left nodes and
// -1 for right nodes.
LayoutCoords two_line_layout(const BipartiteGraph& g, const SolverConfig& cfg, const LayoutOptions& opts = {});

struct RenderOptions {
  bool draw_edges = true;
  double width = 800.0;
  double height = 800.0;
  double node_radius = 4.0;
};

// Edges are given in the indexing of the laid-out graph; edges touching
// nodes absent from the layout are skipped. Left nodes are drawn hollow,
// right (and unipartite) nodes filled.
std::string render_svg(const LayoutCoords& coords, std::span<const Edge> edges, const RenderOptions& opts = {});

// Tab-separated: original-id, x, y, side.
std::string coords_tsv(const LayoutCoords& coords);

}  // namespace bipnet
