#include "bipnet/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <queue>

#include "bipnet/error.hpp"
#include "bipnet/matrices.hpp"

namespace bipnet {
namespace {

std::vector<NodeId> largest_component(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<NodeId> best;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<NodeId> members{s};
    comp[s] = s;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (NodeId v : g.neighbors(members[i]))
        if (comp[v] < 0) {
          comp[v] = s;
          members.push_back(v);
        }
    if (members.size() > best.size()) best = std::move(members);
  }
  std::sort(best.begin(), best.end());
  return best;
}

Graph induced(const Graph& g, const std::vector<NodeId>& keep) {
  std::vector<NodeId> remap(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<NodeId>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (remap[e.u] >= 0 && remap[e.v] >= 0) edges.push_back({remap[e.u], remap[e.v], e.weight, e.time});
  const auto n = static_cast<NodeId>(keep.size());
  return Graph(n, std::move(edges), false, IdMap::identity(n));
}

// Chooses the node set to lay out and its Laplacian eigenvectors.
struct Embedding {
  std::vector<NodeId> nodes;
  Spectrum spectrum;
};

Embedding laplacian_embedding(const Graph& g, int count, const SolverConfig& cfg, const LayoutOptions& opts) {
  if (g.directed()) throw Error(ErrorKind::invalid_input, "layout needs an undirected graph");
  Embedding e;
  const SparseMatrix l = laplacian(g);
  if (pattern_connected(l)) {
    e.nodes.resize(static_cast<std::size_t>(g.node_count()));
    std::iota(e.nodes.begin(), e.nodes.end(), 0);
    e.spectrum = smallest_nonzero_laplacian_vectors(l, count, cfg);
    return e;
  }
  if (!opts.largest_component) throw Error(ErrorKind::disconnected, "graph disconnected");
  e.nodes = largest_component(g);
  if (static_cast<int>(e.nodes.size()) < count + 1)
    throw Error(ErrorKind::invalid_input, "largest component too small to lay out");
  e.spectrum = smallest_nonzero_laplacian_vectors(laplacian(induced(g, e.nodes)), count, cfg);
  return e;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  // Avoid "-0.000".
  if (std::string_view(buf) == "-0.000") return "0.000";
  return buf;
}

std::string fmt_coord(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", std::abs(v) < 1e-15 ? 0.0 : v);
  return buf;
}

const char* side_name(NodeSide s) {
  switch (s) {
    case NodeSide::left: return "left";
    case NodeSide::right: return "right";
    case NodeSide::none: break;
  }
  return "none";
}

}  // namespace

LayoutCoords spectral_layout(const Graph& g, const SolverConfig& cfg, const LayoutOptions& opts) {
  if (g.node_count() < 3) throw Error(ErrorKind::invalid_input, "spectral layout needs at least three nodes");
  Embedding e = laplacian_embedding(g, 2, cfg, opts);
  LayoutCoords c;
  c.method = LayoutMethod::spectral;
  c.nodes = e.nodes;
  c.eigenvalues = e.spectrum.eigenvalues;
  for (std::size_t i = 0; i < e.nodes.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    c.x.push_back(e.spectrum.eigenvectors(r, 0));
    c.y.push_back(e.spectrum.eigenvectors(r, 1));
    c.side.push_back(NodeSide::none);
    c.labels.push_back(g.ids().external(e.nodes[i]));
  }
  return c;
}

LayoutCoords spectral_layout(const BipartiteGraph& g, const SolverConfig& cfg, const LayoutOptions& opts) {
  LayoutCoords c = spectral_layout(g.as_unipartite(), cfg, opts);
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const NodeId u = c.nodes[i];
    const bool left = u < g.left_count();
    c.side[i] = left ? NodeSide::left : NodeSide::right;
    c.labels[i] = left ? g.left_ids().external(u) : g.right_ids().external(u - g.left_count());
  }
  return c;
}

LayoutCoords two_line_layout(const BipartiteGraph& g, const SolverConfig& cfg, const LayoutOptions& opts) {
  if (g.node_count() < 2) throw Error(ErrorKind::invalid_input, "two-line layout needs at least two nodes");
  const Graph flat = g.as_unipartite();
  Embedding e = laplacian_embedding(flat, 1, cfg, opts);
  LayoutCoords c;
  c.method = LayoutMethod::two_line;
  c.nodes = e.nodes;
  c.eigenvalues = e.spectrum.eigenvalues;
  for (std::size_t i = 0; i < e.nodes.size(); ++i) {
    const NodeId u = e.nodes[i];
    const bool left = u < g.left_count();
    c.x.push_back(e.spectrum.eigenvectors(static_cast<Eigen::Index>(i), 0));
    c.y.push_back(left ? 1.0 : -1.0);
    c.side.push_back(left ? NodeSide::left : NodeSide::right);
    c.labels.push_back(left ? g.left_ids().external(u) : g.right_ids().external(u - g.left_count()));
  }
  return c;
}

std::string render_svg(const LayoutCoords& c, std::span<const Edge> edges, const RenderOptions& opts) {
  const std::size_t n = c.nodes.size();
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  if (n > 0) {
    xmin = *std::min_element(c.x.begin(), c.x.end());
    xmax = *std::max_element(c.x.begin(), c.x.end());
    ymin = *std::min_element(c.y.begin(), c.y.end());
    ymax = *std::max_element(c.y.begin(), c.y.end());
  }
  // Uniform scale into the viewport minus 5% margins on each side.
  const double margin_x = 0.05 * opts.width;
  const double margin_y = 0.05 * opts.height;
  const double span_x = std::max(xmax - xmin, 1e-12);
  const double span_y = std::max(ymax - ymin, 1e-12);
  const double scale = std::min((opts.width - 2 * margin_x) / span_x, (opts.height - 2 * margin_y) / span_y);
  const double off_x = (opts.width - scale * (xmax - xmin)) / 2.0;
  const double off_y = (opts.height - scale * (ymax - ymin)) / 2.0;
  auto px = [&](std::size_t i) { return off_x + scale * (c.x[i] - xmin); };
  // SVG y grows downward; flip so positive y is up.
  auto py = [&](std::size_t i) { return opts.height - (off_y + scale * (c.y[i] - ymin)); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(opts.width) + "\" height=\"" + fmt(opts.height) +
         "\" viewBox=\"0 0 " + fmt(opts.width) + " " + fmt(opts.height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (opts.draw_edges) {
    NodeId max_node = 0;
    for (NodeId u : c.nodes) max_node = std::max(max_node, u);
    std::vector<std::int64_t> row(static_cast<std::size_t>(max_node) + 1, -1);
    for (std::size_t i = 0; i < n; ++i) row[c.nodes[i]] = static_cast<std::int64_t>(i);
    auto lookup = [&](NodeId u) -> std::int64_t {
      return (u >= 0 && u <= max_node) ? row[u] : -1;
    };
    out += "<g stroke=\"#888888\" stroke-width=\"0.5\">\n";
    for (const Edge& e : edges) {
      const auto a = lookup(e.u);
      const auto b = lookup(e.v);
      if (a < 0 || b < 0) continue;
      out += "<line x1=\"" + fmt(px(a)) + "\" y1=\"" + fmt(py(a)) + "\" x2=\"" + fmt(px(b)) + "\" y2=\"" +
             fmt(py(b)) + "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "<g stroke=\"black\" stroke-width=\"1\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const char* fill = c.side[i] == NodeSide::left ? "white" : "black";
    out += "<circle cx=\"" + fmt(px(i)) + "\" cy=\"" + fmt(py(i)) + "\" r=\"" + fmt(opts.node_radius) +
           "\" fill=\"" + fill + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string coords_tsv(const LayoutCoords& c) {
  std::string out = "id\tx\ty\tside\n";
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    out += std::to_string(c.labels[i]) + "\t" + fmt_coord(c.x[i]) + "\t" + fmt_coord(c.y[i]) + "\t" +
           side_name(c.side[i]) + "\n";
  }
  return out;
}

}  // namespace bipnet
