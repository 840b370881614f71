#include "bipnet/bipartivity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "bipnet/error.hpp"
#include "bipnet/matrices.hpp"

namespace bipnet {
namespace {

void require_edges(const Graph& g) {
  if (g.directed()) throw Error(ErrorKind::invalid_input, "bipartivity measures need an undirected graph");
  if (g.edge_count() == 0) throw Error(ErrorKind::empty_graph, "graph has no edges");
}

double clamp_unit(double x, double hi) { return std::clamp(x, 0.0, hi); }

}  // namespace

FrustrationResult frustration_exact(const Graph& g) {
  if (g.directed()) throw Error(ErrorKind::invalid_input, "frustration needs an undirected graph");
  const NodeId n = g.node_count();
  if (n > kMaxExactFrustrationNodes)
    throw Error(ErrorKind::scale_limit, "exact frustration limited to 20 nodes; use b_K instead");

  struct Arc {
    NodeId to;
    double w;
  };
  std::vector<std::vector<Arc>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;  // loops are frustrated under every bipartition
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }

  FrustrationResult best;
  best.side.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) return best;

  // Gray-code walk over the sides of nodes 0..n-2; node n-1 stays in class 0.
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  double current = g.total_weight();
  best.frustration = current;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < total; ++step) {
    const int u = std::countr_zero(step);
    for (const Arc& a : adj[u]) current += (side[a.to] == side[u]) ? -a.w : a.w;
    side[u] ^= 1;
    if (current < best.frustration) {
      best.frustration = current;
      best.side = side;
    }
  }
  best.ratio = g.total_weight() > 0 ? best.frustration / g.total_weight() : 0.0;
  return best;
}

Graph drop_isolated(const Graph& g) {
  std::vector<NodeId> remap(static_cast<std::size_t>(g.node_count()), -1);
  std::vector<ExternalId> labels;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (!g.neighbors(u).empty()) {
      remap[u] = static_cast<NodeId>(labels.size());
      labels.push_back(g.ids().external(u));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({remap[e.u], remap[e.v], e.weight, e.time});
  const auto n = static_cast<NodeId>(labels.size());
  return Graph(n, std::move(edges), g.directed(), IdMap(std::move(labels)));
}

double measure_bK(const Graph& g, const SolverConfig& cfg) {
  require_edges(g);
  const Graph h = drop_isolated(g);
  const Spectrum s = extremal_eigs(signless_laplacian(h), Extremal::min, cfg);
  return static_cast<double>(h.node_count()) / (8.0 * h.total_weight()) * s.eigenvalues.front();
}

double measure_bA(const Graph& g, const SolverConfig& cfg) {
  require_edges(g);
  const Spectrum s = extremal_eigs(adjacency(g), Extremal::both, cfg);
  const double lmin = s.eigenvalues.front();
  const double lmax = s.eigenvalues.back();
  if (!(lmax > 0.0)) throw Error(ErrorKind::domain, "largest adjacency eigenvalue is not positive");
  return clamp_unit(1.0 - std::abs(lmin / lmax), 1.0);
}

double measure_bN(const Graph& g, const SolverConfig& cfg) {
  require_edges(g);
  const Spectrum s = extremal_eigs(normalized_adjacency(drop_isolated(g)), Extremal::min, cfg);
  return clamp_unit(s.eigenvalues.front() + 1.0, 1.0);
}

double odd_cycle_ratio(std::span<const double> eigenvalues) {
  if (eigenvalues.empty()) return 0.0;
  const double top = *std::max_element(eigenvalues.begin(), eigenvalues.end());
  double odd = 0.0;
  double all = 0.0;
  for (double l : eigenvalues) {
    // sinh(l) e^-top and exp(l) e^-top
    odd += 0.5 * (std::exp(l - top) - std::exp(-l - top));
    all += std::exp(l - top);
  }
  return clamp_unit(odd / all, 0.5);
}

double measure_bc(const Graph& g, const SolverConfig& cfg) {
  if (g.directed()) throw Error(ErrorKind::invalid_input, "bipartivity measures need an undirected graph");
  const Spectrum s = dense_spectrum(adjacency(g), cfg);
  return odd_cycle_ratio(s.eigenvalues);
}

BipartivityReport bipartivity_report(const Graph& g, const SolverConfig& cfg) {
  require_edges(g);
  BipartivityReport r;
  r.connected = pattern_connected(adjacency(drop_isolated(g)));
  if (!r.connected)
    r.notes["graph"] = "disconnected: extreme eigenvalues reflect a single component";

  auto attempt = [&](const char* name, std::optional<double>& slot, auto&& fn) {
    try {
      slot = fn();
    } catch (const Error& e) {
      r.notes[name] = std::string("unavailable: ") + e.what();
    }
  };
  attempt("b_A", r.b_A, [&] { return measure_bA(g, cfg); });
  attempt("b_N", r.b_N, [&] { return measure_bN(g, cfg); });
  attempt("b_K", r.b_K, [&] { return measure_bK(g, cfg); });
  if (r.b_K && (*r.b_K < -1e-9 || *r.b_K > 0.5 + 1e-9))
    r.notes["b_K"] = "warning: relaxed value outside [0, 1/2]";
  if (g.node_count() <= cfg.dense_threshold) {
    attempt("b_c", r.b_c, [&] { return measure_bc(g, cfg); });
  } else {
    r.notes["b_c"] = "unavailable: dimension exceeds dense_threshold";
  }
  if (g.node_count() <= kMaxExactFrustrationNodes) {
    const FrustrationResult f = frustration_exact(g);
    r.f_exact = f.frustration;
    r.b_f = f.ratio;
  } else {
    r.notes["f_exact"] = "unavailable: more than 20 nodes";
  }
  return r;
}

}  // namespace bipnet
