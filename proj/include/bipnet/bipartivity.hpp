#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bipnet/graph.hpp"
#include "bipnet/spectral.hpp"

namespace bipnet {

inline constexpr NodeId kMaxExactFrustrationNodes = 20;

struct FrustrationResult {
  // Minimal total weight of frustrated edges (the edge count when unweighted).
  double frustration = 0.0;
  // frustration / total edge weight.
  double ratio = 0.0;
  // Class (0 or 1) of every node in one minimizing bipartition.
  std::vector<int> side;
};

// Exhaustive scan over all 2^(n-1) bipartitions. Throws scale_limit above 20
// nodes.
FrustrationResult frustration_exact(const Graph& g);

// Copy of g without isolated nodes (ids keep their original labels).
Graph drop_isolated(const Graph& g);

// (|V| / 8|E|) * lambda_min(D + A), over non-isolated nodes. Not clamped.
double measure_bK(const Graph& g, const SolverConfig& cfg);
// 1 - |lambda_min(A) / lambda_max(A)|
double measure_bA(const Graph& g, const SolverConfig& cfg);
// lambda_min(N) + 1, over non-isolated nodes.
double measure_bN(const Graph& g, const SolverConfig& cfg);
// Tr sinh(A) / Tr exp(A) from the dense spectrum; throws scale_limit above
// cfg.dense_threshold.
double measure_bc(const Graph& g, const SolverConfig& cfg);
// The same ratio from a given adjacency spectrum (evaluated with the largest
// eigenvalue factored out).
double odd_cycle_ratio(std::span<const double> eigenvalues);

struct BipartivityReport {
  std::optional<double> b_K;
  std::optional<double> b_A;
  std::optional<double> b_N;
  std::optional<double> b_c;
  std::optional<double> f_exact;
  std::optional<double> b_f;
  bool connected = true;
  // measure name -> availability or warning text
  std::map<std::string, std::string> notes;
};

// Every measure feasible at the graph's scale; individual failures are
// recorded in notes rather than thrown.
BipartivityReport bipartivity_report(const Graph& g, const SolverConfig& cfg);

}  // namespace bipnet
