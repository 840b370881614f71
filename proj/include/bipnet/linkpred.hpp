#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bipnet/graph.hpp"
#include "bipnet/spectral.hpp"

namespace bipnet {

// Link prediction score functions.
//
//   pa       d(u) d(v)
//   cn       common neighbors (unipartite only)
//   p3       [B B^T B]_uv (bipartite only)
//   poly     odd polynomial of A, user coefficients
//   polyn    as poly, coefficients constrained nonnegative
//   neu      odd Neumann kernel  aA (I - a^2 A^2)^-1
//   sinh     sinh(aA)
//   exp      exp(aA)
//   neumann  (I - aA)^-1
//   n-*      the same functions of N = D^-1/2 A D^-1/2
//   n-heat   sinh(aN); named after the normalized heat kernel but defined as
//            the hyperbolic sine of N
//   com      commute-time kernel L^+
//   heat     exp(-aL)
//   random   seeded uniform scores (control)
enum class Method {
  pa,
  cn,
  p3,
  poly,
  polyn,
  neu,
  sinh,
  exp,
  neumann,
  n_poly,
  n_polyn,
  n_neu,
  n_heat,
  com,
  heat,
  random,
};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct KernelParams {
  // Unset picks the method default: 0.5 / lambda_max for the Neumann
  // kernels, 1 otherwise.
  std::optional<double> alpha;
  // Coefficients of x, x^3, x^5, ... for the polynomial methods.
  std::vector<double> poly_coefficients{1.0, 1.0 / 6.0, 1.0 / 120.0};
  // Decomposition rank; unset uses min(64, dim - 1), or the exact full
  // decomposition at or below the dense threshold.
  std::optional<int> rank;
  std::uint64_t seed = 0;  // random method only
};

class ScoreModel {
public:
  Method method() const noexcept { return method_; }
  bool bipartite() const noexcept { return bipartite_; }
  double alpha() const noexcept { return alpha_; }
  int rank() const noexcept { return rank_; }
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }

  // Unipartite: nodes u, v. Bipartite: left node u, right node v.
  double score(NodeId u, NodeId v) const;
  // Any pair over the unipartite view (left nodes first for bipartite
  // models). Symmetric in (i, j).
  double entry(NodeId i, NodeId j) const;

  struct State;

private:
  friend ScoreModel fit_kernel(const Graph&, Method, const KernelParams&, const SolverConfig&);
  friend ScoreModel fit_kernel(const BipartiteGraph&, Method, const KernelParams&, const SolverConfig&);
  Method method_ = Method::pa;
  bool bipartite_ = false;
  double alpha_ = 0.0;
  int rank_ = 0;
  std::vector<double> coefficients_;
  std::shared_ptr<const State> state_;
};

// Fits on the given (training) graph only.
ScoreModel fit_kernel(const Graph& g, Method m, const KernelParams& params, const SolverConfig& cfg);
ScoreModel fit_kernel(const BipartiteGraph& g, Method m, const KernelParams& params, const SolverConfig& cfg);

double score_pa(const Graph& g, NodeId u, NodeId v);
double score_pa(const BipartiteGraph& g, NodeId u, NodeId v);
double score_common_neighbors(const Graph& g, NodeId u, NodeId v);
// Walks of length three from left u to right v (weighted: [B B^T B]_uv).
double score_p3(const BipartiteGraph& g, NodeId u, NodeId v);

// Mann-Whitney statistic P(pos > neg) + P(pos = neg) / 2.
double auc(std::span<const double> positive, std::span<const double> negative);

struct SplitSpec {
  double train_fraction = 0.75;
  std::uint64_t seed = 1;
  // Time-ordered split (requires a timestamp on every edge).
  bool temporal = false;

  void validate() const;
};

struct NodePair {
  NodeId u;
  NodeId v;
  friend bool operator==(const NodePair&, const NodePair&) = default;
};

template <class G>
struct EdgeSplit {
  G training;
  std::vector<Edge> test;
};

// Training graphs keep every node of the input.
EdgeSplit<Graph> split(const Graph& g, const SplitSpec& spec);
EdgeSplit<BipartiteGraph> split(const BipartiteGraph& g, const SplitSpec& spec);

// `count` distinct pairs that are not edges of g (so neither training nor
// test edges). Bipartite pairs are (left, right). Rejection sampling with at
// most 100 * count draws.
std::vector<NodePair> sample_zero_edges(const Graph& g, std::size_t count, std::uint64_t seed);
std::vector<NodePair> sample_zero_edges(const BipartiteGraph& g, std::size_t count, std::uint64_t seed);

struct MethodResult {
  Method method = Method::pa;
  std::optional<double> auc;
  std::optional<std::string> error;
  double alpha = 0.0;
  int rank = 0;
  std::vector<double> coefficients;
  double millis = 0.0;
};

struct EvalReport {
  std::uint64_t seed = 0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::size_t zero_size = 0;
  bool temporal = false;
  std::vector<MethodResult> results;

  const MethodResult* find(Method m) const;
};

EvalReport run_experiment(const Graph& g, std::span<const Method> methods, const SplitSpec& spec,
                          const KernelParams& params, const SolverConfig& cfg);
EvalReport run_experiment(const BipartiteGraph& g, std::span<const Method> methods, const SplitSpec& spec,
                          const KernelParams& params, const SolverConfig& cfg);

// Stream seed for a task derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace bipnet
