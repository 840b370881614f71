#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bipnet/graph.hpp"
#include "bipnet/spectral.hpp"

namespace bipnet {

// Node classes are 0 or 1. Spectral splits put nonnegative embedding entries
// in class 0.
struct Partition {
  std::vector<int> classes;
};

struct BipartitePartition {
  std::vector<int> left;
  std::vector<int> right;

  // Classes over the unipartite view, left nodes first.
  Partition combined() const;
};

struct CutReport {
  double cut = 0.0;
  double rcut = 0.0;
  std::pair<std::int64_t, std::int64_t> class_sizes{0, 0};
};

// Cut weight between the classes and the ratio cut (1/|X| + 1/|Y|) * cut.
// Throws invalid_input when a class is empty.
CutReport evaluate_cut(const Graph& g, const Partition& p);
CutReport evaluate_cut(const BipartiteGraph& g, const BipartitePartition& p);

enum class SplitRule {
  sign,   // positive vs negative embedding entries
  sweep,  // best ratio cut over all threshold splits of the sorted embedding
};

struct SpectralBipartition {
  Partition partition;
  CutReport cut;
  Eigen::VectorXd embedding;  // Fiedler vector
  double eigenvalue = 0.0;
};

SpectralBipartition spectral_bipartition(const Graph& g, const SolverConfig& cfg,
                                         SplitRule rule = SplitRule::sign);

struct CoClustering {
  BipartitePartition partition;
  CutReport cut;
  Eigen::VectorXd left_embedding;   // D_1^-1/2 u_2
  Eigen::VectorXd right_embedding;  // D_2^-1/2 v_2
  double sigma1 = 0.0;
  double sigma2 = 0.0;
};

// Co-clustering from the second singular pair of D_1^-1/2 B D_2^-1/2. Throws
// `ambiguous` when sigma_2 is within 1e-10 of sigma_1.
CoClustering spectral_cocluster(const BipartiteGraph& g, const SolverConfig& cfg,
                                SplitRule rule = SplitRule::sign);

}  // namespace bipnet
