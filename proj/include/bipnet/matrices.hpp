#pragma once

#include <optional>

#include "bipnet/graph.hpp"
#include "bipnet/sparse.hpp"

namespace bipnet {

// Characteristic matrices. Edge weights are used directly and degrees are
// weighted row sums. Isolated nodes get all-zero rows and columns in the
// normalized matrices (their D^-1/2 entry is taken as 0).

// Directed graphs give the (asymmetric) arc matrix.
SparseMatrix adjacency(const Graph& g);
// Full (left_count + right_count) square matrix [0 B; B^T 0].
SparseMatrix adjacency(const BipartiteGraph& g);
SparseMatrix biadjacency(const BipartiteGraph& g);

SparseMatrix degree_matrix(const Graph& g);
SparseMatrix laplacian(const Graph& g);            // D - A
SparseMatrix signless_laplacian(const Graph& g);   // D + A
SparseMatrix normalized_adjacency(const Graph& g); // D^-1/2 A D^-1/2
// D_1^-1/2 B D_2^-1/2
SparseMatrix normalized_biadjacency(const BipartiteGraph& g);

struct CharacteristicMatrices {
  SparseMatrix adjacency;
  SparseMatrix degree;
  SparseMatrix laplacian;
  SparseMatrix signless_laplacian;
  SparseMatrix normalized_adjacency;
  std::optional<SparseMatrix> biadjacency;
  std::optional<SparseMatrix> normalized_biadjacency;
};

CharacteristicMatrices characteristic_matrices(const Graph& g);
// Square matrices are over the unipartite view (left nodes first).
CharacteristicMatrices characteristic_matrices(const BipartiteGraph& g);

}  // namespace bipnet
