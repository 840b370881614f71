#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bipnet/sparse.hpp"

namespace bipnet {

struct SolverConfig {
  // Residual tolerance relative to the operator norm estimate.
  double tol = 1e-8;
  // Cap on operator applications per Krylov run.
  int max_iter = 100000;
  // Problems of at most this dimension are solved densely.
  int dense_threshold = 1000;
  std::uint64_t seed = 42;
  // Krylov basis size; 0 picks one from the number of wanted pairs.
  int krylov_dim = 0;

  void validate() const;
};

// Eigenpairs in ascending eigenvalue order. Eigenvectors are the columns of
// `eigenvectors` and follow the sign convention of sign_normalize().
struct Spectrum {
  std::int32_t dimension = 0;
  std::vector<double> eigenvalues;
  Eigen::MatrixXd eigenvectors;
  std::vector<bool> converged;
  std::vector<double> residual_norms;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  bool complete() const noexcept { return eigenvalues.size() == static_cast<std::size_t>(dimension); }
  bool all_converged() const;
  Eigen::VectorXd vector(std::size_t i) const { return eigenvectors.col(static_cast<Eigen::Index>(i)); }
};

// Singular triplets in descending order of singular value.
struct SingularTriplets {
  std::int32_t rows = 0;
  std::int32_t cols = 0;
  int rank_requested = 0;
  std::vector<double> singular_values;
  Eigen::MatrixXd left_vectors;   // rows x r
  Eigen::MatrixXd right_vectors;  // cols x r
  std::vector<bool> converged;
  std::vector<double> residual_norms;

  std::size_t size() const noexcept { return singular_values.size(); }
  bool all_converged() const;
};

// Flips each column so that its first entry of largest magnitude is positive.
// Applied to both factors of an SVD using the left vector.
void sign_normalize(Eigen::MatrixXd& vectors);
void sign_normalize(Eigen::MatrixXd& left, Eigen::MatrixXd& right);

// Symmetric linear operator y = M x on R^n.
struct SymmetricOperator {
  std::int32_t dimension = 0;
  std::function<void(std::span<const double>, std::span<double>)> apply;
};

// Largest `count` eigenpairs (descending) of an operator by thick-restart
// Lanczos with full reorthogonalization. Iteration stays in the orthogonal
// complement of the columns of `deflate` (orthonormal, possibly empty).
struct KrylovResult {
  std::vector<double> values;
  Eigen::MatrixXd vectors;
  std::vector<double> residuals;
  std::vector<bool> converged;
  double norm_estimate = 0.0;
  long operator_applications = 0;
};
KrylovResult largest_eigenpairs(const SymmetricOperator& op, int count, const SolverConfig& cfg,
                                const Eigen::MatrixXd& deflate = Eigen::MatrixXd());

enum class Extremal { max, min, both };

// Extreme eigenvalues of a symmetric matrix. The minimum is obtained as
// lambda_max - (largest eigenvalue of lambda_max*I - M). Dimensions at or
// below cfg.dense_threshold use the dense solver.
Spectrum extremal_eigs(const SparseMatrix& m, Extremal which, const SolverConfig& cfg);

// `count` largest (or smallest) eigenpairs; count == dimension uses the dense
// path whenever it is within the threshold.
Spectrum eigenpairs(const SparseMatrix& m, int count, Extremal end, const SolverConfig& cfg);

// Full spectrum; throws scale_limit when the dimension exceeds
// cfg.dense_threshold.
Spectrum dense_spectrum(const SparseMatrix& m, const SolverConfig& cfg = {});

// Top-`rank` singular triplets without forming B^T B.
SingularTriplets truncated_svd(const SparseMatrix& b, int rank, const SolverConfig& cfg);

// Eigenpairs of the `count` smallest nonzero Laplacian eigenvalues,
// orthogonal to the constant vector. Throws `disconnected` for graphs whose
// Laplacian has more than one zero eigenvalue.
Spectrum smallest_nonzero_laplacian_vectors(const SparseMatrix& laplacian, int count,
                                            const SolverConfig& cfg);

// True when the off-diagonal pattern of a square matrix is connected.
bool pattern_connected(const SparseMatrix& m);

// Dense entry accessor for a matrix function evaluated through a
// decomposition: U f(L) U^T for eigen-decompositions, or the bipartite block
// matrix [0, U f(S) V^T; V f(S) U^T, 0] for singular triplets. Indices for the
// block form run over left nodes first, then right nodes.
class MatrixFunction {
public:
  double entry(std::int32_t i, std::int32_t j) const;
  // Entry of the off-diagonal block: left node `u`, right node `v`.
  double cross(std::int32_t u, std::int32_t v) const;
  std::int32_t dimension() const noexcept { return dimension_; }
  bool bipartite() const noexcept { return bipartite_; }
  Eigen::MatrixXd dense() const;

private:
  friend MatrixFunction apply_matrix_function(const Spectrum&, const std::function<double(double)>&);
  friend MatrixFunction apply_matrix_function(const SingularTriplets&,
                                              const std::function<double(double)>&);
  Eigen::MatrixXd left_;   // rows scaled by f on the right: U diag(f)
  Eigen::MatrixXd right_;  // U or V
  std::int32_t dimension_ = 0;
  std::int32_t split_ = 0;
  bool bipartite_ = false;
};

MatrixFunction apply_matrix_function(const Spectrum& dec, const std::function<double(double)>& f);
// f must be odd on the singular values; even or mixed functions have
// nonzero diagonal blocks and are rejected.
MatrixFunction apply_matrix_function(const SingularTriplets& dec,
                                     const std::function<double(double)>& f);

// Entry of L^+ from a Laplacian spectrum; eigenvalues below the zero
// threshold are skipped.
double laplacian_pseudoinverse_entry(const Spectrum& laplacian_spectrum, std::int32_t u,
                                     std::int32_t v);

// Threshold under which a Laplacian eigenvalue counts as zero.
double laplacian_zero_threshold(const Spectrum& laplacian_spectrum);

}  // namespace bipnet
