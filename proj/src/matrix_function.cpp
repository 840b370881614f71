#include <cmath>

#include "bipnet/error.hpp"
#include "bipnet/spectral.hpp"

namespace bipnet {

MatrixFunction apply_matrix_function(const Spectrum& dec, const std::function<double(double)>& f) {
  if (!dec.all_converged()) throw Error(ErrorKind::non_convergence, "decomposition not converged");
  MatrixFunction out;
  out.dimension_ = dec.dimension;
  out.right_ = dec.eigenvectors;
  out.left_ = dec.eigenvectors;
  for (std::size_t i = 0; i < dec.size(); ++i) out.left_.col(static_cast<Eigen::Index>(i)) *= f(dec.eigenvalues[i]);
  return out;
}

MatrixFunction apply_matrix_function(const SingularTriplets& dec, const std::function<double(double)>& f) {
  if (!dec.all_converged()) throw Error(ErrorKind::non_convergence, "decomposition not converged");
  // Only the odd part of f survives in the off-diagonal blocks.
  const double at_zero = f(0.0);
  if (std::abs(at_zero) > 1e-12)
    throw Error(ErrorKind::domain, "bipartite block evaluation needs an odd function (f(0) != 0)");
  for (double s : dec.singular_values) {
    const double pos = f(s);
    const double neg = f(-s);
    if (std::abs(pos + neg) > 1e-10 * std::max(1.0, std::abs(pos)))
      throw Error(ErrorKind::domain, "bipartite block evaluation needs an odd function");
  }
  MatrixFunction out;
  out.bipartite_ = true;
  out.split_ = dec.rows;
  out.dimension_ = dec.rows + dec.cols;
  out.left_ = dec.left_vectors;
  out.right_ = dec.right_vectors;
  for (std::size_t i = 0; i < dec.size(); ++i) out.left_.col(static_cast<Eigen::Index>(i)) *= f(dec.singular_values[i]);
  return out;
}

double MatrixFunction::cross(std::int32_t u, std::int32_t v) const {
  if (!bipartite_) throw Error(ErrorKind::invalid_input, "cross() needs a bipartite block function");
  if (u < 0 || u >= split_ || v < 0 || v >= dimension_ - split_)
    throw Error(ErrorKind::invalid_input, "node id out of range");
  return left_.row(u).dot(right_.row(v));
}

double MatrixFunction::entry(std::int32_t i, std::int32_t j) const {
  if (i < 0 || j < 0 || i >= dimension_ || j >= dimension_) throw Error(ErrorKind::invalid_input, "node id out of range");
  if (!bipartite_) return left_.row(i).dot(right_.row(j));
  const bool li = i < split_;
  const bool lj = j < split_;
  if (li == lj) return 0.0;
  return li ? cross(i, j - split_) : cross(j, i - split_);
}

Eigen::MatrixXd MatrixFunction::dense() const {
  if (!bipartite_) return left_ * right_.transpose();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dimension_, dimension_);
  const Eigen::MatrixXd block = left_ * right_.transpose();
  out.topRightCorner(split_, dimension_ - split_) = block;
  out.bottomLeftCorner(dimension_ - split_, split_) = block.transpose();
  return out;
}

double laplacian_zero_threshold(const Spectrum& s) {
  double top = 0.0;
  for (double v : s.eigenvalues) top = std::max(top, std::abs(v));
  return 1e-9 * std::max(1.0, top);
}

double laplacian_pseudoinverse_entry(const Spectrum& s, std::int32_t u, std::int32_t v) {
  if (u < 0 || v < 0 || u >= s.dimension || v >= s.dimension) throw Error(ErrorKind::invalid_input, "node id out of range");
  const double zero = laplacian_zero_threshold(s);
  int zeros = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double lambda = s.eigenvalues[i];
    if (lambda <= zero) {
      ++zeros;
      continue;
    }
    const auto c = static_cast<Eigen::Index>(i);
    sum += s.eigenvectors(u, c) * s.eigenvectors(v, c) / lambda;
  }
  if (zeros > 1) throw Error(ErrorKind::disconnected, "graph disconnected: Laplacian has several zero eigenvalues");
  return sum;
}

}  // namespace bipnet
