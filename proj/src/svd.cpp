#include <algorithm>
#include <cmath>
#include <random>

#include "bipnet/error.hpp"
#include "bipnet/spectral.hpp"

namespace bipnet {
namespace {

// Column-major basis with two-pass Gram-Schmidt, shared by both sides of the
// bidiagonalization.
class Basis {
public:
  Basis(std::int32_t n, int columns) : n_(static_cast<std::size_t>(n)), data_(n_ * static_cast<std::size_t>(columns)) {}

  std::span<double> col(int j) { return {data_.data() + static_cast<std::size_t>(j) * n_, n_}; }
  Eigen::Map<Eigen::MatrixXd> leading(int cols) { return {data_.data(), static_cast<Eigen::Index>(n_), cols}; }

  void orthogonalize(std::span<double> w, int cols) {
    if (cols == 0) return;
    const auto& k = simd::active_kernels();
    coef_.resize(static_cast<std::size_t>(cols));
    std::span<const double> b(data_.data(), n_ * static_cast<std::size_t>(cols));
    for (int pass = 0; pass < 2; ++pass) {
      k.gemv_t(b, n_, w, coef_);
      k.gemv_n_sub(b, n_, coef_, w);
    }
  }

  bool random_unit(std::span<double> out, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    for (int attempt = 0; attempt < 3; ++attempt) {
      for (double& x : out) x = normal(rng);
      const double before = simd::norm2(out);
      orthogonalize(out, cols);
      const double after = simd::norm2(out);
      if (after > 1e-8 * before) {
        simd::scale(1.0 / after, out);
        return true;
      }
    }
    return false;
  }

private:
  std::size_t n_;
  std::vector<double> data_;
  std::vector<double> coef_;
};

void apply(const SparseMatrix& m, std::span<const double> x, std::span<double> y) { m.multiply(x, y); }

// Augmented implicitly restarted Lanczos bidiagonalization (thick restart on
// the singular triplets). Requires b.cols() <= b.rows() so the right basis
// can span its whole space.
SingularTriplets restarted_bidiagonalization(const SparseMatrix& b, const SparseMatrix& bt, int rank,
                                             const SolverConfig& cfg) {
  const std::int32_t m = b.rows();
  const std::int32_t n = b.cols();
  int work = cfg.krylov_dim > 0 ? cfg.krylov_dim : std::max(2 * rank + 10, 30);
  work = std::min(std::max(work, rank + 1), static_cast<int>(n));

  Basis v(n, work + 1);
  Basis w(m, work);
  std::mt19937_64 rng(cfg.seed);
  if (!v.random_unit(v.col(0), 0, rng)) throw Error(ErrorKind::invalid_input, "empty matrix");

  const auto& kern = simd::active_kernels();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(work, work);
  std::vector<double> f(static_cast<std::size_t>(n));
  int kept = 0;
  long applications = 0;
  double sigma_est = 0.0;

  while (true) {
    double beta_last = 0.0;
    int w_eff = work;
    for (int j = kept; j < work; ++j) {
      auto wj = w.col(j);
      apply(b, v.col(j), wj);
      ++applications;
      if (j == kept) {
        for (int i = 0; i < kept; ++i) kern.axpy(-s(i, kept), w.col(i), wj);
      } else {
        kern.axpy(-s(j - 1, j), w.col(j - 1), wj);
      }
      w.orthogonalize(wj, j);
      double alpha = simd::norm2(wj);
      sigma_est = std::max(sigma_est, alpha);
      if (alpha <= 1e-12 * std::max(sigma_est, 1e-300)) {
        alpha = 0.0;
        if (!w.random_unit(wj, j, rng)) throw Error(ErrorKind::invalid_input, "left basis exhausted");
      } else {
        kern.scale(1.0 / alpha, wj);
      }
      s(j, j) = alpha;

      apply(bt, wj, f);
      ++applications;
      kern.axpy(-alpha, v.col(j), f);
      v.orthogonalize(f, j + 1);
      double beta = simd::norm2(f);
      sigma_est = std::max(sigma_est, beta);
      auto next = v.col(j + 1);
      if (beta <= 1e-12 * std::max(sigma_est, 1e-300)) {
        beta = 0.0;
        if (!v.random_unit(next, j + 1, rng)) {
          w_eff = j + 1;
          break;
        }
      } else {
        for (std::size_t i = 0; i < f.size(); ++i) next[i] = f[i] / beta;
      }
      if (j + 1 < work) s(j, j + 1) = beta;
      else beta_last = beta;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(s.topLeftCorner(w_eff, w_eff), Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const Eigen::MatrixXd& p = svd.matrixU();
    const Eigen::MatrixXd& q = svd.matrixV();
    sigma_est = std::max(sigma_est, sigma(0));

    bool done = true;
    double worst = 0.0;
    for (int i = 0; i < rank; ++i) {
      const double r = std::abs(beta_last * p(w_eff - 1, i));
      worst = std::max(worst, r);
      if (r > cfg.tol * sigma_est) done = false;
    }
    const bool exhausted = w_eff < work;
    if (done || exhausted) {
      SingularTriplets out;
      out.rows = m;
      out.cols = n;
      out.rank_requested = rank;
      out.left_vectors = w.leading(w_eff) * p.leftCols(rank);
      out.right_vectors = v.leading(w_eff) * q.leftCols(rank);
      for (int i = 0; i < rank; ++i) {
        out.singular_values.push_back(sigma(i));
        out.residual_norms.push_back(exhausted ? 0.0 : std::abs(beta_last * p(w_eff - 1, i)));
        out.converged.push_back(true);
      }
      return out;
    }
    if (applications >= cfg.max_iter) {
      throw ConvergenceError("bidiagonalization did not converge within max_iter operator applications",
                             worst / std::max(sigma_est, 1e-300));
    }

    const int keep = std::max(1, std::min(rank + (w_eff - rank) / 2, w_eff - 1));
    Eigen::MatrixXd vk = v.leading(w_eff) * q.leftCols(keep);
    Eigen::MatrixXd wk = w.leading(w_eff) * p.leftCols(keep);
    v.leading(keep) = vk;
    w.leading(keep) = wk;
    auto src = v.col(w_eff);
    auto dst = v.col(keep);
    std::copy(src.begin(), src.end(), dst.begin());
    s.setZero();
    for (int i = 0; i < keep; ++i) {
      s(i, i) = sigma(i);
      s(i, keep) = beta_last * p(w_eff - 1, i);
    }
    kept = keep;
  }
}

void finish(const SparseMatrix& b, SingularTriplets& t, double tol) {
  const double top = t.singular_values.empty() ? 0.0 : t.singular_values.front();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto c = static_cast<Eigen::Index>(i);
    Eigen::VectorXd bv(b.rows());
    Eigen::VectorXd v = t.right_vectors.col(c);
    b.multiply(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())),
               std::span<double>(bv.data(), static_cast<std::size_t>(bv.size())));
    t.residual_norms[i] = (bv - t.singular_values[i] * t.left_vectors.col(c)).norm();
    t.converged[i] = t.residual_norms[i] <= tol * std::max(top, 1e-300) * 1.01 || t.residual_norms[i] == 0.0;
  }
}

}  // namespace

SingularTriplets truncated_svd(const SparseMatrix& b, int rank, const SolverConfig& cfg) {
  cfg.validate();
  const int small = std::min(b.rows(), b.cols());
  if (small == 0) throw Error(ErrorKind::invalid_input, "empty matrix");
  if (rank < 1 || rank > small) throw Error(ErrorKind::invalid_input, "rank must lie in [1, min(rows, cols)]");

  SingularTriplets out;
  if (std::max(b.rows(), b.cols()) <= cfg.dense_threshold) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(b.to_dense(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    out.rows = b.rows();
    out.cols = b.cols();
    out.rank_requested = rank;
    out.left_vectors = svd.matrixU().leftCols(rank);
    out.right_vectors = svd.matrixV().leftCols(rank);
    for (int i = 0; i < rank; ++i) out.singular_values.push_back(svd.singularValues()(i));
    out.residual_norms.assign(static_cast<std::size_t>(rank), 0.0);
    out.converged.assign(static_cast<std::size_t>(rank), true);
  } else {
    const SparseMatrix bt = b.transpose();
    if (b.cols() <= b.rows()) {
      out = restarted_bidiagonalization(b, bt, rank, cfg);
    } else {
      out = restarted_bidiagonalization(bt, b, rank, cfg);
      std::swap(out.left_vectors, out.right_vectors);
      std::swap(out.rows, out.cols);
    }
  }
  sign_normalize(out.left_vectors, out.right_vectors);
  finish(b, out, cfg.tol);
  return out;
}

}  // namespace bipnet
