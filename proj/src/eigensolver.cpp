#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>

#include "bipnet/error.hpp"
#include "bipnet/spectral.hpp"

namespace bipnet {

void SolverConfig::validate() const {
  if (!(tol > 0.0)) throw Error(ErrorKind::invalid_input, "solver tolerance must be positive");
  if (max_iter < 1) throw Error(ErrorKind::invalid_input, "max_iter must be positive");
  if (dense_threshold < 2) throw Error(ErrorKind::invalid_input, "dense_threshold must be at least 2");
  if (krylov_dim < 0) throw Error(ErrorKind::invalid_input, "krylov_dim must be nonnegative");
}

bool Spectrum::all_converged() const {
  return std::all_of(converged.begin(), converged.end(), [](bool c) { return c; });
}

bool SingularTriplets::all_converged() const {
  return std::all_of(converged.begin(), converged.end(), [](bool c) { return c; });
}

namespace {

// Sign of the first entry of largest magnitude; ties within 1e-12 relative go
// to the earliest index so the result does not depend on rounding noise.
double dominant_sign(const Eigen::Ref<const Eigen::VectorXd>& v) {
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return 1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) >= peak * (1.0 - 1e-12)) return v(i) < 0.0 ? -1.0 : 1.0;
  return 1.0;
}

}  // namespace

void sign_normalize(Eigen::MatrixXd& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c)
    if (dominant_sign(vectors.col(c)) < 0.0) vectors.col(c) *= -1.0;
}

void sign_normalize(Eigen::MatrixXd& left, Eigen::MatrixXd& right) {
  for (Eigen::Index c = 0; c < left.cols(); ++c) {
    if (dominant_sign(left.col(c)) < 0.0) {
      left.col(c) *= -1.0;
      right.col(c) *= -1.0;
    }
  }
}

namespace {

// Re-orthonormalizes groups of vectors whose eigenvalues agree to 1e-10.
// `values` must be sorted (either direction).
void orthonormalize_clusters(std::span<const double> values, Eigen::MatrixXd& vectors) {
  std::size_t start = 0;
  while (start < values.size()) {
    std::size_t end = start + 1;
    while (end < values.size() && std::abs(values[end] - values[end - 1]) < 1e-10) ++end;
    if (end - start > 1) {
      const auto cols = static_cast<Eigen::Index>(end - start);
      Eigen::MatrixXd block = vectors.middleCols(static_cast<Eigen::Index>(start), cols);
      for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index p = 0; p < c; ++p) block.col(c) -= block.col(p).dot(block.col(c)) * block.col(p);
        block.col(c).normalize();
      }
      vectors.middleCols(static_cast<Eigen::Index>(start), cols) = block;
    }
    start = end;
  }
}

class LanczosBasis {
public:
  LanczosBasis(std::int32_t n, int columns, const Eigen::MatrixXd& deflate)
      : n_(static_cast<std::size_t>(n)), data_(n_ * static_cast<std::size_t>(columns)), deflate_(deflate) {}

  std::span<double> col(int j) { return {data_.data() + static_cast<std::size_t>(j) * n_, n_}; }
  std::span<const double> col(int j) const { return {data_.data() + static_cast<std::size_t>(j) * n_, n_}; }
  Eigen::Map<Eigen::MatrixXd> leading(int cols) { return {data_.data(), static_cast<Eigen::Index>(n_), cols}; }

  // Two passes of classical Gram-Schmidt against the deflation set and the
  // first `cols` basis vectors. Returns the accumulated coefficient on the
  // last of those columns.
  double orthogonalize(std::span<double> w, int cols) {
    const auto& k = simd::active_kernels();
    coef_.resize(static_cast<std::size_t>(std::max<Eigen::Index>(cols, deflate_.cols())));
    double last = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
      if (deflate_.cols() > 0) {
        std::span<const double> d(deflate_.data(), static_cast<std::size_t>(deflate_.size()));
        std::span<double> h(coef_.data(), static_cast<std::size_t>(deflate_.cols()));
        k.gemv_t(d, n_, w, h);
        k.gemv_n_sub(d, n_, h, w);
      }
      if (cols > 0) {
        std::span<const double> b(data_.data(), n_ * static_cast<std::size_t>(cols));
        std::span<double> h(coef_.data(), static_cast<std::size_t>(cols));
        k.gemv_t(b, n_, w, h);
        k.gemv_n_sub(b, n_, h, w);
        last += h[static_cast<std::size_t>(cols) - 1];
      }
    }
    return last;
  }

  // Fills column j with a random unit vector orthogonal to columns [0, j)
  // and the deflation set. False when that complement is numerically empty.
  bool random_column(int j, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    auto c = col(j);
    for (int attempt = 0; attempt < 3; ++attempt) {
      for (double& x : c) x = normal(rng);
      const double before = simd::norm2(c);
      orthogonalize(c, j);
      const double after = simd::norm2(c);
      if (after > 1e-8 * before) {
        simd::scale(1.0 / after, c);
        return true;
      }
    }
    return false;
  }

private:
  std::size_t n_;
  std::vector<double> data_;
  const Eigen::MatrixXd& deflate_;
  std::vector<double> coef_;
};

KrylovResult thick_restart_lanczos(const SymmetricOperator& op, int count, const SolverConfig& cfg,
                                   const Eigen::MatrixXd& deflate, std::uint64_t seed) {
  const std::int32_t n = op.dimension;
  const int avail = n - static_cast<int>(deflate.cols());
  if (count < 1 || count > avail) throw Error(ErrorKind::invalid_input, "requested more eigenpairs than the dimension");

  int m = cfg.krylov_dim > 0 ? cfg.krylov_dim : std::max(2 * count + 20, 40);
  m = std::min(std::max(m, count + 1), avail);

  LanczosBasis basis(n, m + 1, deflate);
  std::mt19937_64 rng(seed);
  if (!basis.random_column(0, rng)) throw Error(ErrorKind::invalid_input, "empty Krylov space");

  const auto& kern = simd::active_kernels();
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  std::vector<double> w(static_cast<std::size_t>(n));
  KrylovResult result;
  int kept = 0;
  double norm_est = 0.0;

  while (true) {
    int m_eff = m;
    double beta_last = 0.0;
    for (int j = kept; j < m; ++j) {
      op.apply(basis.col(j), w);
      ++result.operator_applications;
      if (j == kept) {
        for (int i = 0; i < kept; ++i) kern.axpy(-t(i, kept), basis.col(i), w);
      } else {
        kern.axpy(-t(j - 1, j), basis.col(j - 1), w);
      }
      double alpha = kern.dot(basis.col(j), w);
      kern.axpy(-alpha, basis.col(j), w);
      alpha += basis.orthogonalize(w, j + 1);
      t(j, j) = alpha;
      double beta = simd::norm2(w);
      norm_est = std::max(norm_est, std::abs(alpha) + beta);

      if (beta <= 1e-12 * norm_est) {
        beta = 0.0;
        if (!basis.random_column(j + 1, rng)) {
          m_eff = j + 1;
          break;
        }
      } else {
        auto next = basis.col(j + 1);
        for (std::size_t i = 0; i < w.size(); ++i) next[i] = w[i] / beta;
      }
      if (j + 1 < m) {
        t(j, j + 1) = beta;
        t(j + 1, j) = beta;
      } else {
        beta_last = beta;
      }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t.topLeftCorner(m_eff, m_eff));
    const Eigen::VectorXd& theta = es.eigenvalues();
    const Eigen::MatrixXd& y = es.eigenvectors();
    norm_est = std::max({norm_est, std::abs(theta(0)), std::abs(theta(m_eff - 1))});

    // Descending order of Ritz values.
    std::vector<int> order(static_cast<std::size_t>(m_eff));
    std::iota(order.begin(), order.end(), 0);
    std::reverse(order.begin(), order.end());

    bool done = true;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      const double r = std::abs(beta_last * y(m_eff - 1, order[i]));
      worst = std::max(worst, r);
      if (r > cfg.tol * norm_est) done = false;
    }
    const bool exhausted = m_eff < m;
    if (done || exhausted) {
      Eigen::MatrixXd ysel(m_eff, count);
      for (int i = 0; i < count; ++i) ysel.col(i) = y.col(order[i]);
      result.vectors = basis.leading(m_eff) * ysel;
      result.values.resize(static_cast<std::size_t>(count));
      result.residuals.resize(static_cast<std::size_t>(count));
      result.converged.assign(static_cast<std::size_t>(count), true);
      for (int i = 0; i < count; ++i) {
        result.values[i] = theta(order[i]);
        result.residuals[i] = exhausted ? 0.0 : std::abs(beta_last * y(m_eff - 1, order[i]));
      }
      result.norm_estimate = norm_est;
      return result;
    }
    if (result.operator_applications >= cfg.max_iter) {
      throw ConvergenceError("Lanczos iteration did not converge within max_iter operator applications",
                             worst / std::max(norm_est, 1e-300));
    }

    const int keep = std::max(1, std::min(count + (m_eff - count) / 2, m_eff - 1));
    Eigen::MatrixXd ykeep(m_eff, keep);
    for (int i = 0; i < keep; ++i) ykeep.col(i) = y.col(order[i]);
    Eigen::MatrixXd ritz = basis.leading(m_eff) * ykeep;
    basis.leading(keep) = ritz;
    auto src = basis.col(m_eff);
    auto dst = basis.col(keep);
    std::copy(src.begin(), src.end(), dst.begin());
    t.setZero();
    for (int i = 0; i < keep; ++i) {
      t(i, i) = theta(order[i]);
      const double s = beta_last * y(m_eff - 1, order[i]);
      t(i, keep) = s;
      t(keep, i) = s;
    }
    kept = keep;
  }
}

}  // namespace

// A single start vector cannot see more than one copy of a repeated
// eigenvalue in exact arithmetic, so for count > 1 the converged set is
// probed again from a fresh start vector in the deflated complement.
KrylovResult largest_eigenpairs(const SymmetricOperator& op, int count, const SolverConfig& cfg,
                                const Eigen::MatrixXd& deflate) {
  cfg.validate();
  KrylovResult res = thick_restart_lanczos(op, count, cfg, deflate, cfg.seed);
  const int avail = op.dimension - static_cast<int>(deflate.cols());
  for (int probe = 1; count > 1 && probe <= count && count < avail; ++probe) {
    Eigen::MatrixXd locked(op.dimension, deflate.cols() + count);
    locked << deflate, res.vectors;
    KrylovResult extra = thick_restart_lanczos(op, 1, cfg, locked, cfg.seed + static_cast<std::uint64_t>(probe));
    res.operator_applications += extra.operator_applications;
    if (extra.values[0] <= res.values.back() + cfg.tol * res.norm_estimate) break;
    // Insert the missed pair, dropping the smallest.
    std::size_t pos = 0;
    while (pos < res.values.size() && res.values[pos] >= extra.values[0]) ++pos;
    res.values.insert(res.values.begin() + static_cast<std::ptrdiff_t>(pos), extra.values[0]);
    res.residuals.insert(res.residuals.begin() + static_cast<std::ptrdiff_t>(pos), extra.residuals[0]);
    res.converged.insert(res.converged.begin() + static_cast<std::ptrdiff_t>(pos), extra.converged[0]);
    Eigen::MatrixXd merged(op.dimension, count + 1);
    merged << res.vectors.leftCols(static_cast<Eigen::Index>(pos)), extra.vectors,
        res.vectors.rightCols(count - static_cast<Eigen::Index>(pos));
    res.values.pop_back();
    res.residuals.pop_back();
    res.converged.pop_back();
    res.vectors = merged.leftCols(count);
  }
  orthonormalize_clusters(res.values, res.vectors);
  return res;
}

namespace {

SymmetricOperator matrix_operator(const SparseMatrix& m) {
  return {m.rows(), [&m](std::span<const double> x, std::span<double> y) { m.multiply(x, y); }};
}

SymmetricOperator shifted_operator(const SparseMatrix& m, double shift) {
  return {m.rows(), [&m, shift](std::span<const double> x, std::span<double> y) {
            m.multiply(x, y);
            for (std::size_t i = 0; i < y.size(); ++i) y[i] = shift * x[i] - y[i];
          }};
}

void require_symmetric(const SparseMatrix& m) {
  if (m.rows() != m.cols() || !m.is_symmetric())
    throw Error(ErrorKind::invalid_input, "matrix must be square and symmetric");
}

double residual_norm(const SparseMatrix& m, const Eigen::VectorXd& x, double lambda) {
  Eigen::VectorXd y(x.size());
  m.multiply(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
             std::span<double>(y.data(), static_cast<std::size_t>(y.size())));
  return (y - lambda * x).norm();
}

// Fills residuals/converged from explicit M x - lambda x products.
void finish_spectrum(const SparseMatrix& m, Spectrum& s, double tol, double norm_est) {
  s.residual_norms.resize(s.eigenvalues.size());
  s.converged.resize(s.eigenvalues.size());
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    s.residual_norms[i] = residual_norm(m, s.vector(i), s.eigenvalues[i]);
    s.converged[i] = s.residual_norms[i] <= tol * std::max(norm_est, 1.0);
  }
}

struct DenseEig {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

DenseEig dense_eig(const SparseMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.to_dense());
  if (es.info() != Eigen::Success) throw Error(ErrorKind::non_convergence, "dense eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

Spectrum select_dense(const SparseMatrix& m, const DenseEig& d, std::vector<Eigen::Index> picks,
                      const SolverConfig& cfg) {
  std::sort(picks.begin(), picks.end());
  Spectrum s;
  s.dimension = m.rows();
  s.eigenvectors.resize(m.rows(), static_cast<Eigen::Index>(picks.size()));
  for (std::size_t i = 0; i < picks.size(); ++i) {
    s.eigenvalues.push_back(d.values(picks[i]));
    s.eigenvectors.col(static_cast<Eigen::Index>(i)) = d.vectors.col(picks[i]);
  }
  orthonormalize_clusters(s.eigenvalues, s.eigenvectors);
  sign_normalize(s.eigenvectors);
  const double norm_est = d.values.size() ? d.values.cwiseAbs().maxCoeff() : 0.0;
  finish_spectrum(m, s, cfg.tol, norm_est);
  return s;
}

}  // namespace

Spectrum dense_spectrum(const SparseMatrix& m, const SolverConfig& cfg) {
  cfg.validate();
  require_symmetric(m);
  if (m.rows() > cfg.dense_threshold) {
    throw Error(ErrorKind::scale_limit,
                "dimension " + std::to_string(m.rows()) + " exceeds dense_threshold " +
                    std::to_string(cfg.dense_threshold) + "; full spectrum (and b_c) unavailable at this scale");
  }
  const DenseEig d = dense_eig(m);
  std::vector<Eigen::Index> all(static_cast<std::size_t>(m.rows()));
  std::iota(all.begin(), all.end(), 0);
  return select_dense(m, d, std::move(all), cfg);
}

Spectrum eigenpairs(const SparseMatrix& m, int count, Extremal end, const SolverConfig& cfg) {
  cfg.validate();
  require_symmetric(m);
  const std::int32_t n = m.rows();
  if (n == 0) throw Error(ErrorKind::invalid_input, "empty matrix");
  if (end == Extremal::both) throw Error(ErrorKind::invalid_input, "use extremal_eigs for both ends");
  if (count < 1 || count > n) throw Error(ErrorKind::invalid_input, "eigenpair count out of range");

  if (n <= cfg.dense_threshold) {
    const DenseEig d = dense_eig(m);
    std::vector<Eigen::Index> picks;
    for (int i = 0; i < count; ++i) picks.push_back(end == Extremal::max ? n - 1 - i : i);
    return select_dense(m, d, std::move(picks), cfg);
  }

  const KrylovResult top = largest_eigenpairs(matrix_operator(m), end == Extremal::max ? count : 1, cfg);
  Spectrum s;
  s.dimension = n;
  KrylovResult sel = top;
  if (end == Extremal::min) {
    const double shift = top.values[0];
    sel = largest_eigenpairs(shifted_operator(m, shift), count, cfg);
    for (double& v : sel.values) v = shift - v;
  }
  // Ascending output order.
  std::vector<int> idx(static_cast<std::size_t>(count));
  std::iota(idx.begin(), idx.end(), 0);
  if (end == Extremal::max) std::reverse(idx.begin(), idx.end());
  s.eigenvectors.resize(n, count);
  for (int i = 0; i < count; ++i) {
    s.eigenvalues.push_back(sel.values[idx[i]]);
    s.eigenvectors.col(i) = sel.vectors.col(idx[i]);
  }
  sign_normalize(s.eigenvectors);
  // The residual of a shifted operator equals that of M; tol is relative to |M|.
  const double norm_est = std::max(std::abs(top.values[0]), std::abs(s.eigenvalues.front()));
  finish_spectrum(m, s, cfg.tol, norm_est);
  // Krylov convergence is judged against the operator norm estimate; keep the
  // pair flags consistent with that test.
  for (std::size_t i = 0; i < s.converged.size(); ++i)
    s.converged[i] = s.residual_norms[i] <= cfg.tol * std::max(sel.norm_estimate, norm_est) * 1.0001 + 1e-14;
  return s;
}

Spectrum extremal_eigs(const SparseMatrix& m, Extremal which, const SolverConfig& cfg) {
  if (which != Extremal::both) return eigenpairs(m, 1, which, cfg);
  cfg.validate();
  require_symmetric(m);
  const std::int32_t n = m.rows();
  if (n == 0) throw Error(ErrorKind::invalid_input, "empty matrix");
  if (n <= cfg.dense_threshold) {
    const DenseEig d = dense_eig(m);
    std::vector<Eigen::Index> picks{0};
    if (n > 1) picks.push_back(n - 1);
    return select_dense(m, d, std::move(picks), cfg);
  }
  const KrylovResult top = largest_eigenpairs(matrix_operator(m), 1, cfg);
  const double shift = top.values[0];
  const KrylovResult low = largest_eigenpairs(shifted_operator(m, shift), 1, cfg);
  Spectrum s;
  s.dimension = n;
  s.eigenvalues = {shift - low.values[0], shift};
  s.eigenvectors.resize(n, 2);
  s.eigenvectors.col(0) = low.vectors.col(0);
  s.eigenvectors.col(1) = top.vectors.col(0);
  sign_normalize(s.eigenvectors);
  const double norm_est = std::max(std::abs(s.eigenvalues[0]), std::abs(s.eigenvalues[1]));
  finish_spectrum(m, s, cfg.tol, norm_est);
  for (std::size_t i = 0; i < 2; ++i)
    s.converged[i] = s.residual_norms[i] <= cfg.tol * std::max(low.norm_estimate, norm_est) * 1.0001 + 1e-14;
  return s;
}

bool pattern_connected(const SparseMatrix& m) {
  const std::int32_t n = m.rows();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<std::int32_t> q;
  q.push(0);
  seen[0] = 1;
  std::int32_t reached = 1;
  while (!q.empty()) {
    const std::int32_t r = q.front();
    q.pop();
    for (std::int32_t c : m.row_cols(r)) {
      if (!seen[c]) {
        seen[c] = 1;
        ++reached;
        q.push(c);
      }
    }
  }
  return reached == n;
}

Spectrum smallest_nonzero_laplacian_vectors(const SparseMatrix& laplacian, int count, const SolverConfig& cfg) {
  cfg.validate();
  require_symmetric(laplacian);
  const std::int32_t n = laplacian.rows();
  if (n < 2) throw Error(ErrorKind::invalid_input, "Laplacian needs at least two nodes");
  if (count < 1 || count > n - 1) throw Error(ErrorKind::invalid_input, "eigenpair count out of range");
  if (!pattern_connected(laplacian)) throw Error(ErrorKind::disconnected, "graph disconnected");

  if (n <= cfg.dense_threshold) {
    const DenseEig d = dense_eig(laplacian);
    std::vector<Eigen::Index> picks;
    for (int i = 1; i <= count; ++i) picks.push_back(i);
    return select_dense(laplacian, d, std::move(picks), cfg);
  }

  const KrylovResult top = largest_eigenpairs(matrix_operator(laplacian), 1, cfg);
  const double shift = top.values[0];
  Eigen::MatrixXd constant = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  const KrylovResult low = largest_eigenpairs(shifted_operator(laplacian, shift), count, cfg, constant);
  Spectrum s;
  s.dimension = n;
  s.eigenvectors.resize(n, count);
  for (int i = 0; i < count; ++i) {
    s.eigenvalues.push_back(shift - low.values[i]);
    s.eigenvectors.col(i) = low.vectors.col(i);
  }
  sign_normalize(s.eigenvectors);
  finish_spectrum(laplacian, s, cfg.tol, shift);
  for (std::size_t i = 0; i < s.converged.size(); ++i)
    s.converged[i] = s.residual_norms[i] <= cfg.tol * std::max(low.norm_estimate, shift) * 1.0001 + 1e-14;
  return s;
}

}  // namespace bipnet
