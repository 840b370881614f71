#include "bipnet/sparse.hpp"

#include <algorithm>

#include "bipnet/error.hpp"

namespace bipnet {

SparseMatrix::SparseMatrix(std::int32_t rows, std::int32_t cols, std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::invalid_input, "negative matrix dimension");
  for (const Triplet& t : triplets) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      throw Error(ErrorKind::invalid_input, "triplet index out of range");
  }
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  row_ptr_.assign(static_cast<std::size_t>(rows) + 1, 0);
  col_.reserve(triplets.size());
  val_.reserve(triplets.size());
  std::size_t i = 0;
  while (i < triplets.size()) {
    const std::int32_t r = triplets[i].row;
    const std::int32_t c = triplets[i].col;
    double sum = 0.0;
    for (; i < triplets.size() && triplets[i].row == r && triplets[i].col == c; ++i) sum += triplets[i].value;
    if (sum != 0.0) {
      col_.push_back(c);
      val_.push_back(sum);
      ++row_ptr_[r + 1];
    }
  }
  for (std::int32_t r = 0; r < rows; ++r) row_ptr_[r + 1] += row_ptr_[r];
}

SparseMatrix SparseMatrix::identity(std::int32_t n) {
  std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
  return diagonal(ones);
}

SparseMatrix SparseMatrix::diagonal(std::span<const double> d) {
  std::vector<Triplet> t;
  t.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    t.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(i), d[i]});
  const auto n = static_cast<std::int32_t>(d.size());
  return SparseMatrix(n, n, std::move(t));
}

double SparseMatrix::entry(std::int32_t r, std::int32_t c) const {
  const auto cols = row_cols(r);
  const auto it = std::lower_bound(cols.begin(), cols.end(), c);
  if (it == cols.end() || *it != c) return 0.0;
  return row_values(r)[static_cast<std::size_t>(it - cols.begin())];
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  simd::active_kernels().spmv(view(), x, y);
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(val_.size());
  for (std::int32_t r = 0; r < rows_; ++r) {
    const auto c = row_cols(r);
    const auto v = row_values(r);
    for (std::size_t k = 0; k < c.size(); ++k) t.push_back({c[k], r, v[k]});
  }
  return SparseMatrix(cols_, rows_, std::move(t));
}

std::vector<double> SparseMatrix::row_sums() const {
  std::vector<double> s(static_cast<std::size_t>(rows_), 0.0);
  for (std::int32_t r = 0; r < rows_; ++r)
    for (double v : row_values(r)) s[r] += v;
  return s;
}

bool SparseMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::int32_t r = 0; r < rows_; ++r) {
    const auto c = row_cols(r);
    const auto v = row_values(r);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (entry(c[k], r) != v[k]) return false;
  }
  return true;
}

SparseMatrix SparseMatrix::combine(double a, const SparseMatrix& other, double b) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::invalid_input, "matrix dimensions differ");
  std::vector<Triplet> t;
  t.reserve(nonzeros() + other.nonzeros());
  for (const auto* m : {this, &other}) {
    const double f = (m == this) ? a : b;
    for (std::int32_t r = 0; r < m->rows_; ++r) {
      const auto c = m->row_cols(r);
      const auto v = m->row_values(r);
      for (std::size_t k = 0; k < c.size(); ++k) t.push_back({r, c[k], f * v[k]});
    }
  }
  return SparseMatrix(rows_, cols_, std::move(t));
}

Eigen::MatrixXd SparseMatrix::to_dense() const {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(rows_, cols_);
  for (std::int32_t r = 0; r < rows_; ++r) {
    const auto c = row_cols(r);
    const auto v = row_values(r);
    for (std::size_t k = 0; k < c.size(); ++k) d(r, c[k]) = v[k];
  }
  return d;
}

}  // namespace bipnet
