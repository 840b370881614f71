#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bipnet/simd/kernels.hpp"

namespace bipnet {

struct Triplet {
  std::int32_t row;
  std::int32_t col;
  double value;
};

// Immutable CSR matrix. Duplicate triplets are summed at construction and
// entries that sum to exactly zero are dropped, so no explicit zeros are
// ever stored.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::int32_t rows, std::int32_t cols, std::vector<Triplet> triplets);

  static SparseMatrix identity(std::int32_t n);
  static SparseMatrix diagonal(std::span<const double> d);

  std::int32_t rows() const noexcept { return rows_; }
  std::int32_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return val_.size(); }

  std::span<const std::int32_t> row_cols(std::int32_t r) const {
    return {col_.data() + row_ptr_[r], static_cast<std::size_t>(row_ptr_[r + 1] - row_ptr_[r])};
  }
  std::span<const double> row_values(std::int32_t r) const {
    return {val_.data() + row_ptr_[r], static_cast<std::size_t>(row_ptr_[r + 1] - row_ptr_[r])};
  }

  // 0 for entries not stored.
  double entry(std::int32_t r, std::int32_t c) const;

  // y = M x. x.size() == cols(), y.size() == rows().
  void multiply(std::span<const double> x, std::span<double> y) const;

  SparseMatrix transpose() const;
  std::vector<double> row_sums() const;
  bool is_symmetric() const;

  // Entry-wise weighted sum this*a + other*b; dimensions must match.
  SparseMatrix combine(double a, const SparseMatrix& other, double b) const;

  Eigen::MatrixXd to_dense() const;

  simd::CsrView view() const noexcept { return {row_ptr_, col_, val_}; }

private:
  std::int32_t rows_ = 0;
  std::int32_t cols_ = 0;
  std::vector<std::int64_t> row_ptr_{0};
  std::vector<std::int32_t> col_;
  std::vector<double> val_;
};

}  // namespace bipnet
