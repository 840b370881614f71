#include "bipnet/simd/kernels.hpp"

namespace bipnet::simd {
namespace {

double dot_scalar(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double a, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void scale_scalar(double a, std::span<double> x) {
  for (double& v : x) v *= a;
}

void spmv_scalar(const CsrView& m, std::span<const double> x, std::span<double> y) {
  const std::size_t rows = m.row_ptr.size() - 1;
  for (std::size_t r = 0; r < rows; ++r) {
    double s = 0.0;
    for (std::int64_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k) s += m.val[k] * x[m.col[k]];
    y[r] = s;
  }
}

void gemv_t_scalar(std::span<const double> basis, std::size_t ld, std::span<const double> x,
                   std::span<double> out) {
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = dot_scalar(basis.subspan(j * ld, x.size()), x);
}

void gemv_n_sub_scalar(std::span<const double> basis, std::size_t ld, std::span<const double> coef,
                       std::span<double> x) {
  for (std::size_t j = 0; j < coef.size(); ++j) axpy_scalar(-coef[j], basis.subspan(j * ld, x.size()), x);
}

}  // namespace

namespace detail {
const KernelTable& scalar_table() {
  static const KernelTable table{"scalar",     dot_scalar,    axpy_scalar,      scale_scalar,
                                 spmv_scalar, gemv_t_scalar, gemv_n_sub_scalar};
  return table;
}
}  // namespace detail

}  // namespace bipnet::simd
