// AArch64 variant. NEON is architecturally guaranteed on AArch64, so the
// dispatcher enables this table unconditionally there.
#include <arm_neon.h>

#include "bipnet/simd/kernels.hpp"

namespace bipnet::simd {
namespace {

double dot_neon(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  float64x2_t s0 = vdupq_n_f64(0.0), s1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 = vfmaq_f64(s0, vld1q_f64(a.data() + i), vld1q_f64(b.data() + i));
    s1 = vfmaq_f64(s1, vld1q_f64(a.data() + i + 2), vld1q_f64(b.data() + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(s0, s1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_neon(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y.data() + i, vfmaq_f64(vld1q_f64(y.data() + i), va, vld1q_f64(x.data() + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_neon(double a, std::span<double> x) {
  const std::size_t n = x.size();
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x.data() + i, vmulq_f64(va, vld1q_f64(x.data() + i)));
  for (; i < n; ++i) x[i] *= a;
}

// No gather on NEON; two independent accumulators hide FMA latency.
void spmv_neon(const CsrView& m, std::span<const double> x, std::span<double> y) {
  const std::size_t rows = m.row_ptr.size() - 1;
  for (std::size_t r = 0; r < rows; ++r) {
    std::int64_t k = m.row_ptr[r];
    const std::int64_t end = m.row_ptr[r + 1];
    float64x2_t acc = vdupq_n_f64(0.0);
    for (; k + 2 <= end; k += 2) {
      const double g[2] = {x[m.col[k]], x[m.col[k + 1]]};
      acc = vfmaq_f64(acc, vld1q_f64(m.val.data() + k), vld1q_f64(g));
    }
    double s = vaddvq_f64(acc);
    for (; k < end; ++k) s += m.val[k] * x[m.col[k]];
    y[r] = s;
  }
}

void gemv_t_neon(std::span<const double> basis, std::size_t ld, std::span<const double> x,
                 std::span<double> out) {
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = dot_neon(basis.subspan(j * ld, x.size()), x);
}

void gemv_n_sub_neon(std::span<const double> basis, std::size_t ld, std::span<const double> coef,
                     std::span<double> x) {
  for (std::size_t j = 0; j < coef.size(); ++j) axpy_neon(-coef[j], basis.subspan(j * ld, x.size()), x);
}

}  // namespace

namespace detail {
const KernelTable& neon_table() {
  static const KernelTable table{"neon",     dot_neon,    axpy_neon,      scale_neon,
                                 spmv_neon, gemv_t_neon, gemv_n_sub_neon};
  return table;
}
}  // namespace detail

}  // namespace bipnet::simd
