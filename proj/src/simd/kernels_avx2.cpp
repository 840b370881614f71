// Compiled with -mavx2 -mfma. Only reached through the dispatcher after a
// CPU feature check.
#include <immintrin.h>

#include "bipnet/simd/kernels.hpp"

namespace bipnet::simd {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const double* pa = a.data();
  const double* pb = b.data();
  __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
  __m256d s2 = _mm256_setzero_pd(), s3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    s0 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i), s0);
    s1 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i + 4), _mm256_loadu_pd(pb + i + 4), s1);
    s2 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i + 8), _mm256_loadu_pd(pb + i + 8), s2);
    s3 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i + 12), _mm256_loadu_pd(pb + i + 12), s3);
  }
  for (; i + 4 <= n; i += 4) s0 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i), s0);
  double s = hsum(_mm256_add_pd(_mm256_add_pd(s0, s1), _mm256_add_pd(s2, s3)));
  for (; i < n; ++i) s += pa[i] * pb[i];
  return s;
}

void axpy_avx2(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  const double* px = x.data();
  double* py = y.data();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_pd(py + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i)));
    _mm256_storeu_pd(py + i + 4,
                     _mm256_fmadd_pd(va, _mm256_loadu_pd(px + i + 4), _mm256_loadu_pd(py + i + 4)));
  }
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(py + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i)));
  for (; i < n; ++i) py[i] += a * px[i];
}

void scale_avx2(double a, std::span<double> x) {
  const std::size_t n = x.size();
  double* p = x.data();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(p + i, _mm256_mul_pd(va, _mm256_loadu_pd(p + i)));
  for (; i < n; ++i) p[i] *= a;
}

void spmv_avx2(const CsrView& m, std::span<const double> x, std::span<double> y) {
  const std::size_t rows = m.row_ptr.size() - 1;
  const double* px = x.data();
  const double* val = m.val.data();
  const std::int32_t* col = m.col.data();
  for (std::size_t r = 0; r < rows; ++r) {
    std::int64_t k = m.row_ptr[r];
    const std::int64_t end = m.row_ptr[r + 1];
    __m256d acc = _mm256_setzero_pd();
    for (; k + 4 <= end; k += 4) {
      const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(col + k));
      const __m256d xv = _mm256_i32gather_pd(px, idx, 8);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(val + k), xv, acc);
    }
    double s = hsum(acc);
    for (; k < end; ++k) s += val[k] * px[col[k]];
    y[r] = s;
  }
}

// Four basis columns per pass so x is streamed once per group.
void gemv_t_avx2(std::span<const double> basis, std::size_t ld, std::span<const double> x,
                 std::span<double> out) {
  const std::size_t n = x.size();
  const double* px = x.data();
  std::size_t j = 0;
  for (; j + 4 <= out.size(); j += 4) {
    const double* b0 = basis.data() + j * ld;
    const double* b1 = b0 + ld;
    const double* b2 = b1 + ld;
    const double* b3 = b2 + ld;
    __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
    __m256d s2 = _mm256_setzero_pd(), s3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      const __m256d xv = _mm256_loadu_pd(px + i);
      s0 = _mm256_fmadd_pd(_mm256_loadu_pd(b0 + i), xv, s0);
      s1 = _mm256_fmadd_pd(_mm256_loadu_pd(b1 + i), xv, s1);
      s2 = _mm256_fmadd_pd(_mm256_loadu_pd(b2 + i), xv, s2);
      s3 = _mm256_fmadd_pd(_mm256_loadu_pd(b3 + i), xv, s3);
    }
    double r0 = hsum(s0), r1 = hsum(s1), r2 = hsum(s2), r3 = hsum(s3);
    for (; i < n; ++i) {
      r0 += b0[i] * px[i];
      r1 += b1[i] * px[i];
      r2 += b2[i] * px[i];
      r3 += b3[i] * px[i];
    }
    out[j] = r0;
    out[j + 1] = r1;
    out[j + 2] = r2;
    out[j + 3] = r3;
  }
  for (; j < out.size(); ++j) out[j] = dot_avx2(basis.subspan(j * ld, n), x);
}

void gemv_n_sub_avx2(std::span<const double> basis, std::size_t ld, std::span<const double> coef,
                     std::span<double> x) {
  const std::size_t n = x.size();
  double* px = x.data();
  std::size_t j = 0;
  for (; j + 4 <= coef.size(); j += 4) {
    const double* b0 = basis.data() + j * ld;
    const double* b1 = b0 + ld;
    const double* b2 = b1 + ld;
    const double* b3 = b2 + ld;
    const __m256d c0 = _mm256_set1_pd(coef[j]), c1 = _mm256_set1_pd(coef[j + 1]);
    const __m256d c2 = _mm256_set1_pd(coef[j + 2]), c3 = _mm256_set1_pd(coef[j + 3]);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
      __m256d v = _mm256_loadu_pd(px + i);
      v = _mm256_fnmadd_pd(c0, _mm256_loadu_pd(b0 + i), v);
      v = _mm256_fnmadd_pd(c1, _mm256_loadu_pd(b1 + i), v);
      v = _mm256_fnmadd_pd(c2, _mm256_loadu_pd(b2 + i), v);
      v = _mm256_fnmadd_pd(c3, _mm256_loadu_pd(b3 + i), v);
      _mm256_storeu_pd(px + i, v);
    }
    for (; i < n; ++i)
      px[i] -= coef[j] * b0[i] + coef[j + 1] * b1[i] + coef[j + 2] * b2[i] + coef[j + 3] * b3[i];
  }
  for (; j < coef.size(); ++j) axpy_avx2(-coef[j], basis.subspan(j * ld, n), x);
}

}  // namespace

namespace detail {
const KernelTable& avx2_table() {
  static const KernelTable table{"avx2",     dot_avx2,    axpy_avx2,      scale_avx2,
                                 spmv_avx2, gemv_t_avx2, gemv_n_sub_avx2};
  return table;
}
}  // namespace detail

}  // namespace bipnet::simd
