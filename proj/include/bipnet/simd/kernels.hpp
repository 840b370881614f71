#pragma once

// Vector kernels behind the Krylov solvers.
//
// Every kernel has a portable scalar reference implementation. Wider
// variants (AVX2+FMA on x86-64, NEON on AArch64) are compiled into their own
// translation units and picked at runtime from the CPU feature bits. All
// variants must agree with the scalar reference to rounding; the test suite
// checks this on randomized inputs.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bipnet::simd {

// Compressed sparse row view used by spmv. Column indices are 32-bit so the
// AVX2 path can use hardware gathers.
struct CsrView {
  std::span<const std::int64_t> row_ptr;  // rows + 1 entries
  std::span<const std::int32_t> col;
  std::span<const double> val;
};

using DotFn = double (*)(std::span<const double>, std::span<const double>);
// y += a * x
using AxpyFn = void (*)(double, std::span<const double>, std::span<double>);
using ScaleFn = void (*)(double, std::span<double>);
// y = M x
using SpmvFn = void (*)(const CsrView&, std::span<const double>, std::span<double>);
// out[j] = <basis_j, x> for the first out.size() columns of a column-major
// basis with leading dimension ld.
using GemvTFn = void (*)(std::span<const double> basis, std::size_t ld,
                         std::span<const double> x, std::span<double> out);
// x -= sum_j coef[j] * basis_j
using GemvNSubFn = void (*)(std::span<const double> basis, std::size_t ld,
                            std::span<const double> coef, std::span<double> x);

struct KernelTable {
  std::string_view isa;
  DotFn dot;
  AxpyFn axpy;
  ScaleFn scale;
  SpmvFn spmv;
  GemvTFn gemv_t;
  GemvNSubFn gemv_n_sub;
};

const KernelTable& scalar_kernels();

// Null when the variant is not compiled in or the CPU lacks the feature.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

// Best table for this CPU. BIPNET_SIMD=scalar in the environment forces the
// reference kernels.
const KernelTable& active_kernels();

// Every table usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active_kernels().dot(a, b);
}
inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active_kernels().axpy(a, x, y);
}
inline void scale(double a, std::span<double> x) { active_kernels().scale(a, x); }
double norm2(std::span<const double> x);

namespace detail {
const KernelTable& scalar_table();
const KernelTable& avx2_table();
const KernelTable& neon_table();
}  // namespace detail

}  // namespace bipnet::simd
