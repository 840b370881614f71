#include <cmath>
#include <cstdlib>
#include <string_view>

#include "bipnet/simd/kernels.hpp"

namespace bipnet::simd {

const KernelTable& scalar_kernels() { return detail::scalar_table(); }

const KernelTable* avx2_kernels() {
#if defined(BIPNET_HAVE_AVX2_TU)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(__aarch64__)
  return &detail::neon_table();
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* env = std::getenv("BIPNET_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return *t;
    if (const KernelTable* t = neon_kernels()) return *t;
    return scalar_kernels();
  }();
  return chosen;
}

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
  if (const KernelTable* t = avx2_kernels()) out.push_back(t);
  if (const KernelTable* t = neon_kernels()) out.push_back(t);
  return out;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

}  // namespace bipnet::simd
