#include "wulff/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace wulff {

const Kernels& kernels_scalar();
#if defined(WULFF_HAVE_AVX2)
const Kernels& kernels_avx2();
#endif

const char* simd_level_name(SimdLevel level) {
  switch (level) {
    case SimdLevel::scalar: return "scalar";
    case SimdLevel::avx2: return "avx2";
  }
  return "?";
}

namespace {

bool avx2_available() {
#if defined(WULFF_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

SimdLevel detect() {
  SimdLevel best = avx2_available() ? SimdLevel::avx2 : SimdLevel::scalar;
  if (const char* env = std::getenv("WULFF_TENSION_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return SimdLevel::scalar;
    if (std::strcmp(env, "avx2") == 0 && best == SimdLevel::avx2)
      return SimdLevel::avx2;
  }
  return best;
}

}  // namespace

SimdLevel active_simd_level() {
  static const SimdLevel level = detect();
  return level;
}

const Kernels& kernels_for(SimdLevel level) {
#if defined(WULFF_HAVE_AVX2)
  if (level == SimdLevel::avx2) {
    if (!avx2_available())
      throw std::runtime_error("kernels_for: avx2 not supported on this CPU");
    return kernels_avx2();
  }
#else
  if (level == SimdLevel::avx2)
    throw std::runtime_error("kernels_for: avx2 variant not compiled in");
#endif
  return kernels_scalar();
}

const Kernels& active_kernels() {
  static const Kernels& k = kernels_for(active_simd_level());
  return k;
}

}  // namespace wulff
