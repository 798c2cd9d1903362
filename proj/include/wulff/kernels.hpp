#ifndef WULFF_KERNELS_HPP
#define WULFF_KERNELS_HPP

#include <cstddef>

// Data-parallel inner loops of the Green-function routes, in a scalar
// reference version and (on x86-64) an AVX2 variant selected at runtime.
// Everything above these kernels is ordinary scalar code.

namespace wulff {

enum class SimdLevel { scalar, avx2 };

const char* simd_level_name(SimdLevel level);

/// Kernel selected at startup: best level the CPU supports, overridable with
/// WULFF_TENSION_SIMD=scalar|avx2 (useful for equivalence testing).
SimdLevel active_simd_level();

struct Kernels {
  // Row sum of the lattice-Green integrand with the cosine addition theorem
  // applied: sum_j (c1[j]*c2 - s1[j]*s2) / (1 - hm*(ct[j] + ct2)).
  // The summation order within a row is fixed per level.
  double (*quad_row_sum)(const double* c1, const double* s1, const double* ct,
                         std::size_t n, double c2, double s2, double hm,
                         double ct2);

  // One row of the four-neighbour averaging step:
  //   out[j] = 0.25 * ((mid[j-1] + mid[j+1]) + (up[j] + down[j]))
  // mid must be valid on [-1, n]. All levels use the identical per-element
  // operation order, so results are bit-identical across levels.
  void (*stencil_row)(double* out, const double* mid, const double* up,
                      const double* down, std::size_t n);
};

const Kernels& kernels_for(SimdLevel level);
const Kernels& active_kernels();

}  // namespace wulff

#endif
