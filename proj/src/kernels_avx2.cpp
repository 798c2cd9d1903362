// AVX2 variants of the Green-function inner loops. This translation unit is
// compiled with -mavx2 -mfma and only ever called after a runtime cpuid check.

#include "wulff/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace wulff {
namespace detail {

double quad_row_sum_avx2(const double* c1, const double* s1, const double* ct,
                         std::size_t n, double c2, double s2, double hm,
                         double ct2) {
  const __m256d vc2 = _mm256_set1_pd(c2);
  const __m256d vs2 = _mm256_set1_pd(s2);
  const __m256d vhm = _mm256_set1_pd(hm);
  const __m256d vct2 = _mm256_set1_pd(ct2);
  const __m256d one = _mm256_set1_pd(1.0);

  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d num = _mm256_fmsub_pd(_mm256_loadu_pd(c1 + j), vc2,
                                        _mm256_mul_pd(_mm256_loadu_pd(s1 + j), vs2));
    const __m256d den = _mm256_fnmadd_pd(
        vhm, _mm256_add_pd(_mm256_loadu_pd(ct + j), vct2), one);
    acc = _mm256_add_pd(acc, _mm256_div_pd(num, den));
  }
  // lane order fixed: (l0 + l2) + (l1 + l3), then the scalar tail
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
  for (; j < n; ++j) {
    total += (c1[j] * c2 - s1[j] * s2) / (1.0 - hm * (ct[j] + ct2));
  }
  return total;
}

// Same (a+b)+(c+d) association as the scalar kernel, so the two levels are
// bit-identical per element.
void stencil_row_avx2(double* out, const double* mid, const double* up,
                      const double* down, std::size_t n) {
  const __m256d quarter = _mm256_set1_pd(0.25);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d horiz =
        _mm256_add_pd(_mm256_loadu_pd(mid + j - 1), _mm256_loadu_pd(mid + j + 1));
    const __m256d vert =
        _mm256_add_pd(_mm256_loadu_pd(up + j), _mm256_loadu_pd(down + j));
    _mm256_storeu_pd(out + j, _mm256_mul_pd(quarter, _mm256_add_pd(horiz, vert)));
  }
  for (; j < n; ++j) {
    out[j] = 0.25 * ((mid[j - 1] + mid[j + 1]) + (up[j] + down[j]));
  }
}

}  // namespace detail

const Kernels& kernels_avx2() {
  static const Kernels k{detail::quad_row_sum_avx2, detail::stencil_row_avx2};
  return k;
}

}  // namespace wulff

#endif  // __AVX2__
