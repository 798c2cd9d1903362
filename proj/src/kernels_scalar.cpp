#include "wulff/kernels.hpp"

namespace wulff {
namespace detail {

double quad_row_sum_scalar(const double* c1, const double* s1, const double* ct,
                           std::size_t n, double c2, double s2, double hm,
                           double ct2) {
  double acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    acc += (c1[j] * c2 - s1[j] * s2) / (1.0 - hm * (ct[j] + ct2));
  }
  return acc;
}

void stencil_row_scalar(double* out, const double* mid, const double* up,
                        const double* down, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = 0.25 * ((mid[j - 1] + mid[j + 1]) + (up[j] + down[j]));
  }
}

}  // namespace detail

const Kernels& kernels_scalar() {
  static const Kernels k{detail::quad_row_sum_scalar, detail::stencil_row_scalar};
  return k;
}

}  // namespace wulff
