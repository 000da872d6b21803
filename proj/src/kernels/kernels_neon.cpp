#include <arm_neon.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace ect::kernels::neon {

void dot_rows(const double* rows, std::size_t n, std::size_t dim,
              const double* v, double* out) {
  const std::size_t body = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < body; i += 2) {
    const double* r0 = rows + i * dim;
    const double* r1 = r0 + dim;
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t k = 0; k < dim; ++k) {
      float64x2_t x = vdupq_n_f64(r0[k]);
      x = vsetq_lane_f64(r1[k], x, 1);
      acc = vaddq_f64(acc, vmulq_f64(x, vdupq_n_f64(v[k])));
    }
    vst1q_f64(out + i, acc);
  }
  for (; i < n; ++i) {
    const double* row = rows + i * dim;
    double acc = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      acc = acc + row[k] * v[k];
    }
    out[i] = acc;
  }
}

double weighted_abs_diff(const double* a, const double* b, const double* w,
                         std::size_t n) {
  // Two registers hold lanes {0,1} and {2,3} of the four-way reference sum.
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  const std::size_t body = n & ~std::size_t{3};
  for (std::size_t i = 0; i < body; i += 4) {
    const float64x2_t d0 = vabsq_f64(vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    const float64x2_t d1 =
        vabsq_f64(vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
    lo = vaddq_f64(lo, vmulq_f64(d0, vld1q_f64(w + i)));
    hi = vaddq_f64(hi, vmulq_f64(d1, vld1q_f64(w + i + 2)));
  }
  double sum = (vgetq_lane_f64(lo, 0) + vgetq_lane_f64(lo, 1)) +
               (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
  for (std::size_t i = body; i < n; ++i) {
    sum = sum + std::fabs(a[i] - b[i]) * w[i];
  }
  return sum;
}

}  // namespace ect::kernels::neon
