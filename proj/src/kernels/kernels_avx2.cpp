// Compiled with -mavx2 only (no FMA); see src/CMakeLists.txt.

#include <immintrin.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace ect::kernels::avx2 {

void dot_rows(const double* rows, std::size_t n, std::size_t dim,
              const double* v, double* out) {
  const std::size_t body = n & ~std::size_t{3};
  const auto stride = static_cast<long long>(dim);
  // Lane r reads row i + r; offsets are in elements.
  const __m256i offsets = _mm256_set_epi64x(3 * stride, 2 * stride, stride, 0);
  std::size_t i = 0;
  for (; i < body; i += 4) {
    const double* base = rows + i * dim;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < dim; ++k) {
      const __m256d x = _mm256_i64gather_pd(base + k, offsets, 8);
      const __m256d vk = _mm256_broadcast_sd(v + k);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(x, vk));
    }
    _mm256_storeu_pd(out + i, acc);
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
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  const std::size_t body = n & ~std::size_t{3};
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d diff =
        _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    const __m256d mag = _mm256_andnot_pd(sign_mask, diff);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(mag, _mm256_loadu_pd(w + i)));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = body; i < n; ++i) {
    sum = sum + std::fabs(a[i] - b[i]) * w[i];
  }
  return sum;
}

}  // namespace ect::kernels::avx2
