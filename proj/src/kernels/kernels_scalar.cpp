#include <cmath>

#include "kernels_impl.hpp"

namespace ect::kernels::scalar {

void dot_rows(const double* rows, std::size_t n, std::size_t dim,
              const double* v, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
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
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t body = n & ~std::size_t{3};
  for (std::size_t i = 0; i < body; i += 4) {
    for (std::size_t l = 0; l < 4; ++l) {
      lane[l] = lane[l] + std::fabs(a[i + l] - b[i + l]) * w[i + l];
    }
  }
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = body; i < n; ++i) {
    sum = sum + std::fabs(a[i] - b[i]) * w[i];
  }
  return sum;
}

}  // namespace ect::kernels::scalar
