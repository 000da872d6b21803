#pragma once

#include <cstddef>

namespace ect::kernels {

namespace scalar {
void dot_rows(const double* rows, std::size_t n, std::size_t dim,
              const double* v, double* out);
double weighted_abs_diff(const double* a, const double* b, const double* w,
                         std::size_t n);
}  // namespace scalar

#if defined(ECT_HAVE_AVX2)
namespace avx2 {
void dot_rows(const double* rows, std::size_t n, std::size_t dim,
              const double* v, double* out);
double weighted_abs_diff(const double* a, const double* b, const double* w,
                         std::size_t n);
}  // namespace avx2
#endif

#if defined(ECT_HAVE_NEON)
namespace neon {
void dot_rows(const double* rows, std::size_t n, std::size_t dim,
              const double* v, double* out);
double weighted_abs_diff(const double* a, const double* b, const double* w,
                         std::size_t n);
}  // namespace neon
#endif

}  // namespace ect::kernels
