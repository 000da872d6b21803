#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "ect/kernels.hpp"
#include "kernels_impl.hpp"

namespace ect::kernels {

namespace {

bool cpu_supports(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(ECT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(ECT_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect() noexcept {
  if (const char* env = std::getenv("ECT_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  }
  if (cpu_supports(Isa::Avx2)) return Isa::Avx2;
  if (cpu_supports(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

std::atomic<Isa>& selected() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept { return cpu_supports(isa); }

Isa active_isa() noexcept { return selected().load(std::memory_order_relaxed); }

Isa force_isa(Isa isa) noexcept {
  const Isa chosen = cpu_supports(isa) ? isa : Isa::Scalar;
  selected().store(chosen, std::memory_order_relaxed);
  return chosen;
}

void dot_rows(std::span<const double> rows, std::size_t dim,
              std::span<const double> v, std::span<double> out) {
  if (v.size() != dim || rows.size() != out.size() * dim) {
    throw std::invalid_argument("dot_rows: shape mismatch");
  }
  if (out.empty()) return;
  switch (active_isa()) {
#if defined(ECT_HAVE_AVX2)
    case Isa::Avx2:
      avx2::dot_rows(rows.data(), out.size(), dim, v.data(), out.data());
      return;
#endif
#if defined(ECT_HAVE_NEON)
    case Isa::Neon:
      neon::dot_rows(rows.data(), out.size(), dim, v.data(), out.data());
      return;
#endif
    default:
      scalar::dot_rows(rows.data(), out.size(), dim, v.data(), out.data());
  }
}

double weighted_abs_diff(std::span<const double> a, std::span<const double> b,
                         std::span<const double> w) {
  if (a.size() != b.size() || a.size() != w.size()) {
    throw std::invalid_argument("weighted_abs_diff: length mismatch");
  }
  switch (active_isa()) {
#if defined(ECT_HAVE_AVX2)
    case Isa::Avx2:
      return avx2::weighted_abs_diff(a.data(), b.data(), w.data(), a.size());
#endif
#if defined(ECT_HAVE_NEON)
    case Isa::Neon:
      return neon::weighted_abs_diff(a.data(), b.data(), w.data(), a.size());
#endif
    default:
      return scalar::weighted_abs_diff(a.data(), b.data(), w.data(), a.size());
  }
}

}  // namespace ect::kernels
