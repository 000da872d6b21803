#pragma once

// Data-parallel inner loops shared by the geometry code. Every kernel has a
// scalar reference and SIMD variants selected at runtime; the variants use the
// same operation order as the reference and produce bit-identical results.

#include <cstddef>
#include <span>

namespace ect::kernels {

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa) noexcept;

// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

// Variant used by the dispatching entry points below. Defaults to the widest
// available ISA; ECT_KERNELS=scalar in the environment pins the reference.
Isa active_isa() noexcept;

// Overrides the dispatch choice (tests and benchmarks). Falls back to Scalar
// when the requested ISA is unavailable; returns the ISA actually selected.
Isa force_isa(Isa isa) noexcept;

// out[i] = sum_k rows[i * dim + k] * v[k], accumulated left to right in k
// starting from +0.0. rows.size() must equal out.size() * dim.
void dot_rows(std::span<const double> rows, std::size_t dim,
              std::span<const double> v, std::span<double> out);

// sum_i |a[i] - b[i]| * w[i] using four interleaved partial sums
// (lane = i mod 4) combined as (s0 + s1) + (s2 + s3), then the tail
// added in order.
double weighted_abs_diff(std::span<const double> a, std::span<const double> b,
                         std::span<const double> w);

}  // namespace ect::kernels
