#pragma once

#include <cstddef>
#include <string_view>

namespace abcdoo::simd {

/// Squared Euclidean distances from one query to a block of points stored
/// axis-major: coordinate k of point i lives at block[k * stride + i].
///
/// out[i] = sum over k = 0..dim-1 of (block[k*stride+i] - query[k])^2, for
/// i in [0, count). Every variant accumulates axes in increasing order with
/// separate multiply and add, so all variants return bit-identical results.
using SquaredDistanceFn = void (*)(const double* block, std::size_t stride, std::size_t count, int dim,
                                   const double* query, double* out);

enum class Isa { scalar, avx2 };

void squared_distances_scalar(const double* block, std::size_t stride, std::size_t count, int dim,
                              const double* query, double* out);

#if defined(__x86_64__) || defined(_M_X64)
void squared_distances_avx2(const double* block, std::size_t stride, std::size_t count, int dim,
                            const double* query, double* out);
#endif

bool isa_supported(Isa isa) noexcept;

/// Best supported ISA, unless ABCDOO_SIMD=scalar forces the reference path.
Isa active_isa() noexcept;

SquaredDistanceFn squared_distance_kernel(Isa isa);

/// Kernel for active_isa(), resolved once.
SquaredDistanceFn squared_distance_kernel();

std::string_view isa_name(Isa isa) noexcept;

} // namespace abcdoo::simd
