#include "abcdoo/simd/distance.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace abcdoo::simd {

bool isa_supported(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Isa active_isa() noexcept {
    if (const char* forced = std::getenv("ABCDOO_SIMD"); forced && std::string(forced) == "scalar")
        return Isa::scalar;
    return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

SquaredDistanceFn squared_distance_kernel(Isa isa) {
    if (!isa_supported(isa)) throw std::invalid_argument("ISA not supported on this CPU: " + std::string(isa_name(isa)));
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::avx2:
        return &squared_distances_avx2;
#endif
    default:
        return &squared_distances_scalar;
    }
}

SquaredDistanceFn squared_distance_kernel() {
    static const SquaredDistanceFn fn = squared_distance_kernel(active_isa());
    return fn;
}

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

} // namespace abcdoo::simd
