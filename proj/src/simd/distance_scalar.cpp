#include "abcdoo/simd/distance.hpp"

namespace abcdoo::simd {

void squared_distances_scalar(const double* block, std::size_t stride, std::size_t count, int dim,
                              const double* query, double* out) {
    for (std::size_t i = 0; i < count; ++i) out[i] = 0.0;
    for (int k = 0; k < dim; ++k) {
        const double* axis = block + static_cast<std::size_t>(k) * stride;
        const double q = query[k];
        for (std::size_t i = 0; i < count; ++i) {
            const double diff = axis[i] - q;
            const double sq = diff * diff;
            out[i] = out[i] + sq;
        }
    }
}

} // namespace abcdoo::simd
