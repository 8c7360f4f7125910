#include "abcdoo/simd/distance.hpp"

#include <immintrin.h>

namespace abcdoo::simd {

// Built with -mavx2 only (no FMA) so mul and add stay separate roundings.
void squared_distances_avx2(const double* block, std::size_t stride, std::size_t count, int dim,
                            const double* query, double* out) {
    std::size_t i = 0;
    // Eight points per iteration in two accumulators, then four, then a scalar tail.
    for (; i + 8 <= count; i += 8) {
        __m256d acc0 = _mm256_setzero_pd();
        __m256d acc1 = _mm256_setzero_pd();
        for (int k = 0; k < dim; ++k) {
            const double* axis = block + static_cast<std::size_t>(k) * stride + i;
            const __m256d q = _mm256_set1_pd(query[k]);
            const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(axis), q);
            const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(axis + 4), q);
            acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(d0, d0));
            acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(d1, d1));
        }
        _mm256_storeu_pd(out + i, acc0);
        _mm256_storeu_pd(out + i + 4, acc1);
    }
    for (; i + 4 <= count; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (int k = 0; k < dim; ++k) {
            const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(block + static_cast<std::size_t>(k) * stride + i),
                                            _mm256_set1_pd(query[k]));
            acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
        }
        _mm256_storeu_pd(out + i, acc);
    }
    if (i < count) squared_distances_scalar(block + i, stride, count - i, dim, query, out + i);
}

} // namespace abcdoo::simd
