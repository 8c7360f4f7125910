#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abcdoo/params.hpp"
#include "abcdoo/rng.hpp"

namespace abcdoo {

struct DegreeSequence {
    std::vector<std::int64_t> degrees;  ///< non-increasing, even sum
    bool parity_adjusted = false;
};

/// Sorts non-increasing and, if the sum is odd, lowers the largest degree
/// by one. Throws ValidationError if that would go below min_degree.
DegreeSequence finalize_degree_sequence(std::vector<std::int64_t> degrees, std::int64_t min_degree);

/// n i.i.d. draws from the degree law, then finalize_degree_sequence.
DegreeSequence build_degree_sequence(const Parameters& params, Rng& rng);

/// Checks an injected sequence against n, delta and Delta, then finalizes it.
DegreeSequence explicit_degree_sequence(std::vector<std::int64_t> degrees, const Parameters& params);

struct CommunitySizeSequence {
    std::vector<std::int64_t> primary_sizes;  ///< non-increasing, sums to n - s0
    std::vector<std::int64_t> grown_sizes;    ///< random_round(eta * primary), capped at n - s0
    std::int64_t above_max = 0;               ///< primaries pushed past floor(S/eta) by the adjustment
    std::int64_t capped = 0;                  ///< grown sizes clipped to n - s0
    std::vector<std::string> warnings;

    std::size_t count() const noexcept { return primary_sizes.size(); }
};

/// Resolves the overshoot of a sample list whose sum first reached target.
/// Returns the adjusted samples in their original order (not sorted).
std::vector<std::int64_t> adjust_primary_samples(std::vector<std::int64_t> samples, std::int64_t target,
                                                 std::int64_t min_size, Rng& rng);

/// Draws primary sizes until they cover n - s0, adjusts, sorts, and grows.
CommunitySizeSequence build_community_size_sequences(const Parameters& params, Rng& rng);

/// Same as above with the primary sizes given. They must sum to n - s0.
CommunitySizeSequence explicit_community_sizes(std::vector<std::int64_t> primary_sizes, const Parameters& params,
                                               Rng& rng);

} // namespace abcdoo
