#pragma once

#include <cstdint>

namespace abcdoo {

/// Model knobs. Field names follow the command-line flags.
struct Parameters {
    std::int64_t n = 0;             ///< node count
    std::int64_t s0 = 0;            ///< outliers
    double eta = 1.0;               ///< mean memberships per non-outlier
    int dim = 2;                    ///< reference layer dimension
    double rho = 0.0;               ///< target degree/membership correlation
    double gamma = 2.5;             ///< degree exponent
    std::int64_t delta = 1;         ///< min degree
    std::int64_t Delta = 1;         ///< max degree
    double beta = 1.5;              ///< community size exponent
    std::int64_t s = 2;             ///< min community size
    std::int64_t S = 2;             ///< max community size
    double xi = 0.0;                ///< noise level
    std::uint64_t seed = 1;

    std::int64_t nonoutliers() const noexcept { return n - s0; }
    /// ceil(s / eta)
    std::int64_t min_primary_size() const noexcept;
    /// floor(S / eta)
    std::int64_t max_primary_size() const noexcept;

    /// Throws ValidationError naming the first violated range.
    void validate() const;
};

} // namespace abcdoo
