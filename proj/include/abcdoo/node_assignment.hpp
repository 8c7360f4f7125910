#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abcdoo/params.hpp"
#include "abcdoo/reference_layer.hpp"
#include "abcdoo/rng.hpp"

namespace abcdoo {

struct OutlierSelection {
    std::vector<std::uint32_t> outliers;  ///< node indices, ascending
    double ell = 0.0;                     ///< sum_i min(1, xi * d_i)
    double bound = 0.0;                   ///< max outlier degree: ell + s0 - ell*s0/n - 1
};

/// Uniform s0-subset of the nodes whose degree is within the outlier bound.
/// Throws GenerationError if fewer than s0 nodes qualify.
OutlierSelection select_outliers(std::span<const std::int64_t> degrees, const Parameters& params, Rng& rng);

/// 1 - sum_k (s_k / nhat)^2 * nhat*xi / (nhat*xi + s0); 1 when nhat*xi + s0 == 0.
double compute_phi(std::span<const std::int64_t> primary_sizes, std::int64_t nonoutliers, std::int64_t s0, double xi);

/// Sample Pearson coefficient; 0 if either sequence is constant.
double pearson_correlation(std::span<const double> xs, std::span<const double> ys);

/// What the pairing step needs to know about each element.
struct ElementProfile {
    std::vector<std::uint32_t> memberships;   ///< eta_v
    std::vector<std::int64_t> smallest_size;  ///< min |C_k| over the communities of v

    static ElementProfile from_layout(const CommunityLayout& layout);
    std::size_t size() const noexcept { return memberships.size(); }
};

/// Precomputed admissibility data shared by all pairing attempts.
class PairingTable {
public:
    PairingTable(const ElementProfile& profile, double phi, double xi);

    /// eta_v / (1 - xi*phi) * (smallest_size_v - 1); +inf when xi*phi == 1.
    double capacity(std::uint32_t element) const noexcept { return capacity_[element]; }
    std::uint32_t memberships(std::uint32_t element) const noexcept { return memberships_[element]; }
    std::size_t size() const noexcept { return capacity_.size(); }

private:
    friend struct PairingRun;
    std::vector<double> capacity_;
    std::vector<std::uint32_t> memberships_;
    std::vector<std::uint32_t> by_capacity_;    // descending capacity, ties by id
    std::vector<std::uint32_t> class_of_;       // element -> membership class
    std::vector<double> class_log_eta_;         // log eta per class
};

struct PairingState {
    double alpha = 0.0;
    double phi = 1.0;
    std::vector<std::uint32_t> element_of;  ///< non-outlier degree index -> element
    double achieved_rho = 0.0;
    std::int64_t fallback_count = 0;
};

/// Pairs degrees (non-increasing) with elements. Step i draws an unassigned
/// element satisfying degree <= capacity with probability proportional to
/// eta^alpha; if none qualifies, draws uniformly among unassigned elements of
/// maximal capacity.
PairingState pair_degrees_with_alpha(std::span<const std::int64_t> degrees, const PairingTable& table, double alpha,
                                     Rng& rng);

struct TuningOptions {
    double tolerance = 0.005;
    int max_iterations = 30;
    /// Stop after this many consecutive bisection steps that fail to improve
    /// the closest fit on their own side of the target.
    int patience = 4;
    double alpha_min = -60.0;
    double alpha_max = 60.0;
};

struct TuningResult {
    PairingState best;
    int evaluations = 0;
    bool reached = false;
    std::vector<std::string> warnings;
};

/// Binary search on alpha for the pairing whose correlation is closest to
/// target. Evaluation e draws from stream (seed, Pairing, e).
TuningResult tune_alpha(std::span<const std::int64_t> degrees, const PairingTable& table, double target,
                        std::uint64_t seed, const TuningOptions& options = {});

} // namespace abcdoo
