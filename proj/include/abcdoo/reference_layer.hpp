#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abcdoo/point_cloud.hpp"
#include "abcdoo/rng.hpp"

namespace abcdoo {

/// Community structure over reference-layer elements.
struct CommunityLayout {
    std::vector<std::uint32_t> primary_of;               ///< element -> primary community
    std::vector<std::vector<std::uint32_t>> members;     ///< primaries first, then secondaries
    std::vector<std::size_t> primary_count;              ///< primary members per community
    std::vector<std::uint32_t> membership_count;         ///< eta_v
    std::vector<std::vector<double>> centroid;           ///< mean of primary members

    std::size_t community_count() const noexcept { return members.size(); }
    std::size_t element_count() const noexcept { return primary_of.size(); }
};

/// count i.i.d. points uniform in the unit ball: Gaussian direction times U^(1/dim).
PointCloud sample_reference_points(std::int64_t count, int dim, Rng& rng);

/// Squared norms through the dispatched distance kernel.
std::vector<double> squared_norms(const PointCloud& points);

/// Seeding: community j takes the active element of largest norm (ties to the
/// lower id) plus its primary_sizes[j] - 1 nearest active elements (ties to
/// the lower id), which are then deactivated. Sizes must sum to points.size().
CommunityLayout assign_primary_communities(const PointCloud& points, std::span<const std::int64_t> primary_sizes);

/// Mean of the primary members, summed in ascending element id order.
std::vector<double> primary_centroid(const PointCloud& points, std::span<const std::uint32_t> primary_members);

struct GrowthReport {
    std::int64_t capped = 0;
    std::vector<std::string> warnings;
};

/// Grows every community to grown_sizes[j] by adding the nearest non-primary
/// elements to its primary centroid. Communities are independent, so they
/// are processed in parallel; the result does not depend on threads.
GrowthReport grow_communities(CommunityLayout& layout, std::span<const std::int64_t> grown_sizes,
                              const PointCloud& points, std::size_t threads = 1);

std::vector<std::uint32_t> membership_counts(const CommunityLayout& layout);

} // namespace abcdoo
