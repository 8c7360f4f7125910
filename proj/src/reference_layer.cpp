#include "abcdoo/reference_layer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "abcdoo/errors.hpp"
#include "abcdoo/kdtree.hpp"
#include "abcdoo/parallel.hpp"

namespace abcdoo {

PointCloud sample_reference_points(std::int64_t count, int dim, Rng& rng) {
    if (count < 1 || dim < 1) throw ValidationError("reference layer needs at least one point and dimension");
    PointCloud points(static_cast<std::size_t>(count), dim);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double inv_dim = 1.0 / double(dim);
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto p = points[i];
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& c : p) {
                c = normal(rng);
                norm2 += c * c;
            }
        } while (norm2 == 0.0);
        const double radius = std::pow(uniform01(rng), inv_dim);
        const double scale = radius / std::sqrt(norm2);
        double check = 0.0;
        for (auto& c : p) {
            c *= scale;
            check += c * c;
        }
        if (check > 1.0) {
            const double shrink = 1.0 / std::sqrt(check);
            for (auto& c : p) c *= shrink;
        }
    }
    return points;
}

std::vector<double> squared_norms(const PointCloud& points) {
    std::vector<std::uint32_t> ids(points.size());
    std::iota(ids.begin(), ids.end(), 0u);
    const auto block = points.axis_major(ids);
    std::vector<double> origin(static_cast<std::size_t>(points.dim()), 0.0);
    std::vector<double> out(points.size());
    simd::squared_distance_kernel()(block.data(), points.size(), points.size(), points.dim(), origin.data(),
                                    out.data());
    return out;
}

std::vector<double> primary_centroid(const PointCloud& points, std::span<const std::uint32_t> primary_members) {
    std::vector<std::uint32_t> sorted(primary_members.begin(), primary_members.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> c(static_cast<std::size_t>(points.dim()), 0.0);
    for (auto id : sorted) {
        const auto p = points[id];
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += p[k];
    }
    for (auto& v : c) v /= double(sorted.size());
    return c;
}

CommunityLayout assign_primary_communities(const PointCloud& points, std::span<const std::int64_t> primary_sizes) {
    const std::int64_t total = std::accumulate(primary_sizes.begin(), primary_sizes.end(), std::int64_t{0});
    if (total != static_cast<std::int64_t>(points.size()))
        throw std::invalid_argument("primary sizes must sum to the number of elements");

    CommunityLayout layout;
    const std::size_t count = primary_sizes.size();
    layout.primary_of.assign(points.size(), 0);
    layout.members.resize(count);
    layout.primary_count.resize(count);
    layout.centroid.resize(count);

    const auto norms = squared_norms(points);
    std::vector<std::uint32_t> by_norm(points.size());
    std::iota(by_norm.begin(), by_norm.end(), 0u);
    std::sort(by_norm.begin(), by_norm.end(), [&](std::uint32_t a, std::uint32_t b) {
        return norms[a] > norms[b] || (norms[a] == norms[b] && a < b);
    });

    KdTree tree(points);
    std::vector<Neighbor> found;
    std::size_t cursor = 0;
    for (std::size_t j = 0; j < count; ++j) {
        if (primary_sizes[j] < 1) throw std::invalid_argument("primary sizes must be positive");
        while (!tree.is_active(by_norm[cursor])) ++cursor;
        const std::uint32_t seed = by_norm[cursor];
        tree.deactivate(seed);
        auto& members = layout.members[j];
        members.reserve(static_cast<std::size_t>(primary_sizes[j]));
        members.push_back(seed);
        tree.nearest(points[seed], static_cast<std::size_t>(primary_sizes[j] - 1), found);
        for (const auto& nb : found) {
            tree.deactivate(nb.id);
            members.push_back(nb.id);
        }
        for (auto id : members) layout.primary_of[id] = static_cast<std::uint32_t>(j);
        layout.primary_count[j] = members.size();
        layout.centroid[j] = primary_centroid(points, members);
        if (tree.active_count() > 0 && tree.masked_fraction() > 0.5) tree.compact();
    }
    layout.membership_count.assign(points.size(), 1);
    return layout;
}

GrowthReport grow_communities(CommunityLayout& layout, std::span<const std::int64_t> grown_sizes,
                              const PointCloud& points, std::size_t threads) {
    if (grown_sizes.size() != layout.community_count())
        throw std::invalid_argument("one grown size per community required");
    GrowthReport report;
    const auto elements = static_cast<std::int64_t>(layout.element_count());
    std::vector<std::size_t> targets(grown_sizes.size());
    for (std::size_t j = 0; j < grown_sizes.size(); ++j) {
        std::int64_t target = grown_sizes[j];
        if (target > elements) {
            target = elements;
            ++report.capped;
        }
        targets[j] = static_cast<std::size_t>(std::max<std::int64_t>(target, std::int64_t(layout.primary_count[j])));
    }
    if (report.capped > 0)
        report.warnings.push_back(std::to_string(report.capped) + " communities capped at the element count");

    const KdTree tree(points);
    parallel_for(layout.community_count(), threads, [&](std::size_t j, std::size_t) {
        auto& members = layout.members[j];
        members.resize(layout.primary_count[j]);
        const std::size_t extra = targets[j] - layout.primary_count[j];
        if (extra == 0) return;
        std::vector<Neighbor> found;
        const auto community = static_cast<std::uint32_t>(j);
        tree.nearest(layout.centroid[j], extra,
                     [&](std::uint32_t id) { return layout.primary_of[id] != community; }, found);
        for (const auto& nb : found) members.push_back(nb.id);
    });
    layout.membership_count = membership_counts(layout);
    return report;
}

std::vector<std::uint32_t> membership_counts(const CommunityLayout& layout) {
    std::vector<std::uint32_t> counts(layout.element_count(), 0);
    for (const auto& members : layout.members)
        for (auto id : members) ++counts[id];
    return counts;
}

} // namespace abcdoo
