#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "abcdoo/graph.hpp"

namespace abcdoo {

/// A simple graph with (possibly overlapping) ground-truth communities.
struct LabeledNetwork {
    std::size_t node_count = 0;
    std::size_t community_count = 0;
    std::vector<Edge> edges;                                   ///< distinct pairs, u < v
    std::vector<std::vector<std::uint32_t>> node_communities;  ///< sorted ids; empty for outliers
    bool has_provenance = false;                               ///< edge tags are meaningful

    std::vector<std::int64_t> degrees() const;
    std::vector<std::vector<std::uint32_t>> community_members() const;
};

/// Complementary empirical CDF: at(x) = fraction of samples >= x.
class Ecdf {
public:
    Ecdf() = default;
    static Ecdf from_samples(std::vector<double> samples);

    double at(double x) const noexcept;
    bool empty() const noexcept { return support_.empty(); }
    std::size_t sample_count() const noexcept { return samples_; }
    /// Distinct sample values, ascending.
    const std::vector<double>& support() const noexcept { return support_; }
    /// at(support()[i]), non-increasing.
    const std::vector<double>& ccdf() const noexcept { return ccdf_; }

private:
    std::vector<double> support_;
    std::vector<double> ccdf_;
    std::size_t samples_ = 0;
};

Ecdf community_size_ccdf(const LabeledNetwork& net);

/// Over all nodes; outliers count as zero memberships.
Ecdf communities_per_node_ccdf(const LabeledNetwork& net);

/// Sizes of all non-empty k-wise community intersections (2 <= k <= 4),
/// found through the membership lists of nodes in at least k communities.
/// Sorted ascending.
std::vector<std::int64_t> intersection_sizes(const LabeledNetwork& net, int k);

Ecdf intersection_size_ccdf(const LabeledNetwork& net, int k);

/// Fraction of edges whose endpoints share no community.
double realized_xi(std::span<const Edge> edges, const std::vector<std::vector<std::uint32_t>>& node_communities);
double realized_xi(const LabeledNetwork& net);

/// Pearson correlation of (degree, membership count) over non-outliers.
double realized_rho(const LabeledNetwork& net, std::span<const std::int64_t> degrees);

/// Edges of H over |V(H)| choose 2; 0 when |V(H)| < 2.
double density(std::int64_t edges, std::int64_t nodes) noexcept;

struct IntersectionDensity {
    std::uint32_t community_a = 0;
    std::uint32_t community_b = 0;
    std::int64_t size_a = 0;
    std::int64_t size_b = 0;
    std::int64_t overlap = 0;
    double overlap_density = 0.0;
    double density_a = 0.0;
    double density_b = 0.0;
};

/// Community pairs whose overlap has at least min_overlap nodes and at most
/// ratio_cap times the smaller community's size, with induced-subgraph
/// densities of the overlap and of both communities.
std::vector<IntersectionDensity> intersection_density_profile(const LabeledNetwork& net, std::int64_t min_overlap = 25,
                                                              double ratio_cap = 0.5);

struct NodeIef {
    std::uint32_t node = 0;
    std::uint32_t memberships = 0;
    std::vector<double> top;  ///< descending, min(k, community_count) entries
};

struct IefProfile {
    std::size_t k = 5;
    std::vector<NodeIef> nodes;
    std::int64_t isolated_skipped = 0;
};

/// IEF(v, C) = |{u in N(v) : u in C}| / deg(v) over every community C; the k
/// largest per node.
IefProfile ief_top_k(const LabeledNetwork& net, std::size_t k = 5);

/// Linear-interpolation quantile (p in [0, 1]) of unsorted values.
double quantile(std::vector<double> values, double p);

struct QuantileSummary {
    std::size_t count = 0;
    double min = 0.0, q25 = 0.0, median = 0.0, q75 = 0.0, max = 0.0;
};

QuantileSummary summarize(std::vector<double> values);

} // namespace abcdoo
