#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abcdoo/graph.hpp"
#include "abcdoo/node_assignment.hpp"
#include "abcdoo/params.hpp"
#include "abcdoo/point_cloud.hpp"
#include "abcdoo/rewiring.hpp"

namespace abcdoo {

struct GeneratorOptions {
    std::size_t threads = 1;
    TuningOptions tuning;
    std::optional<std::vector<std::int64_t>> degrees;        ///< injected degree sequence
    std::optional<std::vector<std::int64_t>> primary_sizes;  ///< injected primary community sizes
};

/// Everything the run summary reports. Deterministic for (parameters, seed).
struct RunSummary {
    std::int64_t nodes = 0;
    std::int64_t edges = 0;
    std::int64_t communities = 0;
    std::int64_t outliers = 0;
    bool degree_parity_adjusted = false;
    double outlier_ell = 0.0;
    double outlier_bound = 0.0;
    std::int64_t primary_size_sum = 0;
    std::int64_t grown_size_sum = 0;
    double mean_memberships = 0.0;
    double phi = 1.0;
    double alpha = 0.0;
    double target_rho = 0.0;
    double achieved_rho = 0.0;
    bool rho_reached = false;
    int tuning_evaluations = 0;
    std::int64_t pairing_fallbacks = 0;
    double background_degree_fraction = 0.0;  ///< sum Z / sum d over non-outliers
    std::int64_t parity_fixes = 0;
    std::int64_t quota_violations = 0;
    double realized_xi = 0.0;
    double background_edge_fraction = 0.0;  ///< by provenance tag
    RecycleStats local_recycle;             ///< summed over all component graphs
    GlobalRewireStats global_recycle;
    std::vector<std::string> warnings;
};

struct PhaseTimings {
    std::vector<std::pair<std::string, double>> seconds;
};

struct GeneratedNetwork {
    Parameters params;
    std::vector<std::int64_t> degrees;                        ///< by node, non-increasing
    std::vector<Edge> edges;                                  ///< simple, sorted by (u, v)
    std::vector<std::vector<std::uint32_t>> node_communities; ///< sorted; empty for outliers
    std::vector<std::vector<std::uint32_t>> community_members;///< sorted node ids
    std::vector<std::uint32_t> outliers;
    PointCloud points;                                        ///< reference layer, by element
    std::vector<std::uint32_t> node_of_element;
    RunSummary summary;
    PhaseTimings timings;

    std::size_t node_count() const noexcept { return degrees.size(); }
    std::size_t community_count() const noexcept { return community_members.size(); }
};

/// Runs the six construction phases. Throws ValidationError for bad input and
/// GenerationError when a phase cannot complete.
GeneratedNetwork generate(const Parameters& params, const GeneratorOptions& options = {});

} // namespace abcdoo
