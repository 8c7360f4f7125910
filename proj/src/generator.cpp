#include "abcdoo/generator.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "abcdoo/edge_generation.hpp"
#include "abcdoo/errors.hpp"
#include "abcdoo/metrics.hpp"
#include "abcdoo/parallel.hpp"
#include "abcdoo/reference_layer.hpp"
#include "abcdoo/sequences.hpp"

namespace abcdoo {

namespace {

class PhaseClock {
public:
    explicit PhaseClock(PhaseTimings& out) : out_(out), start_(std::chrono::steady_clock::now()) {}
    void lap(std::string name) {
        const auto now = std::chrono::steady_clock::now();
        out_.seconds.emplace_back(std::move(name), std::chrono::duration<double>(now - start_).count());
        start_ = now;
    }

private:
    PhaseTimings& out_;
    std::chrono::steady_clock::time_point start_;
};

void append(std::vector<std::string>& to, const std::vector<std::string>& from) {
    to.insert(to.end(), from.begin(), from.end());
}

void add_stats(RecycleStats& total, const RecycleStats& part) {
    total.initial_offenders += part.initial_offenders;
    total.rounds += part.rounds;
    total.accepted += part.accepted;
    total.leftovers += part.leftovers;
}

} // namespace

GeneratedNetwork generate(const Parameters& params, const GeneratorOptions& options) {
    params.validate();
    GeneratedNetwork net;
    net.params = params;
    RunSummary& summary = net.summary;
    PhaseClock clock(net.timings);
    const std::uint64_t seed = params.seed;
    const std::size_t threads = std::max<std::size_t>(options.threads, 1);

    // Phase 1: degrees
    DegreeSequence degrees;
    if (options.degrees) {
        degrees = explicit_degree_sequence(*options.degrees, params);
    } else {
        Rng rng = make_stream(seed, Stream::Degrees);
        degrees = build_degree_sequence(params, rng);
    }
    net.degrees = std::move(degrees.degrees);
    summary.degree_parity_adjusted = degrees.parity_adjusted;
    const std::size_t n = net.degrees.size();
    clock.lap("degrees");

    // Phase 2: outliers
    Rng outlier_rng = make_stream(seed, Stream::Outliers);
    OutlierSelection outliers = select_outliers(net.degrees, params, outlier_rng);
    summary.outlier_ell = outliers.ell;
    summary.outlier_bound = outliers.bound;
    std::vector<std::uint8_t> is_outlier(n, 0);
    for (auto i : outliers.outliers) is_outlier[i] = 1;
    net.outliers = std::move(outliers.outliers);
    std::vector<std::uint32_t> nonoutlier_nodes;
    nonoutlier_nodes.reserve(n - net.outliers.size());
    for (std::uint32_t i = 0; i < n; ++i)
        if (!is_outlier[i]) nonoutlier_nodes.push_back(i);
    clock.lap("outliers");

    // Phase 3: community sizes, reference layer, seeding, growth
    Rng size_rng = make_stream(seed, Stream::CommunitySizes);
    CommunitySizeSequence sizes = options.primary_sizes
                                      ? explicit_community_sizes(*options.primary_sizes, params, size_rng)
                                      : build_community_size_sequences(params, size_rng);
    append(summary.warnings, sizes.warnings);
    Rng point_rng = make_stream(seed, Stream::Points);
    net.points = sample_reference_points(params.nonoutliers(), params.dim, point_rng);
    CommunityLayout layout = assign_primary_communities(net.points, sizes.primary_sizes);
    clock.lap("seeding");
    GrowthReport growth = grow_communities(layout, sizes.grown_sizes, net.points, threads);
    append(summary.warnings, growth.warnings);
    summary.communities = static_cast<std::int64_t>(layout.community_count());
    summary.primary_size_sum = std::accumulate(sizes.primary_sizes.begin(), sizes.primary_sizes.end(), std::int64_t{0});
    for (const auto& m : layout.members) summary.grown_size_sum += static_cast<std::int64_t>(m.size());
    summary.mean_memberships = double(summary.grown_size_sum) / double(layout.element_count());
    clock.lap("growth");

    // Phase 4: pair non-outlier degrees with elements
    summary.phi = compute_phi(sizes.primary_sizes, params.nonoutliers(), params.s0, params.xi);
    const PairingTable table(ElementProfile::from_layout(layout), summary.phi, params.xi);
    std::vector<std::int64_t> nonoutlier_degrees;
    nonoutlier_degrees.reserve(nonoutlier_nodes.size());
    for (auto i : nonoutlier_nodes) nonoutlier_degrees.push_back(net.degrees[i]);
    TuningResult tuning = tune_alpha(nonoutlier_degrees, table, params.rho, seed, options.tuning);
    append(summary.warnings, tuning.warnings);
    summary.alpha = tuning.best.alpha;
    summary.target_rho = params.rho;
    summary.achieved_rho = tuning.best.achieved_rho;
    summary.rho_reached = tuning.reached;
    summary.tuning_evaluations = tuning.evaluations;
    summary.pairing_fallbacks = tuning.best.fallback_count;

    std::vector<std::vector<std::uint32_t>> element_communities(layout.element_count());
    for (std::uint32_t j = 0; j < layout.community_count(); ++j)
        for (auto v : layout.members[j]) element_communities[v].push_back(j);
    net.node_of_element.assign(layout.element_count(), 0);
    net.node_communities.assign(n, {});
    for (std::size_t i = 0; i < nonoutlier_nodes.size(); ++i) {
        const std::uint32_t node = nonoutlier_nodes[i];
        const std::uint32_t element = tuning.best.element_of[i];
        net.node_of_element[element] = node;
        net.node_communities[node] = std::move(element_communities[element]);
    }
    net.community_members.assign(layout.community_count(), {});
    for (std::uint32_t j = 0; j < layout.community_count(); ++j) {
        auto& members = net.community_members[j];
        members.reserve(layout.members[j].size());
        for (auto v : layout.members[j]) members.push_back(net.node_of_element[v]);
        std::sort(members.begin(), members.end());
    }
    clock.lap("pairing");

    // Phase 5: degree split and component graphs
    Rng split_rng = make_stream(seed, Stream::DegreeSplit);
    DegreeSplit split = split_degrees(net.degrees, is_outlier, params.xi, split_rng);
    Rng alloc_rng = make_stream(seed, Stream::Allocation);
    allocate_community_halfedges(split, net.node_communities, alloc_rng);
    for (std::uint32_t j = 0; j < net.community_count(); ++j)
        fix_parity(split, net.degrees, net.node_communities, j, net.community_members[j]);
    summary.parity_fixes = split.parity_fixes;
    {
        std::int64_t z = 0, d = 0;
        for (auto i : nonoutlier_nodes) {
            z += split.background[i];
            d += net.degrees[i];
        }
        summary.background_degree_fraction = d > 0 ? double(z) / double(d) : 0.0;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < net.node_communities[i].size(); ++k)
            if (split.quota[i][k] > std::int64_t(net.community_members[net.node_communities[i][k]].size()) - 1)
                ++summary.quota_violations;
    if (summary.quota_violations > 0)
        summary.warnings.push_back(std::to_string(summary.quota_violations) +
                                   " community quotas exceed community size - 1; excess edges are repaired globally");

    std::vector<std::vector<Edge>> community_graphs(net.community_count());
    std::vector<std::vector<Edge>> community_leftovers(net.community_count());
    std::vector<RecycleStats> community_stats(net.community_count());
    parallel_for(net.community_count(), threads, [&](std::size_t j, std::size_t) {
        const auto community = static_cast<std::uint32_t>(j);
        std::vector<std::uint32_t> nodes;
        std::vector<std::int64_t> quotas;
        for (auto i : net.community_members[j]) {
            const std::int64_t q = split.quota[i][community_slot(net.node_communities[i], community)];
            if (q > 0) {
                nodes.push_back(i);
                quotas.push_back(q);
            }
        }
        Rng graph_rng = make_stream(seed, Stream::CommunityGraph, j);
        auto edges = configuration_model(nodes, quotas, community + 1, graph_rng);
        Rng rewire_rng = make_stream(seed, Stream::LocalRewire, j + 1);
        LocalRewireResult local = rewire_graph(std::move(edges), rewire_rng);
        community_graphs[j] = std::move(local.edges);
        community_leftovers[j] = std::move(local.leftovers);
        community_stats[j] = local.stats;
    });
    std::vector<std::uint32_t> all_nodes(n);
    std::iota(all_nodes.begin(), all_nodes.end(), 0u);
    Rng background_rng = make_stream(seed, Stream::BackgroundGraph);
    auto background_edges = configuration_model(all_nodes, split.background, kBackgroundTag, background_rng);
    Rng background_rewire_rng = make_stream(seed, Stream::LocalRewire, 0);
    LocalRewireResult background = rewire_graph(std::move(background_edges), background_rewire_rng);
    clock.lap("edges");

    // Phase 6: global repair of cross-component duplicates and leftovers
    std::vector<Edge> leftovers;
    for (std::size_t j = 0; j < net.community_count(); ++j) {
        add_stats(summary.local_recycle, community_stats[j]);
        leftovers.insert(leftovers.end(), community_leftovers[j].begin(), community_leftovers[j].end());
    }
    add_stats(summary.local_recycle, background.stats);
    leftovers.insert(leftovers.end(), background.leftovers.begin(), background.leftovers.end());
    std::vector<Edge> merged = assemble_union(community_graphs, background.edges);
    community_graphs.clear();
    const auto& node_communities = net.node_communities;
    const MembershipTest is_member = [&](std::uint32_t node, std::uint32_t community) {
        const auto& list = node_communities[node];
        return std::binary_search(list.begin(), list.end(), community);
    };
    Rng global_rng = make_stream(seed, Stream::GlobalRewire);
    GlobalRewireResult global = global_rewire(std::move(merged), std::move(leftovers), is_member, global_rng);
    summary.global_recycle = global.stats;
    net.edges = std::move(global.edges);
    std::sort(net.edges.begin(), net.edges.end(),
              [](const Edge& a, const Edge& b) { return a.key() < b.key(); });
    clock.lap("rewiring");

    std::vector<std::int64_t> realized(n, 0);
    std::int64_t background_count = 0;
    for (const auto& e : net.edges) {
        if (e.is_loop()) throw std::logic_error("self-loop survived rewiring");
        ++realized[e.u];
        ++realized[e.v];
        if (e.tag == kBackgroundTag) ++background_count;
    }
    for (std::size_t i = 1; i < net.edges.size(); ++i)
        if (net.edges[i].key() == net.edges[i - 1].key()) throw std::logic_error("multi-edge survived rewiring");
    if (realized != net.degrees) throw std::logic_error("rewiring changed the degree sequence");

    summary.nodes = static_cast<std::int64_t>(n);
    summary.edges = static_cast<std::int64_t>(net.edges.size());
    summary.outliers = static_cast<std::int64_t>(net.outliers.size());
    summary.background_edge_fraction = net.edges.empty() ? 0.0 : double(background_count) / double(net.edges.size());
    summary.realized_xi = realized_xi(net.edges, net.node_communities);
    return net;
}

} // namespace abcdoo
