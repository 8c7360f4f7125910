#include "abcdoo/edge_generation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "abcdoo/power_law.hpp"

namespace abcdoo {

DegreeSplit split_degrees(std::span<const std::int64_t> degrees, std::span<const std::uint8_t> is_outlier, double xi,
                          Rng& rng) {
    if (degrees.size() != is_outlier.size()) throw std::invalid_argument("split_degrees: size mismatch");
    DegreeSplit split;
    split.community.resize(degrees.size());
    split.background.resize(degrees.size());
    split.quota.resize(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const std::int64_t d = degrees[i];
        std::int64_t y = 0;
        if (!is_outlier[i]) y = std::min(random_round((1.0 - xi) * double(d), rng), d);
        split.community[i] = y;
        split.background[i] = d - y;
    }
    return split;
}

void allocate_community_halfedges(DegreeSplit& split, const std::vector<std::vector<std::uint32_t>>& node_communities,
                                  Rng& rng) {
    split.quota.resize(split.community.size());
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < split.community.size(); ++i) {
        const std::size_t eta = node_communities[i].size();
        auto& quota = split.quota[i];
        quota.assign(eta, 0);
        if (eta == 0) {
            if (split.community[i] != 0) throw std::logic_error("node without communities has community degree");
            continue;
        }
        const std::int64_t y = split.community[i];
        const std::int64_t base = y / std::int64_t(eta);
        const auto extra = static_cast<std::size_t>(y - base * std::int64_t(eta));
        std::fill(quota.begin(), quota.end(), base);
        order.resize(eta);
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t k = 0; k < extra; ++k) {
            std::swap(order[k], order[k + uniform_below(rng, eta - k)]);
            ++quota[order[k]];
        }
    }
}

std::size_t community_slot(const std::vector<std::uint32_t>& communities, std::uint32_t community) {
    const auto it = std::lower_bound(communities.begin(), communities.end(), community);
    if (it == communities.end() || *it != community) throw std::logic_error("node is not a member of community");
    return static_cast<std::size_t>(it - communities.begin());
}

bool fix_parity(DegreeSplit& split, std::span<const std::int64_t> degrees,
                const std::vector<std::vector<std::uint32_t>>& node_communities, std::uint32_t community,
                std::span<const std::uint32_t> members) {
    std::int64_t total = 0;
    for (auto i : members) total += split.quota[i][community_slot(node_communities[i], community)];
    if (total % 2 == 0) return false;
    std::uint32_t chosen = 0;
    bool found = false;
    for (auto i : members) {
        if (split.quota[i][community_slot(node_communities[i], community)] <= 0) continue;
        if (!found || degrees[i] > degrees[chosen] || (degrees[i] == degrees[chosen] && i < chosen)) {
            chosen = i;
            found = true;
        }
    }
    // an odd total always has a positive quota somewhere
    --split.quota[chosen][community_slot(node_communities[chosen], community)];
    --split.community[chosen];
    ++split.background[chosen];
    ++split.parity_fixes;
    return true;
}

std::vector<Edge> configuration_model(std::span<const std::uint32_t> nodes, std::span<const std::int64_t> degrees,
                                      std::uint32_t tag, Rng& rng) {
    if (nodes.size() != degrees.size()) throw std::invalid_argument("configuration_model: size mismatch");
    std::vector<std::uint32_t> stubs;
    stubs.reserve(static_cast<std::size_t>(std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0})));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (degrees[i] < 0) throw std::invalid_argument("configuration_model: negative degree");
        stubs.insert(stubs.end(), static_cast<std::size_t>(degrees[i]), nodes[i]);
    }
    if (stubs.size() % 2 != 0) throw std::logic_error("configuration_model: odd degree sum");
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i < stubs.size(); i += 2) edges.push_back(Edge::make(stubs[i], stubs[i + 1], tag));
    return edges;
}

std::vector<Edge> configuration_model(std::span<const std::int64_t> degrees, Rng& rng) {
    std::vector<std::uint32_t> nodes(degrees.size());
    std::iota(nodes.begin(), nodes.end(), 0u);
    return configuration_model(nodes, degrees, kBackgroundTag, rng);
}

std::vector<Edge> assemble_union(const std::vector<std::vector<Edge>>& community_graphs,
                                 const std::vector<Edge>& background) {
    std::size_t total = background.size();
    for (const auto& g : community_graphs) total += g.size();
    std::vector<Edge> out;
    out.reserve(total);
    for (const auto& g : community_graphs) out.insert(out.end(), g.begin(), g.end());
    out.insert(out.end(), background.begin(), background.end());
    return out;
}

} // namespace abcdoo
