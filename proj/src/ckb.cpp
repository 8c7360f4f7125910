#include "abcdoo/ckb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "abcdoo/errors.hpp"

namespace abcdoo {

namespace {

// Adds one stub at a time to uniformly chosen entries until the totals agree.
std::int64_t top_up(std::vector<std::int64_t>& counts, std::int64_t missing, Rng& rng) {
    for (std::int64_t i = 0; i < missing; ++i) ++counts[uniform_below(rng, counts.size())];
    return missing;
}

} // namespace

void CkbSpec::validate() const {
    if (n < 0) throw ValidationError("n must be non-negative");
    membership_law.validate();
    size_law.validate();
}

std::int64_t ckb_community_count(const CkbSpec& spec) {
    spec.validate();
    if (spec.n == 0) return 0;
    const double ratio =
        static_cast<double>(spec.n) * tpl_mean(spec.membership_law) / tpl_mean(spec.size_law);
    return static_cast<std::int64_t>(std::floor(ratio));
}

CkbResult generate_ckb(const CkbSpec& spec, Rng& rng) {
    const std::int64_t communities = ckb_community_count(spec);
    if (spec.n > 0 && communities == 0)
        throw ValidationError("community count is zero; n * E[membership] must reach E[size]");

    CkbResult out;
    auto& net = out.network;
    net.node_count = static_cast<std::size_t>(spec.n);
    net.community_count = static_cast<std::size_t>(communities);
    net.node_communities.assign(net.node_count, {});
    if (spec.n == 0) return out;

    const PowerLawSampler membership(spec.membership_law);
    const PowerLawSampler size(spec.size_law);
    out.node_stubs.resize(net.node_count);
    for (auto& x : out.node_stubs) x = membership(rng);
    out.community_stubs.resize(net.community_count);
    for (auto& x : out.community_stubs) x = size(rng);

    const auto node_total = std::accumulate(out.node_stubs.begin(), out.node_stubs.end(), std::int64_t{0});
    const auto community_total =
        std::accumulate(out.community_stubs.begin(), out.community_stubs.end(), std::int64_t{0});
    if (node_total < community_total)
        out.added_node_stubs = top_up(out.node_stubs, community_total - node_total, rng);
    else if (community_total < node_total)
        out.added_community_stubs = top_up(out.community_stubs, node_total - community_total, rng);

    std::vector<std::uint32_t> community_side;
    community_side.reserve(static_cast<std::size_t>(std::max(node_total, community_total)));
    for (std::uint32_t c = 0; c < out.community_stubs.size(); ++c)
        community_side.insert(community_side.end(), static_cast<std::size_t>(out.community_stubs[c]), c);
    std::shuffle(community_side.begin(), community_side.end(), rng);

    std::size_t next = 0;
    for (std::uint32_t v = 0; v < out.node_stubs.size(); ++v) {
        auto& list = net.node_communities[v];
        for (std::int64_t k = 0; k < out.node_stubs[v]; ++k) list.push_back(community_side[next++]);
        std::sort(list.begin(), list.end());
        const auto unique_end = std::unique(list.begin(), list.end());
        out.collapsed_incidences += list.end() - unique_end;
        list.erase(unique_end, list.end());
    }
    return out;
}

CkbResult generate_ckb(const CkbSpec& spec) {
    Rng rng = make_stream(spec.seed, Stream::Ckb);
    return generate_ckb(spec, rng);
}

} // namespace abcdoo
