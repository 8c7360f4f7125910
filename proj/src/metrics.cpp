#include "abcdoo/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "abcdoo/node_assignment.hpp"

namespace abcdoo {

namespace {

using Combo = std::array<std::uint32_t, 4>;

struct ComboHash {
    std::size_t operator()(const Combo& c) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : c) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
        return static_cast<std::size_t>(h);
    }
};

template <class Fn>
void for_each_combination(const std::vector<std::uint32_t>& items, int k, Fn&& fn) {
    const std::size_t m = items.size();
    Combo c{UINT32_MAX, UINT32_MAX, UINT32_MAX, UINT32_MAX};
    switch (k) {
    case 2:
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b) {
                c[0] = items[a], c[1] = items[b];
                fn(c);
            }
        break;
    case 3:
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                for (std::size_t d = b + 1; d < m; ++d) {
                    c[0] = items[a], c[1] = items[b], c[2] = items[d];
                    fn(c);
                }
        break;
    case 4:
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                for (std::size_t d = b + 1; d < m; ++d)
                    for (std::size_t e = d + 1; e < m; ++e) {
                        c[0] = items[a], c[1] = items[b], c[2] = items[d], c[3] = items[e];
                        fn(c);
                    }
        break;
    default:
        throw std::domain_error("intersection order must be 2, 3 or 4");
    }
}

std::unordered_map<Combo, std::int64_t, ComboHash> intersection_counts(const LabeledNetwork& net, int k) {
    if (k < 2 || k > 4) throw std::domain_error("intersection order must be 2, 3 or 4");
    std::unordered_map<Combo, std::int64_t, ComboHash> counts;
    for (const auto& list : net.node_communities)
        if (list.size() >= static_cast<std::size_t>(k)) for_each_combination(list, k, [&](const Combo& c) { ++counts[c]; });
    return counts;
}

void shared_communities(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& out) {
    out.clear();
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

bool share_any(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

} // namespace

std::vector<std::int64_t> LabeledNetwork::degrees() const {
    std::vector<std::int64_t> d(node_count, 0);
    for (const auto& e : edges) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

std::vector<std::vector<std::uint32_t>> LabeledNetwork::community_members() const {
    std::vector<std::vector<std::uint32_t>> members(community_count);
    for (std::uint32_t v = 0; v < node_communities.size(); ++v)
        for (auto c : node_communities[v]) members[c].push_back(v);
    return members;
}

Ecdf Ecdf::from_samples(std::vector<double> samples) {
    Ecdf out;
    out.samples_ = samples.size();
    std::sort(samples.begin(), samples.end());
    const double n = double(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i > 0 && samples[i] == samples[i - 1]) continue;
        out.support_.push_back(samples[i]);
        out.ccdf_.push_back(double(samples.size() - i) / n);
    }
    return out;
}

double Ecdf::at(double x) const noexcept {
    const auto it = std::lower_bound(support_.begin(), support_.end(), x);
    if (it == support_.end()) return 0.0;
    return ccdf_[static_cast<std::size_t>(it - support_.begin())];
}

Ecdf community_size_ccdf(const LabeledNetwork& net) {
    std::vector<double> sizes(net.community_count, 0.0);
    for (const auto& list : net.node_communities)
        for (auto c : list) sizes[c] += 1.0;
    return Ecdf::from_samples(std::move(sizes));
}

Ecdf communities_per_node_ccdf(const LabeledNetwork& net) {
    std::vector<double> counts;
    counts.reserve(net.node_count);
    for (const auto& list : net.node_communities) counts.push_back(double(list.size()));
    return Ecdf::from_samples(std::move(counts));
}

std::vector<std::int64_t> intersection_sizes(const LabeledNetwork& net, int k) {
    const auto counts = intersection_counts(net, k);
    std::vector<std::int64_t> sizes;
    sizes.reserve(counts.size());
    for (const auto& [combo, size] : counts) sizes.push_back(size);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

Ecdf intersection_size_ccdf(const LabeledNetwork& net, int k) {
    const auto sizes = intersection_sizes(net, k);
    return Ecdf::from_samples(std::vector<double>(sizes.begin(), sizes.end()));
}

double realized_xi(std::span<const Edge> edges, const std::vector<std::vector<std::uint32_t>>& node_communities) {
    if (edges.empty()) return 0.0;
    std::size_t background = 0;
    for (const auto& e : edges)
        if (!share_any(node_communities[e.u], node_communities[e.v])) ++background;
    return double(background) / double(edges.size());
}

double realized_xi(const LabeledNetwork& net) { return realized_xi(net.edges, net.node_communities); }

double realized_rho(const LabeledNetwork& net, std::span<const std::int64_t> degrees) {
    std::vector<double> xs, ys;
    for (std::size_t v = 0; v < net.node_communities.size(); ++v) {
        if (net.node_communities[v].empty()) continue;
        xs.push_back(double(degrees[v]));
        ys.push_back(double(net.node_communities[v].size()));
    }
    if (xs.size() < 2) throw std::domain_error("realized_rho needs at least two non-outlier nodes");
    return pearson_correlation(xs, ys);
}

double density(std::int64_t edges, std::int64_t nodes) noexcept {
    if (nodes < 2) return 0.0;
    return double(edges) / (double(nodes) * double(nodes - 1) / 2.0);
}

std::vector<IntersectionDensity> intersection_density_profile(const LabeledNetwork& net, std::int64_t min_overlap,
                                                              double ratio_cap) {
    std::vector<std::int64_t> sizes(net.community_count, 0);
    for (const auto& list : net.node_communities)
        for (auto c : list) ++sizes[c];

    const auto overlaps = intersection_counts(net, 2);
    std::vector<IntersectionDensity> out;
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (const auto& [combo, overlap] : overlaps) {
        const auto a = combo[0], b = combo[1];
        if (overlap < min_overlap) continue;
        if (double(overlap) > ratio_cap * double(std::min(sizes[a], sizes[b]))) continue;
        IntersectionDensity rec;
        rec.community_a = a;
        rec.community_b = b;
        rec.size_a = sizes[a];
        rec.size_b = sizes[b];
        rec.overlap = overlap;
        out.push_back(rec);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::pair{x.community_a, x.community_b} < std::pair{y.community_a, y.community_b};
    });
    for (std::size_t i = 0; i < out.size(); ++i)
        index.emplace((std::uint64_t(out[i].community_a) << 32) | out[i].community_b, i);

    std::vector<std::int64_t> internal(net.community_count, 0);
    std::vector<std::int64_t> overlap_edges(out.size(), 0);
    std::vector<std::uint32_t> shared;
    for (const auto& e : net.edges) {
        shared_communities(net.node_communities[e.u], net.node_communities[e.v], shared);
        for (auto c : shared) ++internal[c];
        if (index.empty()) continue;
        for (std::size_t x = 0; x < shared.size(); ++x)
            for (std::size_t y = x + 1; y < shared.size(); ++y) {
                const auto it = index.find((std::uint64_t(shared[x]) << 32) | shared[y]);
                if (it != index.end()) ++overlap_edges[it->second];
            }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto& rec = out[i];
        rec.overlap_density = density(overlap_edges[i], rec.overlap);
        rec.density_a = density(internal[rec.community_a], rec.size_a);
        rec.density_b = density(internal[rec.community_b], rec.size_b);
    }
    return out;
}

IefProfile ief_top_k(const LabeledNetwork& net, std::size_t k) {
    IefProfile profile;
    profile.k = k;
    std::vector<std::vector<std::uint32_t>> adjacency(net.node_count);
    for (const auto& e : net.edges) {
        adjacency[e.u].push_back(e.v);
        adjacency[e.v].push_back(e.u);
    }
    const std::size_t keep = std::min(k, net.community_count);
    std::vector<std::int64_t> counts(net.community_count, 0);
    std::vector<std::uint32_t> touched;
    std::vector<double> values;
    for (std::uint32_t v = 0; v < net.node_count; ++v) {
        const auto& nbrs = adjacency[v];
        if (nbrs.empty()) {
            ++profile.isolated_skipped;
            continue;
        }
        touched.clear();
        for (auto u : nbrs)
            for (auto c : net.node_communities[u])
                if (counts[c]++ == 0) touched.push_back(c);
        values.clear();
        for (auto c : touched) {
            values.push_back(double(counts[c]) / double(nbrs.size()));
            counts[c] = 0;
        }
        std::sort(values.begin(), values.end(), std::greater<>());
        values.resize(keep, 0.0);
        profile.nodes.push_back({v, static_cast<std::uint32_t>(net.node_communities[v].size()), values});
    }
    return profile;
}

double quantile(std::vector<double> values, double p) {
    if (values.empty()) throw std::domain_error("quantile of an empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("quantile level must be in [0, 1]");
    std::sort(values.begin(), values.end());
    const double h = p * double(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - double(lo)) * (values[hi] - values[lo]);
}

QuantileSummary summarize(std::vector<double> values) {
    QuantileSummary s;
    s.count = values.size();
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    s.q25 = quantile(values, 0.25);
    s.median = quantile(values, 0.5);
    s.q75 = quantile(values, 0.75);
    return s;
}

} // namespace abcdoo
