#include "abcdoo/rewiring.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "abcdoo/errors.hpp"

namespace abcdoo {

namespace {

class PairCounts {
public:
    explicit PairCounts(std::span<const Edge> edges) {
        counts_.reserve(edges.size() * 2);
        for (const auto& e : edges) add(e);
    }
    void add(const Edge& e) { ++counts_[e.key()]; }
    void remove(const Edge& e) {
        auto it = counts_.find(e.key());
        if (--it->second == 0) counts_.erase(it);
    }
    std::uint32_t count(std::uint64_t key) const {
        const auto it = counts_.find(key);
        return it == counts_.end() ? 0 : it->second;
    }

private:
    std::unordered_map<std::uint64_t, std::uint32_t> counts_;
};

bool offending(const Edge& e, const PairCounts& counts) { return e.is_loop() || counts.count(e.key()) > 1; }

std::vector<std::size_t> offenders_with(std::span<const Edge> edges, const PairCounts& counts) {
    std::vector<std::size_t> out;
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.is_loop()) {
            out.push_back(i);
        } else if (counts.count(e.key()) > 1 && !seen.insert(e.key()).second) {
            out.push_back(i);
        }
    }
    return out;
}

using Retag = std::function<std::uint32_t(const Edge&)>;

/// Rewires {a,b},{c,d} into {a,c},{b,d} or {a,d},{b,c} (fair coin) if neither
/// new edge is a loop or already present.
bool try_rewire(std::vector<Edge>& edges, std::size_t first, std::size_t second, PairCounts& counts, Rng& rng,
                const Retag& retag) {
    const Edge e = edges[first];
    const Edge f = edges[second];
    std::uint32_t c = f.u, d = f.v;
    if (uniform01(rng) < 0.5) std::swap(c, d);
    Edge x = Edge::make(e.u, c, e.tag);
    Edge y = Edge::make(e.v, d, f.tag);
    if (x.is_loop() || y.is_loop() || x.key() == y.key()) return false;
    auto remaining = [&](const Edge& g) {
        return counts.count(g.key()) - (g.key() == e.key() ? 1u : 0u) - (g.key() == f.key() ? 1u : 0u);
    };
    if (remaining(x) > 0 || remaining(y) > 0) return false;
    counts.remove(e);
    counts.remove(f);
    if (retag) {
        x.tag = retag(x);
        y.tag = retag(y);
    }
    counts.add(x);
    counts.add(y);
    edges[first] = x;
    edges[second] = y;
    return true;
}

std::size_t other_index(std::size_t self, std::size_t size, Rng& rng) {
    std::size_t r = uniform_below(rng, size - 1);
    return r >= self ? r + 1 : r;
}

std::vector<Edge> remove_indices(std::vector<Edge>& edges, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    std::vector<Edge> removed;
    removed.reserve(indices.size());
    std::size_t out = 0;
    std::size_t next = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (next < indices.size() && indices[next] == i) {
            removed.push_back(edges[i]);
            ++next;
        } else {
            edges[out++] = edges[i];
        }
    }
    edges.resize(out);
    return removed;
}

} // namespace

std::vector<std::size_t> collect_offenders(std::span<const Edge> edges) {
    return offenders_with(edges, PairCounts(edges));
}

LocalRewireResult rewire_graph(std::vector<Edge> edges, Rng& rng) {
    LocalRewireResult result;
    PairCounts counts(edges);
    auto list = offenders_with(edges, counts);
    result.stats.initial_offenders = static_cast<std::int64_t>(list.size());
    while (!list.empty() && edges.size() >= 2) {
        ++result.stats.rounds;
        std::shuffle(list.begin(), list.end(), rng);
        for (auto idx : list) {
            if (!offending(edges[idx], counts)) continue;
            const std::size_t partner = other_index(idx, edges.size(), rng);
            if (try_rewire(edges, idx, partner, counts, rng, nullptr)) ++result.stats.accepted;
        }
        auto next = offenders_with(edges, counts);
        const bool shrank = next.size() < list.size();
        list = std::move(next);
        if (!shrank) break;
    }
    result.leftovers = remove_indices(edges, std::move(list));
    result.stats.leftovers = static_cast<std::int64_t>(result.leftovers.size());
    result.edges = std::move(edges);
    return result;
}

GlobalRewireResult global_rewire(std::vector<Edge> merged, std::vector<Edge> leftovers, const MembershipTest& is_member,
                                 Rng& rng) {
    GlobalRewireResult result;
    auto& stats = result.stats;
    stats.local_leftovers = static_cast<std::int64_t>(leftovers.size());

    auto duplicates = collect_offenders(merged);
    stats.cross_duplicates = static_cast<std::int64_t>(duplicates.size());
    std::vector<Edge> recycle = remove_indices(merged, std::move(duplicates));
    recycle.insert(recycle.end(), leftovers.begin(), leftovers.end());
    stats.list_size = static_cast<std::int64_t>(recycle.size());
    if (recycle.empty()) {
        result.edges = std::move(merged);
        return result;
    }

    const Retag retag = [&](const Edge& e) -> std::uint32_t {
        if (e.tag == kBackgroundTag) return kBackgroundTag;
        return is_member(e.u, e.tag - 1) && is_member(e.v, e.tag - 1) ? e.tag : kBackgroundTag;
    };

    // dissolve into half-edges, each remembering its originating entry's tag
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stubs;
    stubs.reserve(2 * recycle.size());
    for (const auto& e : recycle) {
        stubs.emplace_back(e.u, e.tag);
        stubs.emplace_back(e.v, e.tag);
    }
    std::shuffle(stubs.begin(), stubs.end(), rng);
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
        Edge e = Edge::make(stubs[i].first, stubs[i + 1].first, stubs[i].second);
        e.tag = retag(e);
        merged.push_back(e);
    }

    PairCounts counts(merged);
    auto list = offenders_with(merged, counts);
    stats.unresolved_after_pairing = static_cast<std::int64_t>(list.size());
    std::int64_t failures = 0;
    while (!list.empty()) {
        if (merged.size() < 2)
            throw GenerationError("global rewiring", "no partner edges available; the degree sequence is not graphic "
                                                     "and should be reconsidered");
        std::shuffle(list.begin(), list.end(), rng);
        const auto limit = 100 * static_cast<std::int64_t>(list.size());
        for (auto idx : list) {
            if (!offending(merged[idx], counts)) continue;
            ++stats.attempts;
            const std::size_t partner = other_index(idx, merged.size(), rng);
            if (try_rewire(merged, idx, partner, counts, rng, retag)) {
                failures = 0;
            } else {
                ++stats.failed_attempts;
                if (++failures >= limit)
                    throw GenerationError("global rewiring",
                                          "no admissible rewiring found after " + std::to_string(limit) +
                                              " attempts; the required degree sequence is likely not graphic and "
                                              "should be reconsidered");
            }
        }
        list = offenders_with(merged, counts);
    }
    result.edges = std::move(merged);
    return result;
}

} // namespace abcdoo
