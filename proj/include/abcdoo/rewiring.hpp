#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "abcdoo/graph.hpp"
#include "abcdoo/rng.hpp"

namespace abcdoo {

/// Indices of self-loops and of every copy of a repeated pair except the
/// first one in edge order.
std::vector<std::size_t> collect_offenders(std::span<const Edge> edges);

struct RecycleStats {
    std::int64_t initial_offenders = 0;
    std::int64_t rounds = 0;
    std::int64_t accepted = 0;
    std::int64_t leftovers = 0;
};

struct LocalRewireResult {
    std::vector<Edge> edges;      ///< simple
    std::vector<Edge> leftovers;  ///< removed offenders, for the global list
    RecycleStats stats;
};

/// Rounds of: shuffle the recycle list, try to rewire each listed edge with a
/// uniformly chosen other edge, keep a rewire only if it creates no loop or
/// repeated pair. Stops when a round fails to shrink the list.
LocalRewireResult rewire_graph(std::vector<Edge> edges, Rng& rng);

struct GlobalRewireStats {
    std::int64_t cross_duplicates = 0;
    std::int64_t local_leftovers = 0;
    std::int64_t list_size = 0;         ///< global recycle list size
    std::int64_t unresolved_after_pairing = 0;
    std::int64_t attempts = 0;
    std::int64_t failed_attempts = 0;
};

struct GlobalRewireResult {
    std::vector<Edge> edges;
    GlobalRewireStats stats;
};

/// is_member(node, community) for community ids as used in edge tags minus one.
using MembershipTest = std::function<bool(std::uint32_t node, std::uint32_t community)>;

/// Moves repeated pairs across component graphs (all but the first copy) and
/// the local leftovers to the global recycle list, re-pairs its half-edges
/// uniformly, then rewires the remaining offenders against the whole edge set.
/// Fails with GenerationError after 100 x (list size) consecutive failed
/// attempts. A rewired edge keeps the tag of the edge it replaces while both
/// endpoints belong to that community, and becomes background otherwise.
GlobalRewireResult global_rewire(std::vector<Edge> merged, std::vector<Edge> leftovers, const MembershipTest& is_member,
                                 Rng& rng);

} // namespace abcdoo
