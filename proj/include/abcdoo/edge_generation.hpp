#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "abcdoo/graph.hpp"
#include "abcdoo/rng.hpp"

namespace abcdoo {

/// Community/background split of every node's degree.
struct DegreeSplit {
    std::vector<std::int64_t> community;                ///< Y_i
    std::vector<std::int64_t> background;               ///< Z_i
    std::vector<std::vector<std::int64_t>> quota;       ///< aligned with the node's community list
    std::int64_t parity_fixes = 0;
};

/// Y_i = random_round((1 - xi) d_i) and Z_i = d_i - Y_i; outliers get Z_i = d_i.
DegreeSplit split_degrees(std::span<const std::int64_t> degrees, std::span<const std::uint8_t> is_outlier, double xi,
                          Rng& rng);

/// Spreads Y_i over the node's communities: Y_i mod eta_i randomly chosen
/// communities get floor(Y_i / eta_i) + 1, the rest floor(Y_i / eta_i).
void allocate_community_halfedges(DegreeSplit& split, const std::vector<std::vector<std::uint32_t>>& node_communities,
                                  Rng& rng);

/// Makes the quota sum of one community even by moving one half-edge of its
/// highest-degree member with a positive quota (ties to the lower node) to
/// the background. Returns true if a fix was applied.
bool fix_parity(DegreeSplit& split, std::span<const std::int64_t> degrees,
                const std::vector<std::vector<std::uint32_t>>& node_communities, std::uint32_t community,
                std::span<const std::uint32_t> members);

/// Index of community in the node's sorted community list.
std::size_t community_slot(const std::vector<std::uint32_t>& communities, std::uint32_t community);

/// Uniform perfect matching of half-edges: nodes[i] carries degrees[i]
/// half-edges. Loops and multi-edges are kept. Edges carry tag.
std::vector<Edge> configuration_model(std::span<const std::uint32_t> nodes, std::span<const std::int64_t> degrees,
                                      std::uint32_t tag, Rng& rng);

/// Node i carries degrees[i] half-edges.
std::vector<Edge> configuration_model(std::span<const std::int64_t> degrees, Rng& rng);

/// Multiset union, provenance kept: communities in index order, then background.
std::vector<Edge> assemble_union(const std::vector<std::vector<Edge>>& community_graphs,
                                 const std::vector<Edge>& background);

} // namespace abcdoo
