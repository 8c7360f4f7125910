#pragma once

#include <cstdint>
#include <vector>

#include "abcdoo/metrics.hpp"
#include "abcdoo/power_law.hpp"

namespace abcdoo {

/// Bipartite affiliation baseline: node membership counts and community
/// sizes drawn from two truncated power laws, then matched uniformly.
struct CkbSpec {
    std::int64_t n = 0;
    PowerLawSpec membership_law;
    PowerLawSpec size_law;
    std::uint64_t seed = 0;

    void validate() const;
};

/// floor(n * E[membership] / E[size]).
std::int64_t ckb_community_count(const CkbSpec& spec);

struct CkbResult {
    LabeledNetwork network;                   ///< memberships only, no edges
    std::vector<std::int64_t> node_stubs;     ///< after equalization
    std::vector<std::int64_t> community_stubs;
    std::int64_t added_node_stubs = 0;
    std::int64_t added_community_stubs = 0;
    std::int64_t collapsed_incidences = 0;
};

CkbResult generate_ckb(const CkbSpec& spec, Rng& rng);

/// Uses the Ckb stream of spec.seed.
CkbResult generate_ckb(const CkbSpec& spec);

} // namespace abcdoo
