#pragma once

#include <cstdint>
#include <utility>

namespace abcdoo {

/// Undirected edge with u <= v. tag is 0 for the background graph and j+1
/// for community j.
struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    std::uint32_t tag = 0;

    static Edge make(std::uint32_t a, std::uint32_t b, std::uint32_t tag = 0) noexcept {
        return a <= b ? Edge{a, b, tag} : Edge{b, a, tag};
    }
    bool is_loop() const noexcept { return u == v; }
    std::uint64_t key() const noexcept { return (std::uint64_t(u) << 32) | v; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

constexpr std::uint32_t kBackgroundTag = 0;

} // namespace abcdoo
