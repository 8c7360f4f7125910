#include <doctest.h>

#include <cmath>
#include <numeric>

#include "abcdoo/ckb.hpp"
#include "abcdoo/errors.hpp"
#include "oracles.hpp"

using namespace abcdoo;

TEST_CASE("community count examples") {
    CHECK(ckb_community_count({100, {2.5, 2, 2}, {1.5, 20, 20}, 1}) == 10);
    CHECK(ckb_community_count({37, {2.0, 3, 3}, {2.0, 3, 3}, 1}) == 37);
    CHECK(ckb_community_count({0, {2.0, 1, 5}, {2.0, 5, 50}, 1}) == 0);
    CHECK_THROWS_AS(ckb_community_count({10, {2.0, 0, 5}, {2.0, 5, 50}, 1}), ValidationError);
}

TEST_CASE("community count follows the expectation formula") {
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        CkbSpec spec;
        spec.n = 100 + uniform_below<std::int64_t>(rng, 20000);
        spec.membership_law = {1.5 + 2 * uniform01(rng), 1, 1 + uniform_below<std::int64_t>(rng, 30)};
        spec.size_law = {1.2 + 1.5 * uniform01(rng), 5 + uniform_below<std::int64_t>(rng, 10),
                         50 + uniform_below<std::int64_t>(rng, 2000)};
        const long double ratio = spec.n *
                                  oracle::tpl_expectation(spec.membership_law.exponent, spec.membership_law.lo,
                                                          spec.membership_law.hi) /
                                  oracle::tpl_expectation(spec.size_law.exponent, spec.size_law.lo, spec.size_law.hi);
        CHECK(ckb_community_count(spec) == std::int64_t(std::floor(ratio)));
    }
}

TEST_CASE("stub totals are equalized before matching") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const CkbSpec spec{5000, {2.5, 1, 20}, {2.0, 10, 500}, seed};
        const auto r = generate_ckb(spec);
        const auto a = std::accumulate(r.node_stubs.begin(), r.node_stubs.end(), std::int64_t{0});
        const auto b = std::accumulate(r.community_stubs.begin(), r.community_stubs.end(), std::int64_t{0});
        CHECK(a == b);
        CHECK((r.added_node_stubs == 0 || r.added_community_stubs == 0));
        CHECK(std::int64_t(r.network.community_count) == ckb_community_count(spec));
        std::int64_t incidences = 0;
        for (std::size_t v = 0; v < r.network.node_count; ++v) {
            const auto& l = r.network.node_communities[v];
            CHECK(std::is_sorted(l.begin(), l.end()));
            CHECK(std::adjacent_find(l.begin(), l.end()) == l.end());
            incidences += std::int64_t(l.size());
        }
        CHECK(incidences + r.collapsed_incidences == a);
        CHECK(r.network.edges.empty());
    }
}

TEST_CASE("unit memberships give a partition") {
    const CkbSpec spec{1000, {2.0, 1, 1}, {2.0, 50, 50}, 3};
    const auto r = generate_ckb(spec);
    CHECK(r.network.community_count == 20);
    for (const auto& l : r.network.node_communities) CHECK(l.size() == 1);
    CHECK(r.collapsed_incidences == 0);
}

TEST_CASE("node stubs follow the membership law") {
    const CkbSpec spec{100000, {2.2, 1, 40}, {2.0, 5, 60}, 9};
    Rng rng(9);
    const auto r = generate_ckb(spec, rng);
    REQUIRE(r.added_node_stubs == 0);
    std::vector<double> obs(40, 0.0), exp(40);
    for (auto s : r.node_stubs) obs[static_cast<std::size_t>(s - 1)] += 1;
    for (int k = 1; k <= 40; ++k) exp[static_cast<std::size_t>(k - 1)] = 1e5 * double(oracle::tpl_probability(2.2, 1, 40, k));
    CHECK(oracle::chi_square_pvalue(obs, exp) > 0.01);
}

TEST_CASE("too small a network for one community is rejected") {
    Rng rng(1);
    CHECK_THROWS_AS(generate_ckb({3, {2.0, 1, 1}, {2.0, 10, 10}, 1}, rng), ValidationError);
    const auto empty = generate_ckb({0, {2.0, 1, 1}, {2.0, 10, 10}, 1}, rng);
    CHECK(empty.network.node_count == 0);
}
