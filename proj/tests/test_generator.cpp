#include <doctest.h>

#include <numeric>
#include <set>

#include "abcdoo/errors.hpp"
#include "abcdoo/generator.hpp"
#include "abcdoo/metrics.hpp"

using namespace abcdoo;

namespace {

Parameters experiment(std::int64_t n, double eta, double xi, std::uint64_t seed) {
    Parameters p;
    p.n = n;
    p.s0 = n / 20;
    p.eta = eta;
    p.dim = 2;
    p.rho = 0.37;
    p.gamma = 1.87;
    p.delta = 5;
    p.Delta = 100;
    p.beta = 2.13;
    p.s = 50;
    p.S = 500;
    p.xi = xi;
    p.seed = seed;
    return p;
}

void check_network(const GeneratedNetwork& net) {
    std::set<std::uint64_t> keys;
    std::vector<std::int64_t> d(net.node_count(), 0);
    for (const auto& e : net.edges) {
        REQUIRE(e.u < e.v);
        REQUIRE(keys.insert(e.key()).second);
        ++d[e.u];
        ++d[e.v];
        if (e.tag != kBackgroundTag) {
            const auto& a = net.node_communities[e.u];
            const auto& b = net.node_communities[e.v];
            CHECK(std::binary_search(a.begin(), a.end(), e.tag - 1));
            CHECK(std::binary_search(b.begin(), b.end(), e.tag - 1));
        }
    }
    CHECK(d == net.degrees);
    for (auto o : net.outliers) CHECK(net.node_communities[o].empty());
    std::size_t empty = 0;
    for (const auto& l : net.node_communities) empty += l.empty();
    CHECK(empty == net.outliers.size());
}

} // namespace

TEST_CASE("generated graphs are simple with exact degrees") {
    for (double xi : {0.1, 0.4}) {
        for (double eta : {1.0, 1.5, 2.5}) {
            const auto net = generate(experiment(3000, eta, xi, 7));
            check_network(net);
            CHECK(net.outliers.size() == 150);
            LabeledNetwork ln;
            ln.node_count = net.node_count();
            ln.community_count = net.community_count();
            ln.edges = net.edges;
            ln.node_communities = net.node_communities;
            CHECK(realized_xi(ln) <= net.summary.background_edge_fraction + 1e-12);
        }
    }
}

TEST_CASE("partition when eta is one and there are no outliers") {
    auto p = experiment(2000, 1.0, 0.2, 3);
    p.s0 = 0;
    const auto net = generate(p);
    std::int64_t total = 0;
    for (const auto& l : net.node_communities) CHECK(l.size() == 1);
    for (const auto& m : net.community_members) total += std::int64_t(m.size());
    CHECK(total == p.n);
}

TEST_CASE("generation is reproducible and independent of threads") {
    const auto p = experiment(4000, 2.0, 0.3, 11);
    GeneratorOptions one, many;
    one.threads = 1;
    many.threads = 4;
    const auto a = generate(p, one);
    const auto b = generate(p, many);
    CHECK(a.edges == b.edges);
    CHECK(a.node_communities == b.node_communities);
    CHECK(a.summary.achieved_rho == b.summary.achieved_rho);
    CHECK(a.summary.global_recycle.attempts == b.summary.global_recycle.attempts);
    const auto c = generate(experiment(4000, 2.0, 0.3, 12), one);
    CHECK(c.edges != a.edges);
}

TEST_CASE("injected sequences are used") {
    auto p = experiment(200, 1.0, 0.2, 5);
    p.s0 = 0;
    p.s = 10;
    p.S = 100;
    GeneratorOptions o;
    o.degrees = std::vector<std::int64_t>(200, 6);
    o.primary_sizes = std::vector<std::int64_t>{100, 60, 40};
    const auto net = generate(p, o);
    check_network(net);
    CHECK(net.degrees == std::vector<std::int64_t>(200, 6));
    std::vector<std::size_t> sizes;
    for (const auto& m : net.community_members) sizes.push_back(m.size());
    CHECK(sizes == std::vector<std::size_t>{100, 60, 40});
}

TEST_CASE("invalid parameters never reach sampling") {
    auto p = experiment(1000, 2.0, 0.2, 1);
    p.xi = 1.5;
    CHECK_THROWS_AS(generate(p), ValidationError);
}

TEST_CASE("impossible outlier requests fail in the outlier phase") {
    auto p = experiment(1000, 1.0, 0.0, 1);
    p.s0 = 3;  // bound s0 - 1 = 2 sits below delta
    p.delta = 5;
    try {
        generate(p);
        FAIL("expected a generation error");
    } catch (const GenerationError& e) {
        CHECK(e.phase() == "outlier selection");
    }
}

TEST_CASE("noise near the requested level") {
    // outliers route their whole degree to the background, so drop them here
    for (double xi : {0.1, 0.3, 0.6}) {
        auto p = experiment(10000, 1.5, xi, 2);
        p.s0 = 0;
        const auto net = generate(p);
        CHECK(std::abs(net.summary.background_degree_fraction - xi) < 0.01);
        CHECK(std::abs(net.summary.realized_xi - xi) < 0.03);
    }
}
