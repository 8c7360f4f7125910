#include <doctest.h>

#include <cmath>
#include <set>

#include "abcdoo/errors.hpp"
#include "abcdoo/node_assignment.hpp"
#include "oracles.hpp"

using namespace abcdoo;

namespace {

Parameters with(std::int64_t n, std::int64_t s0, double xi) {
    Parameters p;
    p.n = n;
    p.s0 = s0;
    p.xi = xi;
    return p;
}

ElementProfile profile(std::vector<std::uint32_t> eta, std::vector<std::int64_t> smallest) {
    ElementProfile p;
    p.memberships = std::move(eta);
    p.smallest_size = std::move(smallest);
    return p;
}

} // namespace

TEST_CASE("outlier bound with zero noise") {
    std::vector<std::int64_t> d{9, 7, 5, 4, 4, 3, 2, 1};
    Rng rng(1);
    const auto sel = select_outliers(d, with(8, 5, 0.0), rng);
    CHECK(sel.ell == 0.0);
    CHECK(sel.bound == 4.0);
    REQUIRE(sel.outliers.size() == 5);
    for (auto i : sel.outliers) CHECK(d[i] <= 4);
    CHECK(std::set<std::uint32_t>(sel.outliers.begin(), sel.outliers.end()) == std::set<std::uint32_t>{3, 4, 5, 6, 7});
}

TEST_CASE("outlier bound when every degree is ten") {
    std::vector<std::int64_t> d(100, 10);
    Rng rng(2);
    const auto sel = select_outliers(d, with(100, 20, 0.5), rng);
    CHECK(sel.ell == doctest::Approx(100.0));
    CHECK(sel.bound == doctest::Approx(99.0));
    CHECK(sel.outliers.size() == 20);
}

TEST_CASE("no outliers requested") {
    std::vector<std::int64_t> d{50, 40};
    Rng rng(3);
    CHECK(select_outliers(d, with(2, 0, 0.0), rng).outliers.empty());
}

TEST_CASE("too few eligible outliers is a generation error") {
    std::vector<std::int64_t> d{9, 9, 9, 2};
    Rng rng(4);
    try {
        select_outliers(d, with(4, 2, 0.0), rng);
        FAIL("expected failure");
    } catch (const GenerationError& e) {
        CHECK(e.phase() == "outlier selection");
    }
}

TEST_CASE("outliers are a uniform subset of the eligible nodes") {
    std::vector<std::int64_t> d{3, 3, 3, 3};
    std::vector<int> hits(4, 0);
    for (std::uint64_t s = 0; s < 20000; ++s) {
        Rng rng(s);
        for (auto i : select_outliers(d, with(4, 1, 1.0), rng).outliers) ++hits[i];
    }
    std::vector<double> obs(hits.begin(), hits.end());
    CHECK(oracle::chi_square_pvalue(obs, std::vector<double>(4, 5000.0)) > 0.01);
}

TEST_CASE("phi") {
    std::vector<std::int64_t> sizes{60, 40};
    CHECK(compute_phi(sizes, 100, 0, 0.2) == doctest::Approx(0.48));
    std::vector<std::int64_t> one{100};
    CHECK(compute_phi(one, 100, 0, 0.3) == doctest::Approx(0.0));
    CHECK(compute_phi(sizes, 100, 0, 0.0) == 1.0);
    // n*xi / (n*xi + s0) = 10 / 20
    CHECK(compute_phi(sizes, 100, 10, 0.1) == doctest::Approx(1.0 - 0.52 * 0.5));
}

TEST_CASE("pearson examples") {
    const std::vector<double> a{1, 2, 3}, b{3, 2, 1}, c{1, 2, 3, 4}, d{1, 3, 2, 4};
    CHECK(pearson_correlation(a, a) == doctest::Approx(1.0));
    CHECK(pearson_correlation(a, b) == doctest::Approx(-1.0));
    CHECK(pearson_correlation(c, d) == doctest::Approx(0.8));
    const std::vector<double> flat{2, 2, 2};
    CHECK(pearson_correlation(a, flat) == 0.0);
    CHECK_THROWS_AS(pearson_correlation(a, c), std::domain_error);
    const std::vector<double> single{1};
    CHECK_THROWS_AS(pearson_correlation(single, single), std::domain_error);
    Rng rng(5);
    std::vector<double> x(500), y(500);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = uniform01(rng);
        y[i] = x[i] + uniform01(rng);
    }
    CHECK(pearson_correlation(x, y) == doctest::Approx(oracle::pearson(x, y)).epsilon(1e-12));
}

TEST_CASE("capacity") {
    const PairingTable table(profile({1, 3}, {11, 21}), 1.0, 0.5);
    CHECK(table.capacity(0) == doctest::Approx(1.0 / 0.5 * 10));
    CHECK(table.capacity(1) == doctest::Approx(3.0 / 0.5 * 20));
    const PairingTable unbounded(profile({1}, {5}), 1.0, 1.0);
    CHECK(std::isinf(unbounded.capacity(0)));
}

TEST_CASE("pairing weights follow eta to the alpha") {
    const PairingTable table(profile({1, 3}, {100, 100}), 1.0, 0.0);
    const std::vector<std::int64_t> degrees{5, 5};
    for (const auto& [alpha, p3] : {std::pair{0.0, 0.5}, std::pair{1.0, 0.75}, std::pair{-1.0, 0.25},
                                    std::pair{60.0, 1.0}, std::pair{-60.0, 0.0}}) {
        Rng rng(9);
        int first_is_3 = 0;
        for (int t = 0; t < 10000; ++t) first_is_3 += pair_degrees_with_alpha(degrees, table, alpha, rng).element_of[0] == 1;
        CHECK(std::abs(first_is_3 / 1e4 - p3) < 0.015);
    }
}

TEST_CASE("admissibility and fallback") {
    // element 0 can host degree <= 10, element 1 degree <= 2
    const PairingTable table(profile({1, 1}, {11, 3}), 1.0, 0.0);
    for (std::uint64_t s = 0; s < 50; ++s) {
        Rng rng(s);
        const std::vector<std::int64_t> degrees{8, 2};
        const auto st = pair_degrees_with_alpha(degrees, table, 0.0, rng);
        CHECK(st.element_of == std::vector<std::uint32_t>{0, 1});
        CHECK(st.fallback_count == 0);
    }
    Rng rng(1);
    const std::vector<std::int64_t> big{20, 20};
    const auto st = pair_degrees_with_alpha(big, table, 0.0, rng);
    CHECK(st.element_of == std::vector<std::uint32_t>{0, 1});
    CHECK(st.fallback_count == 2);
}

TEST_CASE("pairing is a bijection that respects capacity") {
    Rng rng(21);
    const std::size_t n = 2000;
    std::vector<std::uint32_t> eta(n);
    std::vector<std::int64_t> smallest(n);
    for (std::size_t v = 0; v < n; ++v) {
        eta[v] = 1 + uniform_below<std::uint32_t>(rng, 4);
        smallest[v] = 5 + uniform_below<std::int64_t>(rng, 100);
    }
    std::vector<std::int64_t> degrees(n);
    for (auto& d : degrees) d = 1 + uniform_below<std::int64_t>(rng, 60);
    std::sort(degrees.rbegin(), degrees.rend());
    const PairingTable table(profile(eta, smallest), 0.95, 0.3);
    for (double alpha : {-60.0, -2.0, 0.0, 0.7, 60.0}) {
        const auto st = pair_degrees_with_alpha(degrees, table, alpha, rng);
        std::vector<std::uint32_t> sorted = st.element_of;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i) REQUIRE(sorted[i] == i);
        std::int64_t violations = 0;
        std::vector<double> x, y;
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = st.element_of[i];
            violations += double(degrees[i]) > double(eta[v]) / (1 - 0.3 * 0.95) * double(smallest[v] - 1);
            x.push_back(double(degrees[i]));
            y.push_back(double(eta[v]));
        }
        CHECK(violations <= st.fallback_count);
        CHECK(st.achieved_rho == doctest::Approx(oracle::pearson(x, y)).epsilon(1e-9));
    }
}

TEST_CASE("correlation responds to alpha") {
    Rng rng(31);
    const std::size_t n = 3000;
    std::vector<std::uint32_t> eta(n);
    for (auto& e : eta) e = 1 + uniform_below<std::uint32_t>(rng, 5);
    std::vector<std::int64_t> degrees(n);
    for (auto& d : degrees) d = 1 + uniform_below<std::int64_t>(rng, 100);
    std::sort(degrees.rbegin(), degrees.rend());
    const PairingTable table(profile(eta, std::vector<std::int64_t>(n, 1000)), 1.0, 0.2);
    double hi = 0, lo = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        Rng r(s);
        hi += pair_degrees_with_alpha(degrees, table, 10.0, r).achieved_rho;
        lo += pair_degrees_with_alpha(degrees, table, -10.0, r).achieved_rho;
    }
    CHECK(hi > lo);

    for (double target : {-0.4, 0.0, 0.3, 0.6}) {
        const auto res = tune_alpha(degrees, table, target, 5);
        CHECK(res.reached);
        CHECK(std::abs(res.best.achieved_rho - target) <= 0.005);
    }
    const auto unreachable = tune_alpha(degrees, table, 0.999, 5);
    CHECK_FALSE(unreachable.reached);
    CHECK(unreachable.best.alpha == 60.0);
    CHECK_FALSE(unreachable.warnings.empty());
}

TEST_CASE("tuning on constant memberships warns and reports zero") {
    const PairingTable table(profile(std::vector<std::uint32_t>(50, 1), std::vector<std::int64_t>(50, 100)), 1.0, 0.1);
    const std::vector<std::int64_t> degrees(50, 4);
    const auto res = tune_alpha(degrees, table, 0.5, 1);
    CHECK(res.best.achieved_rho == 0.0);
    CHECK(res.warnings.size() >= 1);
}

TEST_CASE("tuning is reproducible") {
    Rng rng(41);
    std::vector<std::uint32_t> eta(500);
    for (auto& e : eta) e = 1 + uniform_below<std::uint32_t>(rng, 3);
    std::vector<std::int64_t> degrees(500);
    for (auto& d : degrees) d = 1 + uniform_below<std::int64_t>(rng, 30);
    std::sort(degrees.rbegin(), degrees.rend());
    const PairingTable table(profile(eta, std::vector<std::int64_t>(500, 100)), 1.0, 0.2);
    const auto a = tune_alpha(degrees, table, 0.25, 99);
    const auto b = tune_alpha(degrees, table, 0.25, 99);
    CHECK(a.best.element_of == b.best.element_of);
    CHECK(a.best.alpha == b.best.alpha);
}
