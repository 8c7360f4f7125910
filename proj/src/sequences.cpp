#include "abcdoo/sequences.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "abcdoo/errors.hpp"
#include "abcdoo/power_law.hpp"

namespace abcdoo {

DegreeSequence finalize_degree_sequence(std::vector<std::int64_t> degrees, std::int64_t min_degree) {
    DegreeSequence out;
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    const std::int64_t total = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
    if (total % 2 != 0) {
        if (degrees.front() - 1 < min_degree)
            throw ValidationError("degree sum is odd and the largest degree is already the minimum " +
                                  std::to_string(min_degree));
        --degrees.front();
        // restore monotonicity: the lowered entry sinks past its equals
        auto it = std::upper_bound(degrees.begin() + 1, degrees.end(), degrees.front(), std::greater<>());
        std::rotate(degrees.begin(), degrees.begin() + 1, it);
        out.parity_adjusted = true;
    }
    out.degrees = std::move(degrees);
    return out;
}

DegreeSequence build_degree_sequence(const Parameters& params, Rng& rng) {
    const PowerLawSampler sampler({params.gamma, params.delta, params.Delta});
    std::vector<std::int64_t> degrees(static_cast<std::size_t>(params.n));
    for (auto& d : degrees) d = sampler(rng);
    return finalize_degree_sequence(std::move(degrees), params.delta);
}

DegreeSequence explicit_degree_sequence(std::vector<std::int64_t> degrees, const Parameters& params) {
    if (static_cast<std::int64_t>(degrees.size()) != params.n)
        throw ValidationError("degree sequence has " + std::to_string(degrees.size()) + " entries, expected n = " +
                              std::to_string(params.n));
    for (auto d : degrees)
        if (d < params.delta || d > params.Delta)
            throw ValidationError("degree " + std::to_string(d) + " outside [delta, Delta] = [" +
                                  std::to_string(params.delta) + ", " + std::to_string(params.Delta) + "]");
    return finalize_degree_sequence(std::move(degrees), params.delta);
}

std::vector<std::int64_t> adjust_primary_samples(std::vector<std::int64_t> samples, std::int64_t target,
                                                 std::int64_t min_size, Rng& rng) {
    const std::int64_t total = std::accumulate(samples.begin(), samples.end(), std::int64_t{0});
    const std::int64_t overshoot = total - target;
    if (overshoot <= 0 || samples.empty()) return samples;
    const std::int64_t last = samples.back();
    if (last >= overshoot + min_size) {
        samples.back() -= overshoot;
        return samples;
    }
    samples.pop_back();
    // c - a distinct earlier samples each gain one; repeat rounds if there are fewer samples than that
    std::int64_t deficit = last - overshoot;
    std::vector<std::size_t> idx(samples.size());
    while (deficit > 0 && !idx.empty()) {
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        const auto take = static_cast<std::size_t>(std::min<std::int64_t>(deficit, std::int64_t(idx.size())));
        for (std::size_t i = 0; i < take; ++i) {
            std::swap(idx[i], idx[i + uniform_below(rng, idx.size() - i)]);
            ++samples[idx[i]];
        }
        deficit -= static_cast<std::int64_t>(take);
    }
    return samples;
}

namespace {

CommunitySizeSequence finish_sizes(std::vector<std::int64_t> primary, const Parameters& params, Rng& rng) {
    CommunitySizeSequence out;
    std::sort(primary.begin(), primary.end(), std::greater<>());
    const std::int64_t cap = params.nonoutliers();
    const std::int64_t max_primary = params.max_primary_size();
    out.grown_sizes.reserve(primary.size());
    for (auto p : primary) {
        if (p > max_primary) ++out.above_max;
        std::int64_t grown = random_round(params.eta * double(p), rng);
        grown = std::max(grown, p);
        if (grown > cap) {
            grown = cap;
            ++out.capped;
        }
        out.grown_sizes.push_back(grown);
    }
    out.primary_sizes = std::move(primary);
    if (out.above_max > 0)
        out.warnings.push_back(std::to_string(out.above_max) +
                               " primary communities exceed floor(S/eta) after the sum adjustment");
    if (out.capped > 0)
        out.warnings.push_back(std::to_string(out.capped) + " grown community sizes capped at n - s0");
    return out;
}

} // namespace

CommunitySizeSequence build_community_size_sequences(const Parameters& params, Rng& rng) {
    const std::int64_t target = params.nonoutliers();
    const std::int64_t min_size = params.min_primary_size();
    if (target < min_size)
        throw ValidationError("n - s0 = " + std::to_string(target) + " is below the minimum primary size " +
                              std::to_string(min_size));
    const PowerLawSampler sampler({params.beta, min_size, params.max_primary_size()});
    std::vector<std::int64_t> samples;
    std::int64_t total = 0;
    while (total < target) {
        samples.push_back(sampler(rng));
        total += samples.back();
    }
    samples = adjust_primary_samples(std::move(samples), target, min_size, rng);
    return finish_sizes(std::move(samples), params, rng);
}

CommunitySizeSequence explicit_community_sizes(std::vector<std::int64_t> primary_sizes, const Parameters& params,
                                               Rng& rng) {
    const std::int64_t total = std::accumulate(primary_sizes.begin(), primary_sizes.end(), std::int64_t{0});
    if (total != params.nonoutliers())
        throw ValidationError("community sizes sum to " + std::to_string(total) + ", expected n - s0 = " +
                              std::to_string(params.nonoutliers()));
    for (auto p : primary_sizes)
        if (p < 1) throw ValidationError("community sizes must be positive");
    return finish_sizes(std::move(primary_sizes), params, rng);
}

} // namespace abcdoo
