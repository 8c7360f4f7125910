#include "abcdoo/node_assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "abcdoo/errors.hpp"

namespace abcdoo {

OutlierSelection select_outliers(std::span<const std::int64_t> degrees, const Parameters& params, Rng& rng) {
    OutlierSelection sel;
    const double n = double(degrees.size());
    const double s0 = double(params.s0);
    for (auto d : degrees) sel.ell += std::min(1.0, params.xi * double(d));
    sel.bound = sel.ell + s0 - sel.ell * s0 / n - 1.0;
    if (params.s0 == 0) return sel;

    std::vector<std::uint32_t> eligible;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        if (double(degrees[i]) <= sel.bound) eligible.push_back(static_cast<std::uint32_t>(i));
    if (eligible.size() < static_cast<std::size_t>(params.s0)) {
        std::ostringstream os;
        os << "only " << eligible.size() << " nodes have degree <= " << sel.bound << " but s0 = " << params.s0
           << " outliers are required; increase xi or decrease s0";
        throw GenerationError("outlier selection", os.str());
    }
    const auto take = static_cast<std::size_t>(params.s0);
    for (std::size_t i = 0; i < take; ++i) std::swap(eligible[i], eligible[i + uniform_below(rng, eligible.size() - i)]);
    eligible.resize(take);
    std::sort(eligible.begin(), eligible.end());
    sel.outliers = std::move(eligible);
    return sel;
}

double compute_phi(std::span<const std::int64_t> primary_sizes, std::int64_t nonoutliers, std::int64_t s0, double xi) {
    if (nonoutliers <= 0) throw std::invalid_argument("compute_phi: n - s0 must be positive");
    const double nhat = double(nonoutliers);
    const double denom = nhat * xi + double(s0);
    if (denom == 0.0) return 1.0;
    double concentration = 0.0;
    for (auto s : primary_sizes) {
        const double share = double(s) / nhat;
        concentration += share * share;
    }
    return 1.0 - concentration * (nhat * xi) / denom;
}

double pearson_correlation(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::domain_error("pearson_correlation: length mismatch");
    if (xs.size() < 2) throw std::domain_error("pearson_correlation: need at least two pairs");
    const double n = double(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

ElementProfile ElementProfile::from_layout(const CommunityLayout& layout) {
    ElementProfile profile;
    profile.memberships = membership_counts(layout);
    profile.smallest_size.assign(layout.element_count(), std::numeric_limits<std::int64_t>::max());
    for (const auto& members : layout.members) {
        const auto size = static_cast<std::int64_t>(members.size());
        for (auto id : members) profile.smallest_size[id] = std::min(profile.smallest_size[id], size);
    }
    return profile;
}

PairingTable::PairingTable(const ElementProfile& profile, double phi, double xi) {
    const std::size_t n = profile.size();
    if (profile.smallest_size.size() != n) throw std::invalid_argument("inconsistent element profile");
    const double slack = 1.0 - xi * phi;
    capacity_.resize(n);
    memberships_ = profile.memberships;
    for (std::size_t v = 0; v < n; ++v) {
        if (memberships_[v] == 0) throw std::invalid_argument("every element needs at least one community");
        capacity_[v] = slack <= 0.0 ? std::numeric_limits<double>::infinity()
                                    : double(memberships_[v]) / slack * double(profile.smallest_size[v] - 1);
    }
    by_capacity_.resize(n);
    std::iota(by_capacity_.begin(), by_capacity_.end(), 0u);
    std::sort(by_capacity_.begin(), by_capacity_.end(), [&](std::uint32_t a, std::uint32_t b) {
        return capacity_[a] > capacity_[b] || (capacity_[a] == capacity_[b] && a < b);
    });
    std::vector<std::uint32_t> distinct(memberships_);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    class_log_eta_.reserve(distinct.size());
    for (auto eta : distinct) class_log_eta_.push_back(std::log(double(eta)));
    class_of_.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        class_of_[v] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), memberships_[v]) -
                                                  distinct.begin());
}

struct PairingRun {
    static PairingState run(std::span<const std::int64_t> degrees, const PairingTable& table, double alpha,
                            Rng& rng) {
        const std::size_t n = table.size();
        if (degrees.size() != n) throw std::invalid_argument("one degree per element required");
        PairingState state;
        state.alpha = alpha;
        state.element_of.resize(n);

        std::vector<std::uint32_t> order = table.by_capacity_;
        const std::size_t classes = table.class_log_eta_.size();
        std::vector<std::vector<std::uint32_t>> pool(classes);
        std::vector<double> log_weight(classes);
        for (std::size_t c = 0; c < classes; ++c) log_weight[c] = alpha * table.class_log_eta_[c];
        std::vector<double> weight(classes);
        std::size_t admitted = 0;
        std::size_t next = 0;

        for (std::size_t i = 0; i < n; ++i) {
            const double d = double(degrees[i]);
            while (next < n && table.capacity_[order[next]] >= d) {
                const auto v = order[next++];
                pool[table.class_of_[v]].push_back(v);
                ++admitted;
            }
            std::uint32_t chosen;
            if (admitted > 0) {
                double top = -std::numeric_limits<double>::infinity();
                for (std::size_t c = 0; c < classes; ++c)
                    if (!pool[c].empty()) top = std::max(top, log_weight[c]);
                double total = 0.0;
                for (std::size_t c = 0; c < classes; ++c) {
                    weight[c] = pool[c].empty() ? 0.0 : double(pool[c].size()) * std::exp(log_weight[c] - top);
                    total += weight[c];
                }
                double r = uniform01(rng) * total;
                std::size_t c = 0;
                for (; c + 1 < classes; ++c) {
                    if (weight[c] > 0.0 && r < weight[c]) break;
                    r -= weight[c];
                }
                while (pool[c].empty()) --c;  // r landed past the last class through rounding
                auto& bucket = pool[c];
                const std::size_t pick = uniform_below(rng, bucket.size());
                chosen = bucket[pick];
                bucket[pick] = bucket.back();
                bucket.pop_back();
                --admitted;
            } else {
                // nothing admissible: uniform among the unassigned of maximal capacity
                const double cap = table.capacity_[order[next]];
                std::size_t run_end = next + 1;
                while (run_end < n && table.capacity_[order[run_end]] == cap) ++run_end;
                const std::size_t pick = next + uniform_below(rng, run_end - next);
                std::swap(order[next], order[pick]);
                chosen = order[next++];
                ++state.fallback_count;
            }
            state.element_of[i] = chosen;
        }

        std::vector<double> xs(n), ys(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = double(degrees[i]);
            ys[i] = double(table.memberships_[state.element_of[i]]);
        }
        state.achieved_rho = n >= 2 ? pearson_correlation(xs, ys) : 0.0;
        return state;
    }
};

PairingState pair_degrees_with_alpha(std::span<const std::int64_t> degrees, const PairingTable& table, double alpha,
                                     Rng& rng) {
    return PairingRun::run(degrees, table, alpha, rng);
}

TuningResult tune_alpha(std::span<const std::int64_t> degrees, const PairingTable& table, double target,
                        std::uint64_t seed, const TuningOptions& options) {
    TuningResult result;
    double best_error = std::numeric_limits<double>::infinity();
    // Closest rho seen strictly below and at-or-above the target.
    double side_best[2] = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    auto evaluate = [&](double alpha) {
        Rng rng = make_stream(seed, Stream::Pairing, static_cast<std::uint64_t>(result.evaluations++));
        PairingState state = pair_degrees_with_alpha(degrees, table, alpha, rng);
        const double rho = state.achieved_rho;
        const double error = std::abs(rho - target);
        double& side = side_best[rho >= target ? 1 : 0];
        const bool improved = error < side;
        side = std::min(side, error);
        if (error < best_error) {
            best_error = error;
            result.best = std::move(state);
        }
        return std::pair{rho, improved};
    };

    bool constant_eta = true;
    for (std::size_t v = 1; v < table.size(); ++v)
        if (table.memberships(v) != table.memberships(0)) {
            constant_eta = false;
            break;
        }
    if (constant_eta)
        result.warnings.push_back("every element has the same membership count; correlation is fixed at 0");

    double lo = options.alpha_min;
    double hi = options.alpha_max;
    const double rho_lo = evaluate(lo).first;
    if (best_error > options.tolerance) {
        const double rho_hi = evaluate(hi).first;
        if (best_error > options.tolerance && target > std::min(rho_lo, rho_hi) && target < std::max(rho_lo, rho_hi)) {
            const bool increasing = rho_hi >= rho_lo;
            int stale = 0;
            for (int iter = 0; iter < options.max_iterations && best_error > options.tolerance; ++iter) {
                const double mid = 0.5 * (lo + hi);
                const auto [rho, improved] = evaluate(mid);
                if ((rho < target) == increasing)
                    lo = mid;
                else
                    hi = mid;
                // A step that fails to tighten the bracket on its own side
                // means sampling noise dominates the response to alpha.
                stale = improved ? 0 : stale + 1;
                if (stale >= options.patience) break;
            }
        }
    }
    result.reached = best_error <= options.tolerance;
    if (!result.reached) {
        std::ostringstream os;
        os << "target correlation " << target << " not reached; closest achieved " << result.best.achieved_rho
           << " at alpha " << result.best.alpha;
        result.warnings.push_back(os.str());
    }
    return result;
}

} // namespace abcdoo
