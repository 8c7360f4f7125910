#pragma once

#include <cstdint>

#include "abcdoo/rng.hpp"

namespace abcdoo {

/// Truncated discrete power law on {lo, ..., hi}: P(k) is proportional to
/// the integral of x^-exponent over [k, k+1).
struct PowerLawSpec {
    double exponent = 2.0;
    std::int64_t lo = 1;
    std::int64_t hi = 1;

    /// Throws ValidationError unless exponent > 0 and 1 <= lo <= hi.
    void validate() const;
};

/// Integral of x^-exponent over [a, b], for 0 < a <= b.
double power_law_mass(double exponent, double a, double b);

double tpl_pmf(const PowerLawSpec& spec, std::int64_t k);

/// Exact mean, summed over the support.
double tpl_mean(const PowerLawSpec& spec);

/// Inverse-CDF sampler over the continuous closed form. Draw k = floor(x)
/// where x solves mass(lo, x) = u * mass(lo, hi + 1).
class PowerLawSampler {
public:
    explicit PowerLawSampler(const PowerLawSpec& spec);

    std::int64_t operator()(Rng& rng) const;
    const PowerLawSpec& spec() const noexcept { return spec_; }

private:
    std::int64_t invert(double mass) const;

    PowerLawSpec spec_;
    double total_mass_;
};

std::int64_t sample_tpl(const PowerLawSpec& spec, Rng& rng);

/// floor(x) + Bernoulli(frac(x)).
std::int64_t random_round(double x, Rng& rng);

} // namespace abcdoo
