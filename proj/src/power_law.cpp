#include "abcdoo/power_law.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "abcdoo/errors.hpp"

namespace abcdoo {

void PowerLawSpec::validate() const {
    if (!(exponent > 0.0) || !std::isfinite(exponent))
        throw ValidationError("power-law exponent must be in (0, inf), got " + std::to_string(exponent));
    if (lo < 1) throw ValidationError("power-law lower bound must be >= 1, got " + std::to_string(lo));
    if (hi < lo)
        throw ValidationError("power-law upper bound " + std::to_string(hi) + " is below lower bound " +
                              std::to_string(lo));
}

double power_law_mass(double exponent, double a, double b) {
    const double log_ratio = std::log(b / a);
    const double e = 1.0 - exponent;
    const double t = e * log_ratio;
    if (t == 0.0) return log_ratio;
    // a^e * (exp(e log(b/a)) - 1) / e stays accurate as exponent -> 1
    return std::pow(a, e) * std::expm1(t) / e;
}

double tpl_pmf(const PowerLawSpec& spec, std::int64_t k) {
    spec.validate();
    if (k < spec.lo || k > spec.hi)
        throw std::domain_error("tpl_pmf: k=" + std::to_string(k) + " outside [" + std::to_string(spec.lo) + ", " +
                                std::to_string(spec.hi) + "]");
    const double total = power_law_mass(spec.exponent, double(spec.lo), double(spec.hi) + 1.0);
    return power_law_mass(spec.exponent, double(k), double(k) + 1.0) / total;
}

double tpl_mean(const PowerLawSpec& spec) {
    spec.validate();
    const double total = power_law_mass(spec.exponent, double(spec.lo), double(spec.hi) + 1.0);
    long double acc = 0.0L;
    for (std::int64_t k = spec.lo; k <= spec.hi; ++k)
        acc += static_cast<long double>(k) * power_law_mass(spec.exponent, double(k), double(k) + 1.0);
    return static_cast<double>(acc / total);
}

PowerLawSampler::PowerLawSampler(const PowerLawSpec& spec) : spec_(spec) {
    spec_.validate();
    total_mass_ = power_law_mass(spec_.exponent, double(spec_.lo), double(spec_.hi) + 1.0);
}

std::int64_t PowerLawSampler::invert(double mass) const {
    const double lo = double(spec_.lo);
    const double e = 1.0 - spec_.exponent;
    double x;
    if (e == 0.0) {
        x = lo * std::exp(mass);
    } else {
        const double z = e * mass * std::pow(lo, -e);
        x = lo * std::exp(std::log1p(z) / e);
    }
    auto k = static_cast<std::int64_t>(std::floor(x));
    if (k < spec_.lo) k = spec_.lo;
    if (k > spec_.hi) k = spec_.hi;
    return k;
}

std::int64_t PowerLawSampler::operator()(Rng& rng) const {
    if (spec_.lo == spec_.hi) return spec_.lo;
    return invert(uniform01(rng) * total_mass_);
}

std::int64_t sample_tpl(const PowerLawSpec& spec, Rng& rng) { return PowerLawSampler(spec)(rng); }

std::int64_t random_round(double x, Rng& rng) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw std::domain_error("random_round: x must be finite and >= 0");
    const double whole = std::floor(x);
    const double frac = x - whole;
    auto result = static_cast<std::int64_t>(whole);
    if (frac > 0.0 && uniform01(rng) < frac) ++result;
    return result;
}

} // namespace abcdoo
