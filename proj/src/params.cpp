#include "abcdoo/params.hpp"

#include <cmath>
#include <sstream>

#include "abcdoo/errors.hpp"

namespace abcdoo {

namespace {

// s/eta and S/eta are often exact in decimal but not in binary.
constexpr double kRatioSlack = 1e-9;

template <class T>
std::string str(T v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

std::int64_t Parameters::min_primary_size() const noexcept {
    return static_cast<std::int64_t>(std::ceil(double(s) / eta - kRatioSlack));
}

std::int64_t Parameters::max_primary_size() const noexcept {
    return static_cast<std::int64_t>(std::floor(double(S) / eta + kRatioSlack));
}

void Parameters::validate() const {
    if (n < 1) throw ValidationError("n must be in {1, 2, ...}, got " + str(n));
    if (s0 < 0 || s0 > n) throw ValidationError("s0 must be in {0, ..., n}, got " + str(s0));
    if (!(eta >= 1.0) || !std::isfinite(eta)) throw ValidationError("eta must be in [1, inf), got " + str(eta));
    if (dim < 1) throw ValidationError("d must be in {1, 2, ...}, got " + str(dim));
    if (!(rho >= -1.0 && rho <= 1.0)) throw ValidationError("rho must be in [-1, 1], got " + str(rho));
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ValidationError("gamma must be in (0, inf), got " + str(gamma));
    if (delta < 1) throw ValidationError("delta must be in {1, 2, ...}, got " + str(delta));
    if (Delta < delta) throw ValidationError("Delta must be in {delta, delta+1, ...}, got " + str(Delta));
    if (!(beta > 0.0) || !std::isfinite(beta)) throw ValidationError("beta must be in (0, inf), got " + str(beta));
    if (s < delta + 1) throw ValidationError("s must be in {delta+1, delta+2, ...}, got " + str(s));
    if (S < s) throw ValidationError("S must be in {s, s+1, ...}, got " + str(S));
    if (!(xi >= 0.0 && xi <= 1.0)) throw ValidationError("xi must be in [0, 1], got " + str(xi));
    if (min_primary_size() > max_primary_size())
        throw ValidationError("primary size range [ceil(s/eta), floor(S/eta)] = [" + str(min_primary_size()) + ", " +
                              str(max_primary_size()) + "] is empty");
    if (nonoutliers() < min_primary_size())
        throw ValidationError("n - s0 = " + str(nonoutliers()) + " is below the minimum primary community size " +
                              str(min_primary_size()));
}

} // namespace abcdoo
