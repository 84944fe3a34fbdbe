// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "hoytlab/bessel.hpp"
#include "hoytlab/quadrature.hpp"

namespace hoytlab {

namespace detail {

// Direct quadrature of the defining integral, written with the scaled Bessel
// so the integrand is a Gaussian-like bump exp(-(t-a)^2/2) * t * i0e(a t).
// Only used when the series weights would underflow (a^2/2 or b^2/2 > ~700).
inline double marcum_q1_quadrature(double a, double b) {
    const double upper = std::max(a, b) + 45.0;
    if (b >= upper) return 0.0;
    const QuadratureSpec spec{64, 8192, 1e-12};
    const double v = integrate(
        [a](double t) { return t * std::exp(-0.5 * (t - a) * (t - a)) * bessel_i0_scaled(a * t); },
        b, upper, spec);
    return std::clamp(v, 0.0, 1.0);
}

} // namespace detail

/// First-order Marcum Q-function Q1(a, b), a, b >= 0.
///
/// Series of Poisson(a^2/2) weights against the Poisson(b^2/2) cdf. Terms are
/// positive and the remainder after truncation is bounded by the Poisson mass
/// not yet accumulated, which gives a hard stopping rule.
inline double marcum_q1(double a, double b) {
    if (!(a >= 0.0) || !(b >= 0.0))
        throw std::domain_error("marcum_q1: arguments must be nonnegative");
    if (b == 0.0) return 1.0;
    const double ha = 0.5 * a * a;
    const double hb = 0.5 * b * b;
    if (a == 0.0) return std::exp(-hb);
    if (ha > 700.0 || hb > 700.0) return detail::marcum_q1_quadrature(a, b);

    double wa = std::exp(-ha); // Poisson(ha) pmf at k
    double pb = std::exp(-hb); // Poisson(hb) pmf at k
    double cb = pb;            // Poisson(hb) cdf at k
    double acc = wa * cb;
    double wsum = wa;
    constexpr double tail_tol = 1e-15;
    for (std::uint32_t k = 1; k < 200000; ++k) {
        wa *= ha / k;
        pb *= hb / k;
        cb += pb;
        acc += wa * cb;
        wsum += wa;
        if (1.0 - wsum < tail_tol) break;
    }
    return std::clamp(acc, 0.0, 1.0);
}

} // namespace hoytlab
