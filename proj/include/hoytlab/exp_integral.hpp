// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hoytlab {

namespace detail {

// Convergent series for small x: E1(x) = -gamma_e - ln x + sum (-1)^{k+1} x^k/(k k!).
inline double e1_series(double x) {
    double sum = 0.0;
    double p = 1.0; // (-x)^k / k!
    for (int k = 1; k < 64; ++k) {
        p *= -x / k;
        const double term = -p / k;
        sum += term;
        if (std::abs(term) < 1e-18) break;
    }
    return -std::numbers::egamma - std::log(x) + sum;
}

// Modified Lentz evaluation of the continued fraction for E1; returns
// e^x E1(x) directly, which is the quantity that stays on scale as x grows.
inline double e1_scaled_lentz(double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 300; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h;
}

} // namespace detail

/// e^x E1(x) for x > 0. Stays O(1/x) for large x, so callers evaluating
/// expressions of the form e^{1/g} E1(1/g) remain stable as g -> 0+.
inline double exp_integral_e1_scaled(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_integral_e1: argument must be positive");
    if (x <= 1.0) return std::exp(x) * detail::e1_series(x);
    return detail::e1_scaled_lentz(x);
}

/// Exponential integral E1(x) = integral_x^inf e^{-t}/t dt, x > 0.
inline double exp_integral_e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_integral_e1: argument must be positive");
    if (x <= 1.0) return detail::e1_series(x);
    return std::exp(-x) * detail::e1_scaled_lentz(x);
}

} // namespace hoytlab
