// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hoytlab {

namespace detail {

// Power series sum_k (z^2/4)^k / (k!)^2. All terms positive, no cancellation;
// used up to the crossover where the asymptotic form takes over.
inline double i0_series(double z) {
    const double u = 0.25 * z * z;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= u / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

// e^{-z} I0(z) for large z via the standard asymptotic expansion
// (Abramowitz & Stegun 9.7.1); truncated at the smallest term.
inline double i0_scaled_asymptotic(double z) {
    double term = 1.0;
    double sum = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int m = 1; m < 64; ++m) {
        const double odd = 2.0 * m - 1.0;
        term *= odd * odd / (8.0 * m * z);
        if (std::abs(term) >= prev) break;
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < 1e-17 * sum) break;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * z);
}

inline constexpr double i0_series_cutoff = 15.0;

} // namespace detail

/// e^{-|z|} I0(z). Finite for all finite z; the form every internal caller
/// should prefer once exponentials have been factored out analytically.
inline double bessel_i0_scaled(double z) {
    if (!std::isfinite(z)) throw std::domain_error("bessel_i0_scaled: argument must be finite");
    z = std::abs(z);
    if (z <= detail::i0_series_cutoff) return std::exp(-z) * detail::i0_series(z);
    return detail::i0_scaled_asymptotic(z);
}

/// Modified Bessel function I0(z). Even in z, >= 1, monotone in |z|.
/// Throws std::range_error once e^{|z|} growth exceeds double range
/// (|z| slightly above 713); use bessel_i0_scaled there instead.
inline double bessel_i0(double z) {
    if (!std::isfinite(z)) throw std::domain_error("bessel_i0: argument must be finite");
    z = std::abs(z);
    if (z <= detail::i0_series_cutoff) return detail::i0_series(z);
    // e^z overflows before the product does; split the exponential.
    const double half = std::exp(0.5 * z);
    const double result = half * (half * detail::i0_scaled_asymptotic(z));
    if (!std::isfinite(result))
        throw std::range_error("bessel_i0: overflow at z = " + std::to_string(z) +
                               "; use bessel_i0_scaled");
    return result;
}

} // namespace hoytlab
