// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hoytlab {

/// A Hoyt (Nakagami-q) faded link. The instantaneous SNR is X^2 + Y^2 with
/// X ~ N(0, sigma_x^2), Y ~ N(0, sigma_y^2), q = sigma_y/sigma_x in [0, 1];
/// q = 1 is Rayleigh, q = 0 the one-sided Gaussian. All SNR quantities are
/// linear; dB conversion belongs to the CLI boundary.
struct HoytChannel {
    double gamma_bar; // mean SNR, linear scale
    double q;         // shape parameter

    HoytChannel(double gamma_bar_, double q_) : gamma_bar(gamma_bar_), q(q_) {
        if (!(gamma_bar > 0.0) || !std::isfinite(gamma_bar))
            throw std::domain_error("HoytChannel: gamma_bar must be positive and finite");
        if (!(q >= 0.0) || !(q <= 1.0))
            throw std::domain_error("HoytChannel: q must lie in [0, 1]");
    }

    /// Squared third eccentricity of the underlying Gaussian ellipse,
    /// (1 - q^2)/(1 + q^2) in [0, 1]; zero iff q = 1.
    double eccentricity() const { return (1.0 - q * q) / (1.0 + q * q); }

    double sigma_x2() const { return gamma_bar / (1.0 + q * q); }
    double sigma_y2() const { return q * q * gamma_bar / (1.0 + q * q); }
};

/// Mean of the conditional exponential at angle theta in [0, pi]:
/// gamma_bar * (1 - eccentricity * cos theta). Ranges over
/// [gamma_bar (1 - eps), gamma_bar (1 + eps)]; zero only at q = 0, theta = 0.
inline double conditioned_mean(double theta, const HoytChannel& channel) {
    if (!(theta >= 0.0) || !(theta <= std::numbers::pi))
        throw std::domain_error("conditioned_mean: theta must lie in [0, pi]");
    return channel.gamma_bar * (1.0 - channel.eccentricity() * std::cos(theta));
}

} // namespace hoytlab
