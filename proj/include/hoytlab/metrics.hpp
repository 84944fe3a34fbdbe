// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hoytlab/exp_integral.hpp"
#include "hoytlab/fading.hpp"
#include "hoytlab/hoyt_channel.hpp"
#include "hoytlab/transform.hpp"

namespace hoytlab {

// ---------------------------------------------------------------------------
// Ergodic (ORA) capacity, bps/Hz at normalized bandwidth
// ---------------------------------------------------------------------------

/// Rayleigh ergodic capacity log2(e) e^{1/g} E1(1/g), evaluated through the
/// scaled kernel so it decays to 0 smoothly as g -> 0+.
inline double capacity_ora_rayleigh(double gamma_bar) {
    if (!(gamma_bar > 0.0))
        throw std::domain_error("capacity_ora_rayleigh: gamma_bar must be positive");
    return std::numbers::log2e * exp_integral_e1_scaled(1.0 / gamma_bar);
}

/// Hoyt ergodic capacity: the angular average of the Rayleigh closed form.
inline double capacity_ora_hoyt(const HoytChannel& channel, const QuadratureSpec& spec = {}) {
    return hoyt_transform(
        [](double g) { return g > 0.0 ? capacity_ora_rayleigh(g) : 0.0; }, channel, spec);
}

/// Closed-form lower bound: the Rayleigh capacity at the scaled-down SNR
/// 2 q^2 gamma_bar / (1 + q^2). Tight as q -> 1; diverges (and throws) at q = 0.
inline double capacity_lower_bound(const HoytChannel& channel) {
    if (channel.q == 0.0)
        throw std::domain_error("capacity_lower_bound: undefined at q = 0");
    const double q2 = channel.q * channel.q;
    return capacity_ora_rayleigh(2.0 * q2 / (1.0 + q2) * channel.gamma_bar);
}

/// High-SNR capacity offset relative to AWGN, in bps/Hz:
/// log2(e) gamma_e + log2(e) ln(2 (1 + q^2)/(1 + q)^2). Decreases from
/// ~1.8327 at q = 0 (one-sided Gaussian) to ~0.8327 at q = 1 (Rayleigh).
inline double capacity_loss_mu(double q) {
    if (!(q >= 0.0) || !(q <= 1.0))
        throw std::domain_error("capacity_loss_mu: q must lie in [0, 1]");
    return std::numbers::log2e * std::numbers::egamma +
           std::numbers::log2e * std::log(2.0 * (1.0 + q * q) / ((1.0 + q) * (1.0 + q)));
}

/// log2(e) ln(gamma_bar) - capacity_loss_mu(q); asymptotically exact for
/// large gamma_bar (slowest convergence at q = 0).
inline double capacity_high_snr_asymptote(const HoytChannel& channel) {
    return std::numbers::log2e * std::log(channel.gamma_bar) - capacity_loss_mu(channel.q);
}

/// log2(e) gamma_bar, independent of q.
inline double capacity_low_snr_asymptote(const HoytChannel& channel) {
    return std::numbers::log2e * channel.gamma_bar;
}

// ---------------------------------------------------------------------------
// Physical-layer secrecy
// ---------------------------------------------------------------------------

/// Wiretap setup: legitimate (Bob) and eavesdropper (Eve) links, both Hoyt,
/// and the rate threshold below which an outage of the secrecy capacity is
/// declared (bits per channel use, bandwidth normalized to 1).
struct SecrecyScenario {
    HoytChannel bob;
    HoytChannel eve;
    double rate_threshold;

    SecrecyScenario(const HoytChannel& bob_, const HoytChannel& eve_, double rate_threshold_)
        : bob(bob_), eve(eve_), rate_threshold(rate_threshold_) {
        if (!(rate_threshold >= 0.0))
            throw std::domain_error("SecrecyScenario: rate_threshold must be nonnegative");
    }
};

enum class SecrecyForm { single_integral, double_integral };

namespace detail {

// Rayleigh/Rayleigh secrecy survival P(C_S >= R_S) for mean SNRs gb, ge.
inline double secrecy_survival_rayleigh(double gb, double ge, double t) {
    if (!(gb > 0.0)) return 0.0;
    return std::exp(-(t - 1.0) / gb) * gb / (gb + t * ge);
}

// Eve's angular integral in closed form: averaging gb/(gb + t*ge(theta))
// over theta yields the 1/sqrt(1 - (...)^2) enhancement factor.
inline double secrecy_survival_eve_averaged(double gb, double ge_bar, double eps_e, double t) {
    if (!(gb > 0.0)) return 0.0;
    const double denom = gb + t * ge_bar;
    const double ratio = eps_e * t * ge_bar / denom;
    return std::exp(-(t - 1.0) / gb) * (gb / denom) / std::sqrt((1.0 - ratio) * (1.0 + ratio));
}

} // namespace detail

/// P(C_S < R_S) for the wiretap scenario. The single-integral form resolves
/// Eve's angle analytically and is the default; the double form keeps both
/// angular integrals and serves as a cross-check (O(N^2) evaluations).
/// q_b = q_e = 1 collapses to the Rayleigh closed form exactly.
inline double secrecy_outage(const SecrecyScenario& scenario, const QuadratureSpec& spec = {},
                             SecrecyForm form = SecrecyForm::single_integral) {
    const double t = std::exp2(scenario.rate_threshold);
    const double ge_bar = scenario.eve.gamma_bar;
    double survival = 0.0;
    switch (form) {
        case SecrecyForm::single_integral: {
            const double eps_e = scenario.eve.eccentricity();
            survival = hoyt_transform(
                [&](double gb) {
                    return detail::secrecy_survival_eve_averaged(gb, ge_bar, eps_e, t);
                },
                scenario.bob, spec);
            break;
        }
        case SecrecyForm::double_integral: {
            survival = hoyt_transform(
                [&](double gb) {
                    return hoyt_transform(
                        [&](double ge) { return detail::secrecy_survival_rayleigh(gb, ge, t); },
                        scenario.eve, spec);
                },
                scenario.bob, spec);
            break;
        }
    }
    return std::clamp(1.0 - survival, 0.0, 1.0);
}

/// P(C_S > 0): the complement of the secrecy outage at zero rate threshold.
/// Ignores scenario.rate_threshold.
inline double prob_positive_secrecy(const SecrecyScenario& scenario,
                                    const QuadratureSpec& spec = {}) {
    const SecrecyScenario zero{scenario.bob, scenario.eve, 0.0};
    return std::clamp(1.0 - secrecy_outage(zero, spec), 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Outage probability
// ---------------------------------------------------------------------------

enum class OutageForm { transform, marcum_difference, marcum_single };

/// Noise-limited outage probability P(SNR < gamma_o); the cdf of the
/// squared-Hoyt SNR at the threshold.
inline double outage_probability(const HoytChannel& channel, double gamma_o,
                                 const QuadratureSpec& spec = {},
                                 OutageForm form = OutageForm::transform) {
    if (!(gamma_o > 0.0))
        throw std::domain_error("outage_probability: gamma_o must be positive");
    switch (form) {
        case OutageForm::transform:
            return squared_hoyt_cdf(gamma_o, channel, CdfForm::transform, spec);
        case OutageForm::marcum_difference:
            return squared_hoyt_cdf(gamma_o, channel, CdfForm::marcum_difference, spec);
        case OutageForm::marcum_single:
            return squared_hoyt_cdf(gamma_o, channel, CdfForm::marcum_single, spec);
    }
    throw std::invalid_argument("outage_probability: unknown form");
}

/// Exponential-cdf bracket for the noise-limited outage probability. Valid
/// in the bulk regime (thresholds not far into the upper tail, where the
/// survival function is concave in the mean SNR); collapses at q = 1.
inline MetricBounds outage_probability_bounds(const HoytChannel& channel, double gamma_o) {
    if (!(gamma_o > 0.0))
        throw std::domain_error("outage_probability_bounds: gamma_o must be positive");
    const double lower = 1.0 - std::exp(-gamma_o / channel.gamma_bar);
    const double q2 = channel.q * channel.q;
    const double upper =
        channel.q > 0.0 ? 1.0 - std::exp(-(1.0 + q2) * gamma_o / (2.0 * q2 * channel.gamma_bar))
                        : 1.0;
    return {lower, upper};
}

/// Desired Hoyt link observed against co-channel interference. The threshold
/// gamma_o compares the SNR of the desired link with gamma_o (Y + 1) when
/// noise is included, or gamma_o Y in the interference-limited case.
struct OutageScenario {
    HoytChannel desired;
    double threshold;
    InterferenceSet interference;
    bool include_noise = true;

    OutageScenario(const HoytChannel& desired_, double threshold_, InterferenceSet interference_,
                   bool include_noise_ = true)
        : desired(desired_), threshold(threshold_), interference(std::move(interference_)),
          include_noise(include_noise_) {
        if (!(threshold > 0.0))
            throw std::domain_error("OutageScenario: threshold must be positive");
        if (!include_noise && interference.empty())
            throw std::invalid_argument(
                "OutageScenario: interference-limited case needs at least one interferer");
    }
};

/// Outage probability with arbitrarily distributed co-channel interference:
/// the angular average of e^{-gamma_o/g} phi_Y(-gamma_o/g) (the exponential
/// factor dropped when noise is neglected). An empty interference set with
/// noise reduces to outage_probability. The aggregate MGF is always evaluated
/// at negative arguments here, so its validity bound cannot be violated.
inline double outage_with_interference(const OutageScenario& scenario,
                                       const QuadratureSpec& spec = {}) {
    const double gamma_o = scenario.threshold;
    const bool noise = scenario.include_noise;
    const InterferenceSet& intf = scenario.interference;
    const double survival = hoyt_transform(
        [&](double g) {
            if (!(g > 0.0)) return 0.0;
            const double s = -gamma_o / g;
            double v = intf.empty() ? 1.0 : intf.mgf(s);
            if (noise) v *= std::exp(-gamma_o / g);
            return v;
        },
        scenario.desired, spec);
    return std::clamp(1.0 - survival, 0.0, 1.0);
}

} // namespace hoytlab
