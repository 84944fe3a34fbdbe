// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <type_traits>
#include <variant>
#include <vector>

#include "hoytlab/fading.hpp"
#include "hoytlab/hoyt_channel.hpp"
#include "hoytlab/metrics.hpp"

namespace hoytlab::mc {

// ---------------------------------------------------------------------------
// Counter-based random numbers
// ---------------------------------------------------------------------------

/// Philox4x32-10 keyed counter permutation. Counter-based generation makes
/// substreams trivially independent: every (seed, stream) pair owns a
/// disjoint counter range, so estimates are reproducible bit-for-bit no
/// matter how sampling is chunked.
struct Philox4x32 {
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }
};

/// One substream of doubles: key is the user seed, the stream id and a
/// running 64-bit counter fill the Philox counter block. The normal variate
/// uses the Marsaglia polar transform with the spare value cached, so a
/// stream is stateful but fully determined by (seed, stream).
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_{static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

    /// Uniform on (0, 1]; never returns 0, so logs are safe.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via the polar method (no trig, pairs cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    /// Gamma(shape, scale) via Marsaglia-Tsang squeeze; shape < 1 is boosted
    /// through the Gamma(shape + 1) * U^{1/shape} identity.
    double gamma(double shape, double scale) {
        if (!(shape > 0.0) || !(scale > 0.0))
            throw std::domain_error("RandomStream::gamma: shape and scale must be positive");
        if (shape < 1.0)
            return gamma(shape + 1.0, scale) * std::pow(uniform01(), 1.0 / shape);
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / (3.0 * std::sqrt(d));
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform01();
            if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
        }
    }

    /// Poisson by cdf inversion; adequate for the moderate means used here.
    std::uint64_t poisson(double mean) {
        if (!(mean >= 0.0)) throw std::domain_error("RandomStream::poisson: mean must be >= 0");
        if (mean == 0.0) return 0;
        double p = std::exp(-mean);
        double cdf = p;
        const double u = uniform01();
        std::uint64_t k = 0;
        while (u > cdf && k < 100000) {
            ++k;
            p *= mean / k;
            cdf += p;
        }
        return k;
    }

  private:
    std::uint64_t next_u64() {
        if (buf_pos_ >= 2) {
            const std::array<std::uint32_t, 4> out = Philox4x32::block(
                {static_cast<std::uint32_t>(ctr_), static_cast<std::uint32_t>(ctr_ >> 32),
                 stream_[0], stream_[1]},
                key_);
            ++ctr_;
            words_ = out;
            buf_pos_ = 0;
        }
        const std::uint64_t hi = words_[2 * buf_pos_];
        const std::uint64_t lo = words_[2 * buf_pos_ + 1];
        ++buf_pos_;
        return (hi << 32) | lo;
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> stream_;
    std::uint64_t ctr_ = 0;
    std::array<std::uint32_t, 4> words_{};
    int buf_pos_ = 2;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// ---------------------------------------------------------------------------
// Model samplers
// ---------------------------------------------------------------------------

/// One squared-Hoyt power draw from the Gaussian construction.
inline double sample_squared_hoyt_once(const HoytChannel& channel, RandomStream& rs) {
    const double x = std::sqrt(channel.sigma_x2()) * rs.normal();
    const double y = channel.q > 0.0 ? std::sqrt(channel.sigma_y2()) * rs.normal() : 0.0;
    return x * x + y * y;
}

/// eta-mu power as the sum of two independent gamma variates with shape mu;
/// the two scales carry the (h -/+ H) pole split, so the construction works
/// for any positive mu, not only half-integers.
inline double sample_eta_mu_once(const EtaMuModel& model, RandomStream& rs) {
    const double h = model.h();
    const double big_h = model.big_h();
    const double g1 = rs.gamma(model.mu, model.gamma_bar / (2.0 * model.mu * (h - big_h)));
    const double g2 = rs.gamma(model.mu, model.gamma_bar / (2.0 * model.mu * (h + big_h)));
    return g1 + g2;
}

/// kappa-mu power as a Poisson(mu kappa) mixture of gamma variates, the
/// noncentral-chi-square generalization valid for non-integer mu.
inline double sample_kappa_mu_once(const KappaMuModel& model, RandomStream& rs) {
    const std::uint64_t p = rs.poisson(model.mu * model.kappa);
    return rs.gamma(model.mu + static_cast<double>(p),
                    model.gamma_bar / (model.mu * (1.0 + model.kappa)));
}

inline double sample_interferer_once(const InterfererModel& model, RandomStream& rs) {
    return std::visit(
        [&rs](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, EtaMuModel>) return sample_eta_mu_once(m, rs);
            else return sample_kappa_mu_once(m, rs);
        },
        model);
}

namespace detail {

// Samples are produced in fixed-size blocks, one substream per block, and
// reduced in block order. Chunking this way keeps results identical whether
// or not blocks are ever distributed across workers.
inline constexpr std::uint64_t kSamplesPerBlock = 1u << 16;

template <typename PerSample>
void run_blocks(std::uint64_t n, std::uint64_t seed, PerSample&& per_sample) {
    std::uint64_t done = 0;
    std::uint64_t block = 0;
    while (done < n) {
        RandomStream rs(seed, block);
        const std::uint64_t m = std::min(kSamplesPerBlock, n - done);
        for (std::uint64_t i = 0; i < m; ++i) per_sample(rs);
        done += m;
        ++block;
    }
}

struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t n = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++n;
    }
};

} // namespace detail

/// A Monte Carlo point estimate. Reproducible: identical (seed, n, model
/// parameters) give bitwise-identical results.
struct McEstimate {
    double value;
    double std_error;
    std::uint64_t n_samples;
    std::uint64_t seed;

    /// |value - reference| measured in standard errors.
    double sigmas_from(double reference) const {
        return std_error > 0.0 ? std::abs(value - reference) / std_error
                               : (value == reference ? 0.0 : std::numeric_limits<double>::infinity());
    }
};

namespace detail {

inline McEstimate finish(const Accumulator& acc, std::uint64_t seed) {
    const double n = static_cast<double>(acc.n);
    const double mean = acc.sum / n;
    const double var = std::max(0.0, (acc.sum_sq - n * mean * mean) / (n - 1.0));
    return {mean, std::sqrt(var / n), acc.n, seed};
}

inline void require_samples(std::uint64_t n) {
    if (n < 1000)
        throw std::invalid_argument("mc: need at least 1000 samples for a usable estimate");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Sample streams (small-n convenience) and metric estimators
// ---------------------------------------------------------------------------

inline std::vector<double> sample_squared_hoyt(std::uint64_t n, const HoytChannel& channel,
                                               std::uint64_t seed) {
    std::vector<double> out;
    out.reserve(n);
    detail::run_blocks(n, seed,
                       [&](RandomStream& rs) { out.push_back(sample_squared_hoyt_once(channel, rs)); });
    return out;
}

inline std::vector<double> sample_eta_mu(std::uint64_t n, const EtaMuModel& model,
                                         std::uint64_t seed) {
    std::vector<double> out;
    out.reserve(n);
    detail::run_blocks(n, seed,
                       [&](RandomStream& rs) { out.push_back(sample_eta_mu_once(model, rs)); });
    return out;
}

inline std::vector<double> sample_kappa_mu(std::uint64_t n, const KappaMuModel& model,
                                           std::uint64_t seed) {
    std::vector<double> out;
    out.reserve(n);
    detail::run_blocks(n, seed,
                       [&](RandomStream& rs) { out.push_back(sample_kappa_mu_once(model, rs)); });
    return out;
}

/// Empirical P(SNR < gamma_o) on the desired link.
inline McEstimate estimate_outage(const HoytChannel& channel, double gamma_o, std::uint64_t n,
                                  std::uint64_t seed) {
    detail::require_samples(n);
    if (!(gamma_o > 0.0)) throw std::domain_error("estimate_outage: gamma_o must be positive");
    detail::Accumulator acc;
    detail::run_blocks(n, seed, [&](RandomStream& rs) {
        acc.add(sample_squared_hoyt_once(channel, rs) < gamma_o ? 1.0 : 0.0);
    });
    return detail::finish(acc, seed);
}

/// Empirical E[log2(1 + SNR)].
inline McEstimate estimate_capacity_ora(const HoytChannel& channel, std::uint64_t n,
                                        std::uint64_t seed) {
    detail::require_samples(n);
    detail::Accumulator acc;
    detail::run_blocks(n, seed, [&](RandomStream& rs) {
        acc.add(std::numbers::log2e * std::log1p(sample_squared_hoyt_once(channel, rs)));
    });
    return detail::finish(acc, seed);
}

/// Empirical P(C_S < R_S); Bob's and Eve's links drawn independently from
/// the same substream, interleaved.
inline McEstimate estimate_secrecy_outage(const SecrecyScenario& scenario, std::uint64_t n,
                                          std::uint64_t seed) {
    detail::require_samples(n);
    const double rs_nats = scenario.rate_threshold * std::numbers::ln2;
    detail::Accumulator acc;
    detail::run_blocks(n, seed, [&](RandomStream& rng) {
        const double gb = sample_squared_hoyt_once(scenario.bob, rng);
        const double ge = sample_squared_hoyt_once(scenario.eve, rng);
        const double cs_nats = std::log1p(gb) - std::log1p(ge);
        acc.add(cs_nats < rs_nats ? 1.0 : 0.0);
    });
    return detail::finish(acc, seed);
}

/// Empirical P(C_S > 0) = P(SNR_bob > SNR_eve).
inline McEstimate estimate_prob_positive_secrecy(const SecrecyScenario& scenario, std::uint64_t n,
                                                 std::uint64_t seed) {
    detail::require_samples(n);
    detail::Accumulator acc;
    detail::run_blocks(n, seed, [&](RandomStream& rng) {
        const double gb = sample_squared_hoyt_once(scenario.bob, rng);
        const double ge = sample_squared_hoyt_once(scenario.eve, rng);
        acc.add(gb > ge ? 1.0 : 0.0);
    });
    return detail::finish(acc, seed);
}

/// Empirical P(X < gamma_o (Y + 1)) (or P(X < gamma_o Y) when noise is
/// neglected) with every interferer drawn from its declared model. Requires
/// all interference components to be sampleable.
inline McEstimate estimate_outage_with_interference(const OutageScenario& scenario,
                                                    std::uint64_t n, std::uint64_t seed) {
    detail::require_samples(n);
    const std::vector<InterfererModel> models = scenario.interference.models();
    const double gamma_o = scenario.threshold;
    const double noise = scenario.include_noise ? 1.0 : 0.0;
    detail::Accumulator acc;
    detail::run_blocks(n, seed, [&](RandomStream& rng) {
        const double x = sample_squared_hoyt_once(scenario.desired, rng);
        double y = 0.0;
        for (const InterfererModel& m : models) y += sample_interferer_once(m, rng);
        acc.add(x < gamma_o * (y + noise) ? 1.0 : 0.0);
    });
    return detail::finish(acc, seed);
}

} // namespace hoytlab::mc
