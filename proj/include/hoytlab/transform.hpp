// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <cmath>
#include <concepts>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "hoytlab/hoyt_channel.hpp"
#include "hoytlab/quadrature.hpp"

namespace hoytlab {

enum class MetricShape {
    decreasing_convex,
    increasing_concave,
    unknown,
};

/// A link metric already averaged over Rayleigh fading, as a function of the
/// mean SNR. The evaluator must be defined on (0, gamma_bar (1 + eps)] and,
/// for q < 1, admit the limit at gamma_bar (1 - eps) (at 0+ when q = 0).
/// Declaring the shape enables hoyt_transform_bounds.
struct RayleighMetric {
    std::function<double(double)> evaluator;
    MetricShape shape = MetricShape::unknown;
};

/// Lift a Rayleigh-averaged metric to Hoyt fading: average the metric over
/// the conditional means gamma_bar (1 - eps cos theta), theta uniform on
/// [0, pi]. Gauss-Legendre never evaluates the endpoints, so integrands that
/// vanish (or blow up) only at gamma = 0 remain safe at q = 0. q = 1
/// short-circuits to metric(gamma_bar) exactly.
template <typename F>
    requires std::invocable<F&, double>
double hoyt_transform(F&& metric, const HoytChannel& channel, const QuadratureSpec& spec = {}) {
    if (channel.q == 1.0) return metric(channel.gamma_bar);
    const double eps = channel.eccentricity();
    const double gbar = channel.gamma_bar;
    return integrate([&](double th) { return metric(gbar * (1.0 - eps * std::cos(th))); }, 0.0,
                     std::numbers::pi, spec) /
           std::numbers::pi;
}

inline double hoyt_transform(const RayleighMetric& metric, const HoytChannel& channel,
                             const QuadratureSpec& spec = {}) {
    if (!metric.evaluator) throw std::invalid_argument("hoyt_transform: empty metric evaluator");
    return hoyt_transform(metric.evaluator, channel, spec);
}

struct MetricBounds {
    double lower;
    double upper;
};

/// Bracket the transform without integrating: a declared decreasing-convex
/// metric lies between its value at gamma_bar and at the scaled-down SNR
/// 2 q^2 gamma_bar / (1 + q^2); increasing-concave reverses the bracket.
/// Both bounds collapse onto the metric value as q -> 1.
inline MetricBounds hoyt_transform_bounds(const RayleighMetric& metric,
                                          const HoytChannel& channel) {
    if (!metric.evaluator)
        throw std::invalid_argument("hoyt_transform_bounds: empty metric evaluator");
    const double scaled =
        2.0 * channel.q * channel.q / (1.0 + channel.q * channel.q) * channel.gamma_bar;
    switch (metric.shape) {
        case MetricShape::decreasing_convex:
            return {metric.evaluator(channel.gamma_bar), metric.evaluator(scaled)};
        case MetricShape::increasing_concave:
            return {metric.evaluator(scaled), metric.evaluator(channel.gamma_bar)};
        case MetricShape::unknown: break;
    }
    throw std::invalid_argument(
        "hoyt_transform_bounds: metric shape must be decreasing_convex or increasing_concave");
}

} // namespace hoytlab
