// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hoytlab/bessel.hpp"
#include "hoytlab/marcum_q.hpp"
#include "hoytlab/quadrature.hpp"

namespace hoytlab {

/// The five interchangeable evaluation routes for the Rice Ie-function.
/// All agree to better than 1e-8 relative on 0 <= k < 1; the angular
/// exponential form is the default because its integrand is bounded by 1 and
/// smooth in the angle, which keeps the node count low for every k.
enum class IeRepresentation {
    definition_integral, // integral_0^x e^{-t} I0(kt) dt
    marcum_difference,   // difference of two Marcum Q evaluations
    marcum_single,       // one Marcum Q plus a Bessel correction term
    angular_rational,    // angular integral with a 1/(1 - k cos) weight
    angular_exponential, // angular integral of a pure exponential (default)
};

/// Large-x limit of Ie(k, .): 1/sqrt(1 - k^2).
inline double rice_ie_limit(double k) {
    if (!(k >= 0.0) || k >= 1.0)
        throw std::domain_error("rice_ie: k must lie in [0, 1)");
    return 1.0 / std::sqrt((1.0 - k) * (1.0 + k));
}

namespace detail {

inline double rice_ie_definition(double k, double x, const QuadratureSpec& spec) {
    if (x == 0.0) return 0.0;
    // e^{-t} I0(kt) = e^{-t(1-k)} * [e^{-kt} I0(kt)], stable for any t.
    return integrate(
        [k](double t) { return std::exp(-t * (1.0 - k)) * bessel_i0_scaled(k * t); }, 0.0, x,
        spec);
}

inline double rice_ie_marcum(double k, double x, bool single) {
    const double s = std::sqrt((1.0 - k) * (1.0 + k));
    const double hi = 1.0 + s;
    const double lo = 1.0 - s;
    const double q_hi_lo = marcum_q1(std::sqrt(hi * x), std::sqrt(lo * x));
    if (single) {
        const double bess = std::exp(-x * (1.0 - k)) * bessel_i0_scaled(k * x);
        return (2.0 * q_hi_lo - bess - 1.0) / s;
    }
    const double q_lo_hi = marcum_q1(std::sqrt(lo * x), std::sqrt(hi * x));
    return (q_hi_lo - q_lo_hi) / s;
}

inline double rice_ie_angular_rational(double k, double x, const QuadratureSpec& spec) {
    const double s = std::sqrt((1.0 - k) * (1.0 + k));
    const double integral = integrate(
        [k, x](double th) {
            const double w = 1.0 - k * std::cos(th);
            return std::exp(-x * w) / w;
        },
        0.0, std::numbers::pi, spec);
    return 1.0 / s - integral / std::numbers::pi;
}

inline double rice_ie_angular_exponential(double k, double x, const QuadratureSpec& spec) {
    const double s2 = (1.0 - k) * (1.0 + k);
    const double integral = integrate(
        [k, x, s2](double th) { return std::exp(-x * s2 / (1.0 - k * std::cos(th))); }, 0.0,
        std::numbers::pi, spec);
    return (1.0 - integral / std::numbers::pi) / std::sqrt(s2);
}

} // namespace detail

/// Rice Ie-function Ie(k, x) = integral_0^x e^{-t} I0(kt) dt for k in [0, 1),
/// x >= 0. Nondecreasing in x, bounded above by rice_ie_limit(k).
inline double rice_ie(double k, double x,
                      IeRepresentation rep = IeRepresentation::angular_exponential,
                      const QuadratureSpec& spec = {}) {
    if (!(k >= 0.0) || k >= 1.0)
        throw std::domain_error("rice_ie: k must lie in [0, 1)");
    if (!(x >= 0.0)) throw std::domain_error("rice_ie: x must be nonnegative");
    if (x == 0.0) return 0.0;
    switch (rep) {
        case IeRepresentation::definition_integral: return detail::rice_ie_definition(k, x, spec);
        case IeRepresentation::marcum_difference: return detail::rice_ie_marcum(k, x, false);
        case IeRepresentation::marcum_single: return detail::rice_ie_marcum(k, x, true);
        case IeRepresentation::angular_rational:
            return detail::rice_ie_angular_rational(k, x, spec);
        case IeRepresentation::angular_exponential:
            return detail::rice_ie_angular_exponential(k, x, spec);
    }
    throw std::invalid_argument("rice_ie: unknown representation");
}

} // namespace hoytlab
