// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hoytlab/bessel.hpp"
#include "hoytlab/errors.hpp"
#include "hoytlab/hoyt_channel.hpp"
#include "hoytlab/marcum_q.hpp"
#include "hoytlab/rice_ie.hpp"
#include "hoytlab/transform.hpp"

namespace hoytlab {

enum class PdfForm { bessel, transform };
enum class CdfForm { transform, ie, marcum_difference, marcum_single };
enum class MgfForm { closed, integral };

/// Coefficients of the Marcum/Bessel closed forms of the squared-Hoyt cdf.
/// All four contain 1/q and are rejected at q = 0.
struct HoytCdfCoeffs {
    double a, b, c, d;
};

inline HoytCdfCoeffs hoyt_cdf_coeffs(double q) {
    if (!(q > 0.0))
        throw degenerate_parameter_error(
            "hoyt_cdf_coeffs: closed forms are singular at q = 0; use the transform form");
    const double root = std::sqrt(1.0 + q * q);
    return {
        (1.0 + q) / (2.0 * q) * root,
        (1.0 - q) / (2.0 * q) * root,
        (1.0 - q * q * q * q) / (4.0 * q * q),
        (1.0 + q * q) * (1.0 + q * q) / (4.0 * q * q),
    };
}

/// pdf of the squared-Hoyt SNR. Both forms agree to quadrature tolerance;
/// the Bessel form needs q > 0, the transform form covers q = 0 as well.
inline double squared_hoyt_pdf(double x, const HoytChannel& channel,
                               PdfForm form = PdfForm::bessel, const QuadratureSpec& spec = {}) {
    if (!(x >= 0.0)) throw std::domain_error("squared_hoyt_pdf: x must be nonnegative");
    const double q = channel.q;
    const double gbar = channel.gamma_bar;
    switch (form) {
        case PdfForm::bessel: {
            if (q == 0.0)
                throw degenerate_parameter_error(
                    "squared_hoyt_pdf: Bessel form is singular at q = 0; use transform form");
            // Scaled Bessel keeps this on scale: the exponent collapses to
            // (1 + q^2) x / (2 gbar) after factoring e^{-|arg|} out of I0.
            const double q2 = q * q;
            const double bess_arg = (1.0 - q2 * q2) * x / (4.0 * q2 * gbar);
            return (1.0 + q2) / (2.0 * q * gbar) * std::exp(-(1.0 + q2) * x / (2.0 * gbar)) *
                   bessel_i0_scaled(bess_arg);
        }
        case PdfForm::transform:
            return hoyt_transform(
                [x](double g) { return g > 0.0 ? std::exp(-x / g) / g : 0.0; }, channel, spec);
    }
    throw std::invalid_argument("squared_hoyt_pdf: unknown form");
}

/// cdf of the squared-Hoyt SNR; equals the outage probability at threshold x.
/// The ie and Marcum forms contain 1/q and reject q = 0.
inline double squared_hoyt_cdf(double x, const HoytChannel& channel,
                               CdfForm form = CdfForm::transform, const QuadratureSpec& spec = {},
                               IeRepresentation rep = IeRepresentation::angular_exponential) {
    if (!(x >= 0.0)) throw std::domain_error("squared_hoyt_cdf: x must be nonnegative");
    if (x == 0.0) return 0.0;
    const double q = channel.q;
    const double gbar = channel.gamma_bar;
    switch (form) {
        case CdfForm::transform: {
            const double survival = hoyt_transform(
                [x](double g) { return g > 0.0 ? std::exp(-x / g) : 0.0; }, channel, spec);
            return std::clamp(1.0 - survival, 0.0, 1.0);
        }
        case CdfForm::ie: {
            const HoytCdfCoeffs co = hoyt_cdf_coeffs(q);
            const double q2 = q * q;
            return std::clamp(
                2.0 * q / (1.0 + q2) * rice_ie(channel.eccentricity(), co.d * x / gbar, rep, spec),
                0.0, 1.0);
        }
        case CdfForm::marcum_difference: {
            const HoytCdfCoeffs co = hoyt_cdf_coeffs(q);
            const double r = std::sqrt(x / gbar);
            return std::clamp(marcum_q1(co.a * r, co.b * r) - marcum_q1(co.b * r, co.a * r), 0.0,
                              1.0);
        }
        case CdfForm::marcum_single: {
            const HoytCdfCoeffs co = hoyt_cdf_coeffs(q);
            const double r = std::sqrt(x / gbar);
            const double q2 = q * q;
            const double bess =
                std::exp(-(1.0 + q2) * x / (2.0 * gbar)) * bessel_i0_scaled(co.c * x / gbar);
            return std::clamp(2.0 * marcum_q1(co.a * r, co.b * r) - bess - 1.0, 0.0, 1.0);
        }
    }
    throw std::invalid_argument("squared_hoyt_cdf: unknown form");
}

/// Largest admissible MGF argument: phi(s) is finite for s < s_max with
/// s_max = (1 + q^2)/(2 gamma_bar), the reciprocal of the largest
/// conditional mean.
inline double squared_hoyt_mgf_bound(const HoytChannel& channel) {
    return (1.0 + channel.q * channel.q) / (2.0 * channel.gamma_bar);
}

/// MGF E[e^{s R}] of the squared-Hoyt SNR.
inline double squared_hoyt_mgf(double s, const HoytChannel& channel,
                               MgfForm form = MgfForm::closed, const QuadratureSpec& spec = {}) {
    const double s_max = squared_hoyt_mgf_bound(channel);
    if (!(s < s_max))
        throw std::domain_error("squared_hoyt_mgf: s must be below " + std::to_string(s_max));
    switch (form) {
        case MgfForm::closed: {
            const double u = 2.0 * channel.gamma_bar * s;
            const double q2 = channel.q * channel.q;
            const double disc = 1.0 - u + q2 * u * u / ((1.0 + q2) * (1.0 + q2));
            return 1.0 / std::sqrt(disc);
        }
        case MgfForm::integral:
            return hoyt_transform([s](double g) { return 1.0 / (1.0 - s * g); }, channel, spec);
    }
    throw std::invalid_argument("squared_hoyt_mgf: unknown form");
}

/// eta-mu fading power distribution (NLOS generalization). Format 1 takes
/// eta in (0, inf), format 2 takes eta in (-1, 1); both give h > |H| >= 0,
/// which keeps the MGF poles positive real.
struct EtaMuModel {
    int format;
    double eta;
    double mu;
    double gamma_bar;

    EtaMuModel(int format_, double eta_, double mu_, double gamma_bar_)
        : format(format_), eta(eta_), mu(mu_), gamma_bar(gamma_bar_) {
        if (format != 1 && format != 2)
            throw std::domain_error("EtaMuModel: format must be 1 or 2");
        if (format == 1 && !(eta > 0.0))
            throw std::domain_error("EtaMuModel: format 1 needs eta > 0");
        if (format == 2 && !(eta > -1.0 && eta < 1.0))
            throw std::domain_error("EtaMuModel: format 2 needs -1 < eta < 1");
        if (!(mu > 0.0)) throw std::domain_error("EtaMuModel: mu must be positive");
        if (!(gamma_bar > 0.0)) throw std::domain_error("EtaMuModel: gamma_bar must be positive");
    }

    double h() const {
        return format == 1 ? (2.0 + 1.0 / eta + eta) / 4.0 : 1.0 / (1.0 - eta * eta);
    }
    double big_h() const { return format == 1 ? (1.0 / eta - eta) / 4.0 : eta / (1.0 - eta * eta); }

    /// Smallest MGF pole: 2 (h - |H|) mu / gamma_bar.
    double mgf_bound() const { return 2.0 * (h() - std::abs(big_h())) * mu / gamma_bar; }
};

inline double eta_mu_mgf(double s, const EtaMuModel& model) {
    if (!(s < model.mgf_bound()))
        throw std::domain_error("eta_mu_mgf: s must be below " +
                                std::to_string(model.mgf_bound()));
    const double h = model.h();
    const double big_h = model.big_h();
    const double d1 = 2.0 * (h - big_h) * model.mu - s * model.gamma_bar;
    const double d2 = 2.0 * (h + big_h) * model.mu - s * model.gamma_bar;
    return std::pow(4.0 * model.mu * model.mu * h / (d1 * d2), model.mu);
}

/// kappa-mu fading power distribution (LOS generalization); kappa = 0,
/// mu = 1 reduces to the exponential (Rayleigh SNR) case.
struct KappaMuModel {
    double kappa;
    double mu;
    double gamma_bar;

    KappaMuModel(double kappa_, double mu_, double gamma_bar_)
        : kappa(kappa_), mu(mu_), gamma_bar(gamma_bar_) {
        if (!(kappa >= 0.0)) throw std::domain_error("KappaMuModel: kappa must be nonnegative");
        if (!(mu > 0.0)) throw std::domain_error("KappaMuModel: mu must be positive");
        if (!(gamma_bar > 0.0))
            throw std::domain_error("KappaMuModel: gamma_bar must be positive");
    }

    double mgf_bound() const { return mu * (1.0 + kappa) / gamma_bar; }
};

inline double kappa_mu_mgf(double s, const KappaMuModel& model) {
    if (!(s < model.mgf_bound()))
        throw std::domain_error("kappa_mu_mgf: s must be below " +
                                std::to_string(model.mgf_bound()));
    const double a = model.mu * (1.0 + model.kappa);
    const double den = a - s * model.gamma_bar;
    return std::pow(a / den, model.mu) * std::exp(model.mu * model.kappa * (a / den - 1.0));
}

/// One co-channel interferer expressible in closed form (and sampleable by
/// the Monte Carlo oracle).
using InterfererModel = std::variant<EtaMuModel, KappaMuModel>;

inline double interferer_mean(const InterfererModel& model) {
    return std::visit([](const auto& m) { return m.gamma_bar; }, model);
}

/// An ordered set of independent interferers composed by MGF product.
/// Arbitrary user-supplied MGFs are accepted through add_custom, which is how
/// correlated interferers with a known aggregate MGF are handled; those
/// components cannot be sampled by the Monte Carlo oracle.
class InterferenceSet {
  public:
    void add(const EtaMuModel& model) {
        components_.push_back({[model](double s) { return eta_mu_mgf(s, model); },
                               model.mgf_bound(), InterfererModel{model}});
    }
    void add(const KappaMuModel& model) {
        components_.push_back({[model](double s) { return kappa_mu_mgf(s, model); },
                               model.mgf_bound(), InterfererModel{model}});
    }
    void add_custom(std::function<double(double)> mgf, double s_max) {
        if (!mgf) throw std::invalid_argument("InterferenceSet: empty MGF");
        components_.push_back({std::move(mgf), s_max, std::nullopt});
    }

    bool empty() const { return components_.empty(); }
    std::size_t size() const { return components_.size(); }

    /// Validity bound of the aggregate MGF; +inf when the set is empty.
    double s_max() const {
        double bound = std::numeric_limits<double>::infinity();
        for (const auto& c : components_) bound = std::min(bound, c.s_max);
        return bound;
    }

    /// Aggregate MGF phi_Y(s) = prod_i phi_i(s); equals 1 on an empty set.
    double mgf(double s) const {
        if (!(s < s_max()))
            throw std::domain_error("InterferenceSet: s must be below " +
                                    std::to_string(s_max()));
        double prod = 1.0;
        for (const auto& c : components_) prod *= c.mgf(s);
        return prod;
    }

    bool all_sampleable() const {
        for (const auto& c : components_)
            if (!c.model) return false;
        return true;
    }

    /// Models of the sampleable components, in insertion order. Throws if a
    /// custom (non-sampleable) MGF is present.
    std::vector<InterfererModel> models() const {
        std::vector<InterfererModel> out;
        out.reserve(components_.size());
        for (const auto& c : components_) {
            if (!c.model)
                throw std::invalid_argument(
                    "InterferenceSet: custom MGF components cannot be sampled");
            out.push_back(*c.model);
        }
        return out;
    }

    /// Sum of the component means (total interference-to-noise ratio).
    double total_mean() const {
        double sum = 0.0;
        for (const auto& c : components_) {
            if (!c.model)
                throw std::invalid_argument(
                    "InterferenceSet: custom MGF components have no declared mean");
            sum += interferer_mean(*c.model);
        }
        return sum;
    }

  private:
    struct Component {
        std::function<double(double)> mgf;
        double s_max;
        std::optional<InterfererModel> model;
    };
    std::vector<Component> components_;
};

} // namespace hoytlab
