// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hoytlab/fading.hpp"
#include "hoytlab/mc.hpp"
#include "hoytlab/metrics.hpp"
#include "hoytlab/rice_ie.hpp"
#include "hoytlab/transform.hpp"

namespace hoytlab::selftest {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail; // on failure: the violated invariant and parameters
};

namespace detail {

class Checker {
  public:
    explicit Checker(std::string name) : result_{std::move(name), true, ""} {}

    void require(bool ok, const std::string& what) {
        if (ok || !result_.passed) return;
        result_.passed = false;
        result_.detail = what;
    }

    void require_close(double got, double want, double tol, const std::string& where) {
        const double err = std::abs(got - want);
        if (err <= tol) return;
        std::ostringstream os;
        os << where << ": |" << got << " - " << want << "| = " << err << " > " << tol;
        require(false, os.str());
    }

    void require_rel(double got, double want, double rel_tol, const std::string& where,
                     double abs_floor = 0.0) {
        const double err = std::abs(got - want);
        if (err <= rel_tol * std::abs(want) || err <= abs_floor) return;
        std::ostringstream os;
        os << where << ": relative error " << err / std::abs(want) << " > " << rel_tol;
        require(false, os.str());
    }

    CheckResult result() const { return result_; }

  private:
    CheckResult result_;
};

inline const std::vector<double>& ie_k_grid() {
    static const std::vector<double> g{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
    return g;
}

inline const std::vector<double>& ie_x_grid() {
    static const std::vector<double> g{0.01, 0.1, 1.0, 10.0, 100.0};
    return g;
}

} // namespace detail

/// All five Ie evaluation routes agree pairwise to 1e-8 relative
/// (1e-12 absolute near zero) over the standard (k, x) grid.
inline CheckResult check_ie_representations() {
    detail::Checker c("ie-representation-consistency");
    const IeRepresentation reps[] = {
        IeRepresentation::definition_integral, IeRepresentation::marcum_difference,
        IeRepresentation::marcum_single, IeRepresentation::angular_rational,
        IeRepresentation::angular_exponential};
    for (double k : detail::ie_k_grid()) {
        for (double x : detail::ie_x_grid()) {
            double vals[5];
            for (int i = 0; i < 5; ++i) vals[i] = rice_ie(k, x, reps[i]);
            for (int i = 0; i < 5; ++i) {
                for (int j = i + 1; j < 5; ++j) {
                    std::ostringstream os;
                    os << "Ie rep " << i << " vs " << j << " at k=" << k << " x=" << x;
                    c.require_rel(vals[i], vals[j], 1e-8, os.str(), 1e-12);
                }
            }
        }
    }
    return c.result();
}

/// Ie(k, 1e3) reaches its 1/sqrt(1-k^2) limit to 1e-6 relative for k <= 0.9.
inline CheckResult check_ie_limit() {
    detail::Checker c("ie-large-x-limit");
    for (double k : detail::ie_k_grid()) {
        if (k > 0.9) continue;
        c.require_rel(rice_ie(k, 1e3), rice_ie_limit(k), 1e-6,
                      "Ie(k,1e3) vs limit at k=" + std::to_string(k));
    }
    return c.result();
}

/// The scaled and unscaled Bessel kernels describe the same function.
inline CheckResult check_i0_scaling() {
    detail::Checker c("i0-scaled-consistency");
    for (double z : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 14.9, 15.1, 30.0, 100.0, 500.0, 700.0}) {
        c.require_rel(std::exp(z) * bessel_i0_scaled(z), bessel_i0(z), 1e-12,
                      "e^z i0e(z) vs i0(z) at z=" + std::to_string(z));
    }
    return c.result();
}

/// Angular-integral MGF equals the closed form to 1e-8 relative over the
/// (q, gamma_bar, s) acceptance grid.
inline CheckResult check_mgf_identity(const QuadratureSpec& spec = {}) {
    detail::Checker c("mgf-closed-vs-integral");
    for (double q : {0.05, 0.1, 0.3, 0.5, 0.8, 1.0}) {
        for (double gbar : {0.5, 1.0, 10.0}) {
            const HoytChannel ch(gbar, q);
            for (double s : {-10.0, -1.0, -0.1, 0.0}) {
                std::ostringstream os;
                os << "MGF at q=" << q << " gbar=" << gbar << " s=" << s;
                c.require_rel(squared_hoyt_mgf(s, ch, MgfForm::integral, spec),
                              squared_hoyt_mgf(s, ch, MgfForm::closed), 1e-8, os.str());
            }
        }
    }
    return c.result();
}

/// Transform, Marcum-difference and Marcum-single cdf routes agree to 1e-7.
inline CheckResult check_cdf_forms(const QuadratureSpec& spec = {}) {
    detail::Checker c("cdf-route-consistency");
    for (double q : {0.1, 0.3, 0.5, 0.8}) {
        const HoytChannel ch(1.0, q);
        for (double x : {0.01, 0.1, 1.0, 5.0}) {
            const double ref = squared_hoyt_cdf(x, ch, CdfForm::transform, spec);
            for (CdfForm form :
                 {CdfForm::ie, CdfForm::marcum_difference, CdfForm::marcum_single}) {
                std::ostringstream os;
                os << "cdf form " << static_cast<int>(form) << " at q=" << q << " x=" << x;
                c.require_close(squared_hoyt_cdf(x, ch, form, spec), ref, 1e-7, os.str());
            }
        }
    }
    return c.result();
}

/// phi(0) = 1 and phi'(0) = gamma_bar (by central difference) for the
/// squared-Hoyt, eta-mu and kappa-mu MGFs.
inline CheckResult check_mgf_moments() {
    detail::Checker c("mgf-moments");
    for (double q : {0.0, 0.4, 1.0}) {
        const HoytChannel ch(3.0, q);
        c.require_close(squared_hoyt_mgf(0.0, ch), 1.0, 1e-14, "phi(0), q=" + std::to_string(q));
        const double h = 1e-6 / ch.gamma_bar;
        const double deriv =
            (squared_hoyt_mgf(h, ch) - squared_hoyt_mgf(-h, ch)) / (2.0 * h);
        c.require_rel(deriv, ch.gamma_bar, 1e-6, "phi'(0), q=" + std::to_string(q));
    }
    const EtaMuModel em(2, 0.3, 1.7, 2.5);
    c.require_close(eta_mu_mgf(0.0, em), 1.0, 1e-14, "eta-mu phi(0)");
    const KappaMuModel km(2.0, 1.5, 1.0);
    c.require_close(kappa_mu_mgf(0.0, km), 1.0, 1e-14, "kappa-mu phi(0)");
    return c.result();
}

/// Capacity-loss endpoints and the asymptote accuracy at high SNR.
inline CheckResult check_capacity_asymptotes(const QuadratureSpec& spec = {}) {
    detail::Checker c("capacity-asymptotes");
    c.require_close(capacity_loss_mu(0.0), 1.8327, 5e-4, "capacity loss at q=0");
    c.require_close(capacity_loss_mu(1.0), 0.8327, 5e-4, "capacity loss at q=1");
    for (double q : {0.3, 0.5, 1.0}) {
        const HoytChannel ch(1e4, q); // 40 dB
        c.require_close(capacity_ora_hoyt(ch, spec), capacity_high_snr_asymptote(ch), 0.01,
                        "high-SNR asymptote at q=" + std::to_string(q));
    }
    {
        // q = 0 converges more slowly; checked at 60 dB with a wider band.
        const HoytChannel ch(1e6, 0.0);
        QuadratureSpec wide = spec;
        wide.rel_tol = std::max(spec.rel_tol, 1e-9);
        c.require_close(capacity_ora_hoyt(ch, wide), capacity_high_snr_asymptote(ch), 0.05,
                        "high-SNR asymptote at q=0");
    }
    return c.result();
}

/// Capacity and outage brackets hold across the (q, gamma_bar) grid, with
/// equality at q = 1 to 1e-9.
inline CheckResult check_bound_sandwiches(const QuadratureSpec& spec = {}) {
    detail::Checker c("bound-sandwiches");
    const double q_grid[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    const double g_grid[] = {0.1, 1.0, 10.0, 100.0};
    // One declared metric per bracket direction, both globally shaped.
    const RayleighMetric convex{[](double g) { return 1.0 / (1.0 + g); },
                                MetricShape::decreasing_convex};
    const RayleighMetric concave{[](double g) { return g / (1.0 + g); },
                                 MetricShape::increasing_concave};
    for (double q : q_grid) {
        for (double gbar : g_grid) {
            const HoytChannel ch(gbar, q);
            std::ostringstream at;
            at << " at q=" << q << " gbar=" << gbar;
            const double cap = capacity_ora_hoyt(ch, spec);
            c.require(capacity_lower_bound(ch) <= cap + 1e-12, "capacity lower bound" + at.str());
            c.require(cap <= capacity_ora_rayleigh(gbar) + 1e-12,
                      "capacity upper bound" + at.str());
            const double gamma_o = 0.5 * gbar;
            const double op = outage_probability(ch, gamma_o, spec);
            const MetricBounds ob = outage_probability_bounds(ch, gamma_o);
            c.require(ob.lower <= op + 1e-12 && op <= ob.upper + 1e-12,
                      "outage bracket" + at.str());
            for (const RayleighMetric* m : {&convex, &concave}) {
                const MetricBounds mb = hoyt_transform_bounds(*m, ch);
                const double v = hoyt_transform(*m, ch, spec);
                c.require(mb.lower <= v + 1e-12 && v <= mb.upper + 1e-12,
                          "declared-shape bracket" + at.str());
            }
        }
    }
    for (double gbar : g_grid) {
        const HoytChannel ray(gbar, 1.0);
        c.require_close(capacity_lower_bound(ray), capacity_ora_hoyt(ray, spec), 1e-9,
                        "capacity bracket collapse at q=1");
        const MetricBounds ob = outage_probability_bounds(ray, 0.5 * gbar);
        c.require_close(ob.lower, ob.upper, 1e-9, "outage bracket collapse at q=1");
        c.require_close(outage_probability(ray, 0.5 * gbar, spec), ob.lower, 1e-9,
                        "outage equals bracket at q=1");
        const MetricBounds cb = hoyt_transform_bounds(convex, ray);
        c.require_close(cb.lower, cb.upper, 1e-9, "declared-shape collapse at q=1");
        c.require_close(hoyt_transform(convex, ray, spec), cb.lower, 1e-9,
                        "transform equals bracket at q=1");
    }
    return c.result();
}

/// Closed-form secrecy reductions, single vs double integral agreement, and
/// the eavesdropper-severity ratio at 5 dB.
inline CheckResult check_secrecy(const QuadratureSpec& spec = {}) {
    detail::Checker c("secrecy-consistency");
    const double gb = 10.0, ge = 31.6227766016838, rs = 0.1;
    {
        // Rayleigh/Rayleigh closed form.
        const SecrecyScenario sc({gb, 1.0}, {ge, 1.0}, rs);
        const double t = std::exp2(rs);
        const double closed = 1.0 - gb / (gb + t * ge) * std::exp(-(t - 1.0) / gb);
        c.require_close(secrecy_outage(sc, spec), closed, 1e-9, "Rayleigh/Rayleigh reduction");
        const SecrecyScenario eq({10.0, 1.0}, {10.0, 1.0}, 0.0);
        c.require_close(prob_positive_secrecy(eq, spec), 0.5, 1e-12, "symmetric P(C_S>0)");
    }
    {
        // q_b = 1: Eve's angle resolves in closed form.
        const double qe = 0.4;
        const SecrecyScenario sc({gb, 1.0}, {ge, qe}, rs);
        const double t = std::exp2(rs);
        const double eps_e = (1.0 - qe * qe) / (1.0 + qe * qe);
        const double ratio = eps_e * t * ge / (gb + t * ge);
        const double closed = 1.0 - gb / (gb + t * ge) * std::exp(-(t - 1.0) / gb) /
                                        std::sqrt(1.0 - ratio * ratio);
        c.require_close(secrecy_outage(sc, spec), closed, 1e-9, "q_b=1 closed form");
    }
    for (double qb : {0.3, 0.7, 1.0}) {
        for (double qe : {0.3, 0.7, 1.0}) {
            for (double r : {0.1, 1.0}) {
                const SecrecyScenario sc({gb, qb}, {ge, qe}, r);
                std::ostringstream os;
                os << "single vs double at qb=" << qb << " qe=" << qe << " rs=" << r;
                c.require_close(secrecy_outage(sc, spec, SecrecyForm::single_integral),
                                secrecy_outage(sc, spec, SecrecyForm::double_integral), 1e-7,
                                os.str());
            }
        }
    }
    {
        const double gb5 = std::pow(10.0, 0.5);
        const SecrecyScenario a({gb5, 1.0}, {ge, 0.1}, 0.0);
        const SecrecyScenario b({gb5, 1.0}, {ge, 0.5}, 0.0);
        const double ratio = prob_positive_secrecy(a, spec) / prob_positive_secrecy(b, spec);
        c.require(ratio >= 1.8 && ratio <= 2.2,
                  "P(C_S>0) severity ratio " + std::to_string(ratio) + " outside [1.8, 2.2]");
    }
    return c.result();
}

/// Rayleigh reductions of every Hoyt metric at q = 1 (machine precision via
/// the short-circuit) plus transform linearity.
inline CheckResult check_rayleigh_reductions(const QuadratureSpec& spec = {}) {
    detail::Checker c("rayleigh-reductions");
    const double gbar = 7.0;
    const HoytChannel ray(gbar, 1.0);
    c.require(capacity_ora_hoyt(ray, spec) == capacity_ora_rayleigh(gbar),
              "capacity short-circuit at q=1");
    c.require(outage_probability(ray, 1.0, spec) == 1.0 - std::exp(-1.0 / gbar),
              "outage short-circuit at q=1");
    c.require_close(squared_hoyt_mgf(-1.0, ray, MgfForm::closed), 1.0 / (1.0 + gbar), 1e-14,
                    "MGF Rayleigh closed form");
    const HoytChannel near(gbar, 1.0 - 1e-12);
    c.require_close(capacity_ora_hoyt(near, spec), capacity_ora_rayleigh(gbar), 1e-9,
                    "quadrature path at q=1-1e-12");
    {
        const HoytChannel ch(3.0, 0.45);
        auto m1 = [](double g) { return 1.0 / (1.0 + g); };
        auto m2 = [](double g) { return std::exp(-g); };
        const double combined =
            hoyt_transform([&](double g) { return 2.0 * m1(g) - 3.0 * m2(g); }, ch, spec);
        const double split =
            2.0 * hoyt_transform(m1, ch, spec) - 3.0 * hoyt_transform(m2, ch, spec);
        c.require_close(combined, split, 1e-10, "transform linearity");
    }
    return c.result();
}

/// Analytic cross-checks only; runs in a few seconds.
inline std::vector<CheckResult> run_fast_checks(const QuadratureSpec& spec = {}) {
    return {
        check_i0_scaling(),
        check_ie_representations(),
        check_ie_limit(),
        check_mgf_identity(spec),
        check_cdf_forms(spec),
        check_mgf_moments(),
        check_capacity_asymptotes(spec),
        check_bound_sandwiches(spec),
        check_secrecy(spec),
        check_rayleigh_reductions(spec),
    };
}

/// Monte Carlo agreement suite: every analytic metric against its empirical
/// estimate at |analytic - MC| <= 3 standard errors, fixed seeds throughout.
inline std::vector<CheckResult> run_mc_checks(std::uint64_t n = 10'000'000,
                                              std::uint64_t seed = 20240901,
                                              const QuadratureSpec& spec = {}) {
    std::vector<CheckResult> out;
    auto pair_check = [&](const std::string& name, double analytic, const mc::McEstimate& est) {
        detail::Checker c(name);
        const double sig = est.sigmas_from(analytic);
        std::ostringstream os;
        os << "analytic " << analytic << " vs MC " << est.value << " +/- " << est.std_error
           << " (" << sig << " SE)";
        c.require(sig <= 3.0, os.str());
        out.push_back(c.result());
    };

    for (double q : {0.3, 1.0}) {
        const HoytChannel ch(10.0, q);
        std::ostringstream name;
        name << "mc-outage-q" << q;
        pair_check(name.str(), outage_probability(ch, 1.0, spec),
                   mc::estimate_outage(ch, 1.0, n, seed));
    }
    {
        const HoytChannel ch(10.0, 0.5);
        pair_check("mc-capacity", capacity_ora_hoyt(ch, spec),
                   mc::estimate_capacity_ora(ch, n, seed + 1));
    }
    {
        const SecrecyScenario sc({10.0, 0.5}, {10.0, 0.3}, 0.1);
        pair_check("mc-secrecy-outage", secrecy_outage(sc, spec),
                   mc::estimate_secrecy_outage(sc, n, seed + 2));
        pair_check("mc-prob-positive-secrecy", prob_positive_secrecy(sc, spec),
                   mc::estimate_prob_positive_secrecy(sc, n, seed + 3));
    }
    {
        // Interference-plus-noise cases: INR 5 dB, threshold 0 dB, SINR 0 dB.
        const double inr = std::pow(10.0, 0.5);
        const HoytChannel desired(1.0 * (1.0 + inr), 0.5);
        InterferenceSet eta;
        eta.add(EtaMuModel(2, 0.04, 0.5, inr));
        const OutageScenario sa(desired, 1.0, std::move(eta), true);
        pair_check("mc-op-eta-mu-interference", outage_with_interference(sa, spec),
                   mc::estimate_outage_with_interference(sa, n, seed + 4));
        InterferenceSet kappa;
        kappa.add(KappaMuModel(2.0, 1.5, inr));
        const OutageScenario sb(desired, 1.0, std::move(kappa), true);
        pair_check("mc-op-kappa-mu-interference", outage_with_interference(sb, spec),
                   mc::estimate_outage_with_interference(sb, n, seed + 5));
    }
    return out;
}

/// Fast checks plus the Monte Carlo agreement suite.
inline std::vector<CheckResult> run_full_checks(std::uint64_t n = 10'000'000,
                                                std::uint64_t seed = 20240901,
                                                const QuadratureSpec& spec = {}) {
    std::vector<CheckResult> out = run_fast_checks(spec);
    std::vector<CheckResult> mc_part = run_mc_checks(n, seed, spec);
    out.insert(out.end(), mc_part.begin(), mc_part.end());
    return out;
}

} // namespace hoytlab::selftest
