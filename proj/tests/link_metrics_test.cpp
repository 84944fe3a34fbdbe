// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>

#include "hoytlab/metrics.hpp"
#include "oracles.hpp"

using namespace hoytlab;

TEST_CASE("capacity_ora_rayleigh value, shape, asymptotes") {
    // log2(e) * e * E1(1), frozen from the quadrature oracle.
    CHECK(capacity_ora_rayleigh(1.0) == Approx(0.86034738227088595).epsilon(1e-12));
    CHECK(capacity_ora_rayleigh(10.0) > capacity_ora_rayleigh(1.0));
    // Low-SNR behaviour ~ log2(e) gamma_bar.
    CHECK(capacity_ora_rayleigh(1e-3) ==
          Approx(std::numbers::log2e * 1e-3).epsilon(0.02));
    CHECK_THROWS_AS(capacity_ora_rayleigh(0.0), std::domain_error);
    CHECK_THROWS_AS(capacity_ora_rayleigh(-2.0), std::domain_error);
}

TEST_CASE("capacity_ora_hoyt reduction, frozen value and Monte-Carlo-free oracle") {
    const HoytChannel ray(7.0, 1.0);
    CHECK(capacity_ora_hoyt(ray) == capacity_ora_rayleigh(7.0)); // exact short-circuit
    // Frozen from an independent high-precision evaluation of the angular
    // average of the Rayleigh closed form.
    CHECK(capacity_ora_hoyt(HoytChannel(10.0, 0.5)) ==
          Approx(2.8076440040544942).epsilon(1e-10));
    CHECK(capacity_ora_hoyt(HoytChannel(100.0, 0.5)) ==
          Approx(5.7443384493953556).epsilon(1e-10));
    // Average of log2(1+g) against the pdf as a cross-route check.
    const HoytChannel ch(5.0, 0.3);
    const double direct = oracle::adaptive_simpson(
        [&](long double x) {
            return std::log2(1.0L + x) *
                   static_cast<long double>(squared_hoyt_pdf(static_cast<double>(x), ch));
        },
        0.0, 60.0 * 5.0, 1e-11);
    CHECK(capacity_ora_hoyt(ch) == Approx(direct).epsilon(1e-8));
}

TEST_CASE("capacity_lower_bound identity and ordering") {
    CHECK(capacity_lower_bound(HoytChannel(3.0, 1.0)) ==
          Approx(capacity_ora_rayleigh(3.0)).epsilon(1e-15));
    // 2 q^2/(1+q^2) = 0.4 at q = 0.5.
    CHECK(capacity_lower_bound(HoytChannel(10.0, 0.5)) ==
          Approx(capacity_ora_rayleigh(4.0)).epsilon(1e-15));
    for (double q : {0.2, 0.3, 0.5, 0.7, 0.9}) {
        for (double gbar : {0.5, 5.0, 50.0}) {
            const HoytChannel ch(gbar, q);
            CHECK(capacity_lower_bound(ch) <= capacity_ora_hoyt(ch) + 1e-12);
        }
    }
    CHECK_THROWS_AS(capacity_lower_bound(HoytChannel(1.0, 0.0)), std::domain_error);
}

TEST_CASE("capacity loss constant and high-SNR asymptote") {
    CHECK(capacity_loss_mu(1.0) == Approx(0.83274617727686715).epsilon(1e-14));
    CHECK(capacity_loss_mu(0.0) == Approx(1.8327461772768672).epsilon(1e-14));
    CHECK(capacity_loss_mu(0.0) == Approx(capacity_loss_mu(1.0) + 1.0).epsilon(1e-14));
    // Monotone decreasing in q.
    double prev = capacity_loss_mu(0.0);
    for (double q = 0.1; q <= 1.0; q += 0.1) {
        const double v = capacity_loss_mu(q);
        CHECK(v < prev);
        prev = v;
    }
    for (double q : {0.3, 0.5, 1.0}) {
        const HoytChannel ch(1e4, q); // 40 dB
        CHECK(std::abs(capacity_ora_hoyt(ch) - capacity_high_snr_asymptote(ch)) < 0.01);
    }
    // Slow convergence at q = 0: checked further out with a wider band.
    const HoytChannel edge(1e6, 0.0);
    CHECK(std::abs(capacity_ora_hoyt(edge, {64, 4096, 1e-9}) -
                   capacity_high_snr_asymptote(edge)) < 0.05);
    CHECK_THROWS_AS(capacity_loss_mu(1.5), std::domain_error);
}

TEST_CASE("capacity low-SNR asymptote") {
    CHECK(capacity_low_snr_asymptote(HoytChannel(0.01, 0.4)) ==
          Approx(0.014426950408889634).epsilon(1e-14));
    CHECK(capacity_low_snr_asymptote(HoytChannel(0.5, 0.2)) ==
          capacity_low_snr_asymptote(HoytChannel(0.5, 0.9))); // independent of q
    for (double q : {0.2, 1.0}) {
        const HoytChannel ch(1e-3, q);
        CHECK(capacity_ora_hoyt(ch) / capacity_low_snr_asymptote(ch) == Approx(1.0).margin(0.02));
    }
}

TEST_CASE("capacity is nondecreasing in q at fixed mean SNR") {
    for (double gbar : {1.0, 10.0, 100.0}) {
        double prev = capacity_ora_hoyt(HoytChannel(gbar, 0.0));
        for (double q = 0.1; q <= 1.0; q += 0.1) {
            const double v = capacity_ora_hoyt(HoytChannel(gbar, q));
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("secrecy outage closed-form reductions") {
    const double gb = 10.0, ge = 31.6227766016838, rs = 0.1;
    {
        const SecrecyScenario sc({gb, 1.0}, {ge, 1.0}, rs);
        const double t = std::exp2(rs);
        const double closed = 1.0 - gb / (gb + t * ge) * std::exp(-(t - 1.0) / gb);
        CHECK(secrecy_outage(sc) == Approx(closed).epsilon(1e-12));
    }
    {
        const double qe = 0.4;
        const SecrecyScenario sc({gb, 1.0}, {ge, qe}, rs);
        const double t = std::exp2(rs);
        const double eps_e = (1.0 - qe * qe) / (1.0 + qe * qe);
        const double ratio = eps_e * t * ge / (gb + t * ge);
        const double closed = 1.0 - gb / (gb + t * ge) * std::exp(-(t - 1.0) / gb) /
                                        std::sqrt(1.0 - ratio * ratio);
        CHECK(secrecy_outage(sc) == Approx(closed).epsilon(1e-12));
    }
    // Frozen from an independent high-precision evaluation.
    CHECK(secrecy_outage(SecrecyScenario({10.0, 0.5}, {10.0, 0.3}, 0.1)) ==
          Approx(0.49124783943520587).epsilon(1e-10));
}

TEST_CASE("secrecy single- and double-integral forms agree") {
    const double gb = 10.0, ge = 31.6227766016838;
    for (double qb : {0.3, 0.7, 1.0}) {
        for (double qe : {0.3, 0.7, 1.0}) {
            for (double rs : {0.1, 1.0}) {
                const SecrecyScenario sc({gb, qb}, {ge, qe}, rs);
                INFO("qb=" << qb << " qe=" << qe << " rs=" << rs);
                CHECK(secrecy_outage(sc, {}, SecrecyForm::single_integral) ==
                      Approx(secrecy_outage(sc, {}, SecrecyForm::double_integral)).margin(1e-7));
            }
        }
    }
}

TEST_CASE("secrecy outage monotone directions") {
    const double ge = 31.6227766016838;
    double prev = 1.0;
    for (double gb_db = 0.0; gb_db <= 60.0; gb_db += 5.0) {
        const double v =
            secrecy_outage(SecrecyScenario({std::pow(10.0, gb_db / 10.0), 0.5}, {ge, 0.3}, 0.1));
        CHECK(v <= prev + 1e-12); // nonincreasing in the legitimate link's SNR
        prev = v;
    }
    // Nondecreasing in the eavesdropper's SNR and in the rate threshold.
    const SecrecyScenario base({10.0, 0.5}, {10.0, 0.3}, 0.1);
    CHECK(secrecy_outage(SecrecyScenario({10.0, 0.5}, {20.0, 0.3}, 0.1)) >=
          secrecy_outage(base) - 1e-12);
    CHECK(secrecy_outage(SecrecyScenario({10.0, 0.5}, {10.0, 0.3}, 0.5)) >=
          secrecy_outage(base) - 1e-12);
}

TEST_CASE("prob_positive_secrecy identities") {
    const SecrecyScenario sym({10.0, 1.0}, {10.0, 1.0}, 0.7);
    CHECK(prob_positive_secrecy(sym) == Approx(0.5).epsilon(1e-12)); // rate ignored
    const SecrecyScenario sc({10.0, 0.5}, {10.0, 0.3}, 0.4);
    const SecrecyScenario zero({10.0, 0.5}, {10.0, 0.3}, 0.0);
    CHECK(prob_positive_secrecy(sc) == Approx(1.0 - secrecy_outage(zero)).margin(1e-10));
    // Frozen from an independent high-precision evaluation.
    CHECK(prob_positive_secrecy(sc) == Approx(0.52742403437169783).epsilon(1e-10));
    // A more severe eavesdropper raises P(C_S > 0) roughly twofold at 5 dB.
    const double gb5 = std::pow(10.0, 0.5);
    const double ge15 = std::pow(10.0, 1.5);
    const double ratio = prob_positive_secrecy(SecrecyScenario({gb5, 1.0}, {ge15, 0.1}, 0.0)) /
                         prob_positive_secrecy(SecrecyScenario({gb5, 1.0}, {ge15, 0.5}, 0.0));
    CHECK(ratio > 1.8);
    CHECK(ratio < 2.2);
    CHECK_THROWS_AS(SecrecyScenario({1.0, 0.5}, {1.0, 0.5}, -0.1), std::domain_error);
}

TEST_CASE("outage_probability values and route agreement") {
    CHECK(outage_probability(HoytChannel(10.0, 1.0), 1.0) ==
          Approx(1.0 - std::exp(-0.1)).epsilon(1e-12));
    // One-sided Gaussian closed form: erf(sqrt(gamma_o / (2 gamma_bar))).
    CHECK(outage_probability(HoytChannel(10.0, 0.0), 1.0) ==
          Approx(std::erf(std::sqrt(0.05))).epsilon(1e-9));
    for (double q : {0.1, 0.5, 0.9}) {
        for (double go : {0.2, 1.0, 3.0}) {
            const HoytChannel ch(10.0, q);
            const double ref = outage_probability(ch, go, {}, OutageForm::transform);
            CHECK(outage_probability(ch, go, {}, OutageForm::marcum_difference) ==
                  Approx(ref).margin(1e-7));
            CHECK(outage_probability(ch, go, {}, OutageForm::marcum_single) ==
                  Approx(ref).margin(1e-7));
        }
    }
    CHECK_THROWS_AS(outage_probability(HoytChannel(1.0, 0.0), 1.0, {},
                                       OutageForm::marcum_difference),
                    degenerate_parameter_error);
    CHECK_THROWS_AS(outage_probability(HoytChannel(1.0, 0.5), 0.0), std::domain_error);
}

TEST_CASE("outage_probability brackets and monotone directions") {
    {
        const HoytChannel ch(5.0, 0.3);
        const double v = outage_probability(ch, 2.0);
        const MetricBounds b = outage_probability_bounds(ch, 2.0);
        CHECK(b.lower <= v + 1e-12);
        CHECK(v <= b.upper + 1e-12);
    }
    for (double q : {0.1, 0.4, 0.8}) {
        for (double gbar : {0.1, 1.0, 10.0, 100.0}) {
            const HoytChannel ch(gbar, q);
            const double go = 0.5 * gbar;
            const double v = outage_probability(ch, go);
            const MetricBounds b = outage_probability_bounds(ch, go);
            INFO("q=" << q << " gbar=" << gbar);
            CHECK(b.lower <= v + 1e-12);
            CHECK(v <= b.upper + 1e-12);
        }
    }
    // Nondecreasing in the threshold.
    const HoytChannel ch(10.0, 0.6);
    double prev = 0.0;
    for (double go = 0.1; go <= 5.0; go += 0.35) {
        const double v = outage_probability(ch, go);
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
    // Nonincreasing in q in the bulk regime (thresholds at or below the mean).
    for (double ratio : {0.1, 0.5, 1.0}) {
        double prev_q = 1.0;
        for (double q = 0.1; q <= 1.0; q += 0.1) {
            const double v = outage_probability(HoytChannel(10.0, q), 10.0 * ratio);
            CHECK(v <= prev_q + 1e-12);
            prev_q = v;
        }
    }
    // Bracket collapses onto the value at q = 1.
    const MetricBounds ray = outage_probability_bounds(HoytChannel(10.0, 1.0), 2.0);
    CHECK(ray.lower == Approx(ray.upper).epsilon(1e-15));
}

TEST_CASE("outage_with_interference reductions") {
    // q = 1 with one Rayleigh interferer and no noise has a one-line answer.
    const double gd = 8.0, gi = 2.0, go = 1.5;
    InterferenceSet rayleigh_like;
    rayleigh_like.add(KappaMuModel(0.0, 1.0, gi));
    const OutageScenario sc({gd, 1.0}, go, std::move(rayleigh_like), false);
    CHECK(outage_with_interference(sc) == Approx(go * gi / (gd + go * gi)).epsilon(1e-12));

    // Empty set with noise reduces to the plain outage probability.
    const OutageScenario noise_only({5.0, 0.4}, 1.0, InterferenceSet{}, true);
    CHECK(outage_with_interference(noise_only) ==
          Approx(outage_probability(HoytChannel(5.0, 0.4), 1.0)).epsilon(1e-12));

    // Dropping the noise can only lower the outage probability.
    InterferenceSet a, b;
    a.add(EtaMuModel(2, 0.04, 0.5, 3.0));
    b.add(EtaMuModel(2, 0.04, 0.5, 3.0));
    const OutageScenario with_noise({6.0, 0.5}, 1.0, std::move(a), true);
    const OutageScenario without({6.0, 0.5}, 1.0, std::move(b), false);
    CHECK(outage_with_interference(without) <= outage_with_interference(with_noise) + 1e-12);

    CHECK_THROWS_AS(OutageScenario({1.0, 0.5}, 1.0, InterferenceSet{}, false),
                    std::invalid_argument);
    CHECK_THROWS_AS(OutageScenario({1.0, 0.5}, -1.0, InterferenceSet{}, true),
                    std::domain_error);
}

TEST_CASE("outage_with_interference frozen values") {
    // INR 5 dB, threshold 0 dB, SINR 0 dB, q = 0.5; frozen from independent
    // high-precision evaluations of the angular integral.
    const double inr = std::pow(10.0, 0.5);
    const HoytChannel desired(1.0 + inr, 0.5);
    InterferenceSet eta;
    eta.add(EtaMuModel(2, 0.04, 0.5, inr));
    CHECK(outage_with_interference(OutageScenario(desired, 1.0, std::move(eta), true)) ==
          Approx(0.58290204180184546).epsilon(1e-10));
    InterferenceSet kappa;
    kappa.add(KappaMuModel(2.0, 1.5, inr));
    CHECK(outage_with_interference(OutageScenario(desired, 1.0, std::move(kappa), true)) ==
          Approx(0.62641197962180864).epsilon(1e-10));
}
