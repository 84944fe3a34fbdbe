// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>

#include "hoytlab/fading.hpp"
#include "hoytlab/transform.hpp"

using namespace hoytlab;

TEST_CASE("hoyt_transform reproduces the mean for the identity metric") {
    for (double q : {0.0, 0.2, 0.5, 0.8, 1.0}) {
        const HoytChannel ch(3.5, q);
        CHECK(hoyt_transform([](double g) { return g; }, ch) == Approx(3.5).epsilon(1e-12));
    }
}

TEST_CASE("hoyt_transform of a constant is the constant") {
    const HoytChannel ch(1.0, 0.3);
    CHECK(hoyt_transform([](double) { return 2.75; }, ch) == Approx(2.75).epsilon(1e-14));
}

TEST_CASE("hoyt_transform of the exponential MGF metric equals the closed form") {
    const HoytChannel ch(2.0, 0.4);
    const double got = hoyt_transform([](double g) { return 1.0 / (1.0 + g); }, ch);
    CHECK(got == Approx(squared_hoyt_mgf(-1.0, ch, MgfForm::closed)).epsilon(1e-10));
}

TEST_CASE("hoyt_transform is linear") {
    const HoytChannel ch(3.0, 0.45);
    auto m1 = [](double g) { return 1.0 / (1.0 + g); };
    auto m2 = [](double g) { return std::exp(-g); };
    const double combined =
        hoyt_transform([&](double g) { return 2.0 * m1(g) - 3.0 * m2(g); }, ch);
    CHECK(combined == Approx(2.0 * hoyt_transform(m1, ch) - 3.0 * hoyt_transform(m2, ch))
                          .margin(1e-10));
}

TEST_CASE("hoyt_transform short-circuits at q = 1") {
    const HoytChannel ray(4.0, 1.0);
    auto metric = [](double g) { return std::log1p(g); };
    CHECK(hoyt_transform(metric, ray) == metric(4.0)); // bitwise: no quadrature at q=1
    const HoytChannel near(4.0, 1.0 - 1e-12);
    CHECK(hoyt_transform(metric, near) == Approx(metric(4.0)).epsilon(1e-9));
}

TEST_CASE("declared-shape bounds bracket the transform") {
    struct Shaped {
        const char* name;
        RayleighMetric metric;
    };
    const Shaped metrics[] = {
        {"reciprocal", {[](double g) { return 1.0 / (1.0 + g); }, MetricShape::decreasing_convex}},
        {"exp-decay", {[](double g) { return std::exp(-g); }, MetricShape::decreasing_convex}},
        {"squared-reciprocal",
         {[](double g) { return 1.0 / ((1.0 + g) * (1.0 + g)); }, MetricShape::decreasing_convex}},
        {"saturating", {[](double g) { return g / (1.0 + g); }, MetricShape::increasing_concave}},
        {"log-capacity",
         {[](double g) { return std::log1p(g); }, MetricShape::increasing_concave}},
        {"sqrt", {[](double g) { return std::sqrt(g); }, MetricShape::increasing_concave}},
    };
    for (double q : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double gbar : {0.1, 1.0, 10.0, 100.0}) {
            const HoytChannel ch(gbar, q);
            for (const auto& [name, metric] : metrics) {
                const MetricBounds b = hoyt_transform_bounds(metric, ch);
                const double v = hoyt_transform(metric, ch);
                INFO(name << " at q=" << q << " gbar=" << gbar);
                CHECK(b.lower <= v + 1e-12);
                CHECK(v <= b.upper + 1e-12);
            }
        }
    }
}

TEST_CASE("bounds collapse at q = 1 and use the 2q^2/(1+q^2) scaling") {
    const RayleighMetric metric{[](double g) { return 1.0 / (1.0 + g); },
                                MetricShape::decreasing_convex};
    const MetricBounds at_one = hoyt_transform_bounds(metric, HoytChannel(5.0, 1.0));
    CHECK(at_one.lower == Approx(at_one.upper).epsilon(1e-15));
    // Scaling factor at q = 0.5 is 2(0.25)/1.25 = 0.4.
    const MetricBounds b = hoyt_transform_bounds(metric, HoytChannel(10.0, 0.5));
    CHECK(b.upper == Approx(1.0 / (1.0 + 4.0)).epsilon(1e-15));
    CHECK(b.lower == Approx(1.0 / (1.0 + 10.0)).epsilon(1e-15));
}

TEST_CASE("increasing-concave spec example brackets the transform") {
    // e^{-1/g} is increasing and concave on the support reached at these
    // parameters (all conditional means exceed 1/2).
    const HoytChannel ch(10.0, 0.5);
    const RayleighMetric metric{[](double g) { return std::exp(-1.0 / g); },
                                MetricShape::increasing_concave};
    const double v = hoyt_transform(metric, ch);
    CHECK(v >= std::exp(-1.0 / 4.0));
    CHECK(v <= std::exp(-1.0 / 10.0));
}

TEST_CASE("bounds reject undeclared shapes and empty evaluators") {
    const HoytChannel ch(1.0, 0.5);
    CHECK_THROWS_AS(hoyt_transform_bounds({[](double g) { return g; }, MetricShape::unknown}, ch),
                    std::invalid_argument);
    CHECK_THROWS_AS(hoyt_transform_bounds(RayleighMetric{}, ch), std::invalid_argument);
    CHECK_THROWS_AS(hoyt_transform(RayleighMetric{}, ch), std::invalid_argument);
}

TEST_CASE("refinement converges and further doubling stays within tolerance") {
    const HoytChannel ch(1.0, 0.2);
    const QuadratureSpec spec{64, 4096, 1e-10};
    auto integrand = [&](double g) { return std::exp(-2.0 / g) * (g > 0.0 ? 1.0 : 0.0); };
    const double accepted = hoyt_transform(integrand, ch, spec);
    // Re-evaluate at a fixed high order: the accepted value must already be
    // within the requested tolerance of the saturated result.
    const double eps = ch.eccentricity();
    const double saturated =
        gauss_legendre_integrate(
            [&](double th) { return integrand(1.0 * (1.0 - eps * std::cos(th))); }, 0.0,
            std::numbers::pi, 8192) /
        std::numbers::pi;
    CHECK(accepted == Approx(saturated).epsilon(1e-9));
}

TEST_CASE("non-convergence raises convergence_error with payload") {
    const HoytChannel ch(1.0, 0.2);
    const QuadratureSpec tight{32, 64, 1e-14};
    auto wild = [](double g) { return std::cos(4000.0 * g); };
    try {
        hoyt_transform(wild, ch, tight);
        FAIL("expected convergence_error");
    } catch (const convergence_error& e) {
        CHECK(std::isfinite(e.last_estimate()));
        CHECK(e.error_bound() > 0.0);
    }
}

TEST_CASE("metric evaluation failures propagate") {
    const HoytChannel ch(1.0, 0.5);
    auto throwing = [](double) -> double { throw std::runtime_error("metric failed"); };
    CHECK_THROWS_WITH(hoyt_transform(throwing, ch), "metric failed");
}

TEST_CASE("quadrature spec validation") {
    CHECK_THROWS_AS(QuadratureSpec({0, 64, 1e-10}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureSpec({128, 64, 1e-10}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureSpec({64, 128, 0.0}).validate(), std::invalid_argument);
    CHECK_NOTHROW(QuadratureSpec{}.validate());
}
