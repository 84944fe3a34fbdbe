// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hoytlab/errors.hpp"

namespace hoytlab {

/// Controls every finite-range integral in the library: start at
/// `initial_nodes` Gauss-Legendre points and double until two successive
/// estimates agree to `rel_tol`, giving a cheap a-posteriori error bound.
struct QuadratureSpec {
    int initial_nodes = 64;
    int max_nodes = 4096;
    double rel_tol = 1e-10;

    void validate() const {
        if (initial_nodes < 1 || max_nodes < initial_nodes)
            throw std::invalid_argument("QuadratureSpec: need 1 <= initial_nodes <= max_nodes");
        if (!(rel_tol > 0.0))
            throw std::invalid_argument("QuadratureSpec: rel_tol must be positive");
    }
};

struct GaussLegendreRule {
    std::vector<double> nodes;   // on (-1, 1), endpoints never included
    std::vector<double> weights;
};

namespace detail {

// Newton iteration on the Legendre recurrence ("gauleg"). Nodes are symmetric,
// so only half are solved for.
inline GaussLegendreRule make_gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (x * p1 - p2) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

} // namespace detail

/// Cached Gauss-Legendre rule of order n. Entries are immutable once built,
/// so the returned reference stays valid for the lifetime of the process.
inline const GaussLegendreRule& gauss_legendre(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussLegendreRule>(detail::make_gauss_legendre(n));
    return *slot;
}

/// Fixed-order Gauss-Legendre estimate of the integral of f over [a, b].
/// Summation order is fixed, so results are deterministic.
template <typename F>
double gauss_legendre_integrate(F&& f, double a, double b, int n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

/// Integrate f over [a, b] with node-doubling refinement. Throws
/// convergence_error (carrying the last estimate) when max_nodes is reached
/// before two successive levels agree.
template <typename F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    spec.validate();
    int n = spec.initial_nodes;
    double prev = gauss_legendre_integrate(f, a, b, n);
    double diff = std::numeric_limits<double>::infinity();
    while (n < spec.max_nodes) {
        n *= 2;
        const double cur = gauss_legendre_integrate(f, a, b, n);
        diff = std::abs(cur - prev);
        if (diff <= spec.rel_tol * std::abs(cur) || diff <= 1e-15) return cur;
        prev = cur;
    }
    throw convergence_error("integrate: no convergence at " + std::to_string(spec.max_nodes) +
                                " nodes (last refinement step " + std::to_string(diff) + ")",
                            prev, diff);
}

} // namespace hoytlab
