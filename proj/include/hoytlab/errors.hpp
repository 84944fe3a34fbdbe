// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <stdexcept>
#include <string>

namespace hoytlab {

// Closed forms that contain 1/q (Bessel pdf, Marcum and Ie cdf forms, the
// capacity lower bound) reject q = 0; the angular-integral routes stay valid.
class degenerate_parameter_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Node-doubling refinement ran out of nodes. Carries the last estimate and
// the difference between the last two refinement levels.
class convergence_error : public std::runtime_error {
  public:
    convergence_error(const std::string& what, double last_estimate, double error_bound)
        : std::runtime_error(what), last_estimate_(last_estimate), error_bound_(error_bound) {}

    double last_estimate() const noexcept { return last_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

  private:
    double last_estimate_;
    double error_bound_;
};

} // namespace hoytlab
