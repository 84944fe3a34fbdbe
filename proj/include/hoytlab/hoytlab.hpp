// SPDX-License-Identifier: Apache-2.0
//
// hoytlab: wireless-link performance metrics under Hoyt (Nakagami-q) fading.
//
// The squared-Hoyt SNR is a mixture of exponentials whose means sweep
// gamma_bar (1 - eps cos theta) as theta runs uniformly over [0, pi]. Any
// metric known in closed form for Rayleigh fading therefore lifts to Hoyt
// fading through one finite-range angular integral (hoyt_transform), with
// closed-form brackets from the endpoint and Jensen directions. The library
// builds ergodic capacity, secrecy outage and interference-limited outage on
// top of that operator, with Marcum/Bessel closed forms as independent
// cross-checks and a deterministic Monte Carlo oracle.

#pragma once

#include "hoytlab/bessel.hpp"
#include "hoytlab/csv.hpp"
#include "hoytlab/errors.hpp"
#include "hoytlab/exp_integral.hpp"
#include "hoytlab/fading.hpp"
#include "hoytlab/hoyt_channel.hpp"
#include "hoytlab/marcum_q.hpp"
#include "hoytlab/mc.hpp"
#include "hoytlab/metrics.hpp"
#include "hoytlab/quadrature.hpp"
#include "hoytlab/rice_ie.hpp"
#include "hoytlab/selftest.hpp"
#include "hoytlab/transform.hpp"
