// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#define CATCH_CONFIG_MAIN
#include <catch2/catch.hpp>
