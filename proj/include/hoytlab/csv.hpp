// SPDX-License-Identifier: Apache-2.0
// Part of hoytlab: link-performance analysis under Hoyt (Nakagami-q) fading.

#pragma once

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace hoytlab {

/// Minimal RFC-4180-style CSV emitter. Floating values are printed with 12
/// significant digits through a fixed format string, so output is
/// byte-for-byte reproducible for a given configuration.
class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void header(std::initializer_list<std::string_view> names) {
        bool first = true;
        for (std::string_view n : names) {
            if (!first) os_ << ',';
            write_text(n);
            first = false;
        }
        os_ << '\n';
        at_row_start_ = true;
    }

    CsvWriter& field(double v) {
        sep();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        os_ << buf;
        return *this;
    }

    CsvWriter& field(std::string_view v) {
        sep();
        write_text(v);
        return *this;
    }

    void end_row() {
        os_ << '\n';
        at_row_start_ = true;
    }

  private:
    void sep() {
        if (!at_row_start_) os_ << ',';
        at_row_start_ = false;
    }

    void write_text(std::string_view v) {
        const bool needs_quotes =
            v.find_first_of(",\"\n\r") != std::string_view::npos;
        if (!needs_quotes) {
            os_ << v;
            return;
        }
        os_ << '"';
        for (char ch : v) {
            if (ch == '"') os_ << '"';
            os_ << ch;
        }
        os_ << '"';
    }

    std::ostream& os_;
    bool at_row_start_ = true;
};

} // namespace hoytlab
