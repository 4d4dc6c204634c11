#pragma once

// Closed-form guessing for integer sequences: the smallest rational
// function P(t)/Q(t) with integer coefficients and Q(0) = 1 whose expansion
// reproduces every supplied term.

#include <optional>
#include <string>
#include <vector>

#include "skl/cyclotomic.hpp"

namespace skl {

struct RationalSeries {
    std::vector<Int> numerator;    // lowest degree first
    std::vector<Int> denominator;  // lowest degree first, constant term 1
    bool operator==(const RationalSeries&) const = default;
};

// Searches deg P + deg Q ascending, then deg Q ascending. A candidate must
// be determined by strictly more equations than unknowns. Needs at least 6
// terms; returns nullopt when no small fit exists.
std::optional<RationalSeries> guess_rational_series(const std::vector<Int>& coeffs);

// First n terms of the expansion of P/Q.
std::vector<Int> expand_series(const RationalSeries& s, std::size_t n);

// "(1 + 2t + 2t^2)/(1 - t - t^2)"; a unit numerator prints as "1".
std::string to_string(const RationalSeries& s);

}  // namespace skl
