#pragma once

#include <string>
#include <string_view>

#include "primeconst/rational.hpp"

namespace primeconst {

// A decimal literal "I.F" with exactly digits_certified fractional digits.
// For truncation rendering, parsing text back gives a rational t with
// t <= value < t + 10^-digits_certified.
struct DecimalString {
    std::string text;
    unsigned digits_certified = 0;
};

enum class RenderMode {
    // floor(q * 10^d) / 10^d; printed digits are a prefix of the expansion.
    Truncate,
    // floor(q * 10^d + 1/2) / 10^d; reproduces tables typeset with rounding.
    RoundHalfUp,
};

// Renders q >= 0 with exactly d fractional digits (no decimal point when
// d == 0).  Throws std::domain_error on negative input.
DecimalString decimal_truncate(const BigRational& q, unsigned d);
DecimalString decimal_render(const BigRational& q, unsigned d, RenderMode mode);

// "I.F" or "I" back to the exact rational it denotes.
BigRational parse_decimal(std::string_view text);

}  // namespace primeconst
