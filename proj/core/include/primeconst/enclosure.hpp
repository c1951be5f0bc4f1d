#pragma once

#include <optional>

#include "primeconst/rational.hpp"

namespace primeconst {

// Open rational interval (lo, hi) proven to contain an irrational target
// strictly.  Endpoints are exact; nothing is ever widened or renormalized,
// so widths follow the arithmetic exactly.
class Enclosure {
public:
    // Throws std::invalid_argument unless lo < hi.
    Enclosure(BigRational lo, BigRational hi);

    const BigRational& lo() const { return lo_; }
    const BigRational& hi() const { return hi_; }
    BigRational width() const { return hi_ - lo_; }

private:
    BigRational lo_;
    BigRational hi_;
};

// The unique c with c - 1 <= lo and hi <= c, so ceil(v) = c for every v in
// (lo, hi).  Empty when the interval straddles an integer: that signals
// insufficient precision, never a wrong answer.
std::optional<BigInt> certified_ceiling(const Enclosure& e);

// The unique c with c <= lo and hi <= c + 1, so floor(v) = c on (lo, hi).
std::optional<BigInt> certified_floor(const Enclosure& e);

// (scale * lo + offset, scale * hi + offset); width scales by exactly
// `scale`.  Requires scale >= 1 to preserve orientation.
Enclosure map_affine(const Enclosure& e, const BigInt& scale, const BigRational& offset);

// (lo1 - hi2, hi1 - lo2): contains v1 - v2 for any v1 in e1, v2 in e2.
Enclosure subtract(const Enclosure& e1, const Enclosure& e2);

}  // namespace primeconst
