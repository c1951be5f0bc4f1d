#pragma once

#include <cstdint>

#include "primeconst/rational.hpp"

namespace primeconst {

// Largest r with r^k <= x.  Newton iteration on integers with a
// bit-length-based initial guess and a final +/-1 correction, so the
// postcondition r^k <= x < (r+1)^k holds exactly.
// Preconditions: x >= 0, k >= 1.
BigInt integer_nth_root_floor(const BigInt& x, unsigned k);

struct RootEnclosure {
    BigRational lo;
    BigRational hi;
    // x was a perfect k-th power; lo/hi are the adjacent pair around the
    // exact root instead of a strict bracket.
    bool exact = false;
};

// Rational bracket lo < x^(1/k) < hi with both bounds on the 10^-digits
// grid.  Width is 10^-digits exactly, except in the perfect-power case
// where the adjacent pair (root - 10^-d, root + 10^-d), clipped at 0, is
// returned with exact = true.
// Preconditions: x >= 1, k >= 1.
RootEnclosure root_enclosure(const BigInt& x, unsigned k, unsigned digits);

}  // namespace primeconst
