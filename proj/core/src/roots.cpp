#include "primeconst/roots.hpp"

#include <stdexcept>

namespace primeconst {

BigInt integer_nth_root_floor(const BigInt& x, unsigned k) {
    if (x < 0) {
        throw std::domain_error("integer_nth_root_floor: negative radicand");
    }
    if (k == 0) {
        throw std::domain_error("integer_nth_root_floor: zero exponent");
    }
    if (k == 1 || x == 0 || x == 1) {
        return x;
    }

    // 2^ceil(bits/k) >= x^(1/k), so the iteration approaches the root from
    // above and the floor-division Newton step decreases monotonically.
    const unsigned bits = msb(x) + 1;
    BigInt r = BigInt(1) << ((bits + k - 1) / k);
    while (true) {
        BigInt next = ((k - 1) * r + x / pow(r, k - 1)) / k;
        if (next >= r) {
            break;
        }
        r = next;
    }
    while (pow(r, k) > x) {
        --r;
    }
    while (pow(r + 1, k) <= x) {
        ++r;
    }
    return r;
}

RootEnclosure root_enclosure(const BigInt& x, unsigned k, unsigned digits) {
    if (x < 1) {
        throw std::domain_error("root_enclosure: radicand must be >= 1");
    }
    const BigInt scale = pow10(digits);
    const BigInt scaled = x * pow(scale, k);
    const BigInt r = integer_nth_root_floor(scaled, k);

    if (pow(r, k) == scaled) {
        // x is a perfect k-th power, which never happens for the irrational
        // targets; return the adjacent pair around the exact root.
        const BigRational root = make_rational(r, scale);
        const BigRational eps = make_rational(1, scale);
        BigRational lo = root - eps;
        if (lo < 0) {
            lo = 0;
        }
        return {lo, root + eps, true};
    }
    // r < (x * 10^(dk))^(1/k) < r + 1 strictly: a scaled integer cannot be a
    // perfect k-th power unless x itself is.
    return {make_rational(r, scale), make_rational(r + 1, scale), false};
}

}  // namespace primeconst
