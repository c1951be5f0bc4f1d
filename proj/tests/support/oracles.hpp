#pragma once

// Independent brute-force oracles for the test suite.  Everything here is
// deliberately naive and shares no code with the library paths it checks.

#include <cstdint>
#include <string>
#include <vector>

#include "primeconst/rational.hpp"

namespace oracles {

// Plain sieve of Eratosthenes, all primes <= limit.
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            for (std::uint64_t j = i * i; j <= limit; j += i) {
                composite[j] = true;
            }
        }
    }
    return primes;
}

inline bool trial_division_is_prime(std::uint64_t x) {
    if (x < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            return false;
        }
    }
    return true;
}

inline std::uint64_t next_prime_by_scan(std::uint64_t x) {
    std::uint64_t c = x + 1;
    while (!trial_division_is_prime(c)) {
        ++c;
    }
    return c;
}

inline std::uint64_t prev_prime_by_scan(std::uint64_t x) {
    std::uint64_t c = x - 1;
    while (!trial_division_is_prime(c)) {
        --c;
    }
    return c;
}

// Decimal digits of num/den by schoolbook long division, d fractional
// digits, truncated.
inline std::string long_division_decimal(primeconst::BigInt num, const primeconst::BigInt& den,
                                         unsigned d) {
    std::string out = primeconst::BigInt(num / den).str();
    num %= den;
    if (d == 0) {
        return out;
    }
    out += '.';
    for (unsigned i = 0; i < d; ++i) {
        num *= 10;
        out += primeconst::BigInt(num / den).str();
        num %= den;
    }
    return out;
}

// Floor k-th root by increment-until-overshoot; only for small roots.
inline primeconst::BigInt brute_nth_root(const primeconst::BigInt& x, unsigned k) {
    primeconst::BigInt r = 0;
    while (pow(r + 1, k) <= x) {
        ++r;
    }
    return r;
}

}  // namespace oracles
