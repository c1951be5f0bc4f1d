#pragma once

#include <cstdint>
#include <iosfwd>
#include <shared_mutex>
#include <vector>

#include "primeconst/rational.hpp"

namespace primeconst {

enum class PrimalityVerdict {
    Composite,
    // Proven prime: trial division, or the strong-pseudoprime base set that
    // is deterministic below 3.3e24.
    Prime,
    // Passed a Baillie-style combined test above the deterministic range.
    ProbablePrime,
};

const char* to_string(PrimalityVerdict v);

// Verdict for arbitrary big integers; x <= 1 is Composite.  Prime is only
// returned when the method used is deterministic for |x|.
PrimalityVerdict is_prime(const BigInt& x);

// Smallest prime strictly greater than x (x >= 0).
BigInt next_prime_after(const BigInt& x);

// Largest prime strictly less than x; throws std::domain_error for x <= 2.
BigInt prev_prime_before(const BigInt& x);

// Indexed source of primes, p_1 = 2.  Materializes lazily with a growable
// segmented sieve (limit doubles when an index runs past the end).
// Concurrent reads are safe; extension is serialized internally.
class PrimeTable {
public:
    PrimeTable() = default;

    // p_n, 1-based.  Throws std::invalid_argument for n == 0.
    std::uint64_t nth_prime(std::uint64_t n) const;

    // Count of primes materialized so far.
    std::uint64_t limit_index() const;

    // prod_{i=n}^{m} p_i; the empty product (n == m + 1) is 1.
    // Throws std::invalid_argument when n > m + 1 or n == 0.
    BigInt primorial(std::uint64_t n, std::uint64_t m) const;

    // Indices 2 <= n <= k violating p_n + 1 < p_{n+1} < 2 p_n.  Index 1 is
    // excluded: the strict form needs odd primes (p_1 + 1 = p_2).
    std::vector<std::uint64_t> bertrand_check(std::uint64_t k) const;

    // Cache format: "limit=<sieved-to>" header, then one decimal prime per
    // line.  load_cache rejects malformed input and leaves the table as-is.
    bool load_cache(std::istream& in);
    void save_cache(std::ostream& out) const;

private:
    void ensure_count(std::uint64_t n) const;
    void grow_locked() const;

    mutable std::shared_mutex mutex_;
    mutable std::vector<std::uint64_t> primes_;
    mutable std::uint64_t sieved_to_ = 0;
};

namespace detail {

// Primality building blocks, exposed for oracle-based testing.
bool miller_rabin_strong(const BigInt& n, const BigInt& base);
int jacobi(BigInt a, BigInt n);
bool is_perfect_square(const BigInt& n);
bool strong_lucas_selfridge(const BigInt& n);

}  // namespace detail

}  // namespace primeconst
