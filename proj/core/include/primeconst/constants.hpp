#pragma once

#include <cstdint>
#include <vector>

#include "primeconst/decimal.hpp"
#include "primeconst/enclosure.hpp"
#include "primeconst/primes.hpp"

namespace primeconst {

// The two prime-representing families.  Ceiling sums terms (p_k - 2) and
// its constants h_n satisfy p_n - 1 < h_n < p_n with ceil(h_n) = p_n; Floor
// sums (p_k - 1) and its constants f_n satisfy p_n < f_n < p_n + 1 with
// floor(f_n) = p_n.
enum class Family {
    Ceiling,
    Floor,
};

// The term offset t: 2 for the ceiling family, 1 for the floor family.
int family_offset(Family family);

const char* to_string(Family family);

// A family constant anchored at a start index n >= 1.
struct ConstantSpec {
    Family family = Family::Ceiling;
    std::uint64_t index = 1;
};

struct TraceStep {
    std::uint64_t index;    // index whose prime was certified
    BigInt prime;           // the certified floor/ceiling
    Enclosure after;        // enclosure of the next index's constant
    BigRational width;      // width of `after`
};

// Record of a forward generation run.  Certified primes are strictly
// increasing and widths grow by exactly the certified prime each step.
struct RecursionTrace {
    enum class Terminal {
        Completed,
        PrecisionExhausted,
    };

    std::vector<TraceStep> steps;
    Terminal terminal = Terminal::Completed;
    std::uint64_t exhausted_at = 0;  // meaningful when PrecisionExhausted

    std::vector<BigInt> primes() const;
};

// Exact partial sum through k = n + terms plus the tail bracket
// (p_{n+terms+1} + 1 - t, p_{n+terms+1} + 2 - t) / primorial(n, n+terms),
// which is the Theorem-1 bound on the constant at index n+terms+1.  The
// result strictly contains the constant and has width exactly
// 1 / primorial(n, n+terms).
Enclosure series_enclosure(const PrimeTable& table, const ConstantSpec& spec,
                           std::uint64_t terms);

// Starts from the seed (p_N + 1 - t, p_N + 2 - t) at seed_index = N and
// applies the inverse recursion v -> v/p + (p - t) down to spec.index.
// Produces rational endpoints identical to
// series_enclosure(spec, N - n - 1).  Requires seed_index > spec.index.
Enclosure backward_refine(const PrimeTable& table, const ConstantSpec& spec,
                          std::uint64_t seed_index);

// Iterates certified rounding + the affine step e -> c(e - c + t) until
// `count` primes are certified or the enclosure straddles an integer
// (PrecisionExhausted terminal, never a wrong prime).  `start` must
// strictly contain the family constant at spec.index.
RecursionTrace forward_generate(const ConstantSpec& spec, const Enclosure& start,
                                std::uint64_t count);

// Enclosure of d_n = f_n - h_n; lies in (1, (1 - 1/p_n)^-1).
Enclosure difference_dn(const PrimeTable& table, std::uint64_t n, std::uint64_t terms);

// Smallest m >= 0 with primorial(n, n+m) > 10^digits, i.e. series width
// below 10^-digits.
std::uint64_t required_terms(const PrimeTable& table, const ConstantSpec& spec,
                             std::uint64_t digits);

// Enclosure of the constant with width exactly 10^-digits, anchored at the
// lower endpoint of a backward refinement of at least that precision.
Enclosure seed_enclosure(const PrimeTable& table, const ConstantSpec& spec,
                         std::uint64_t digits);

// Renders d certified fractional digits: refines until both endpoints agree
// on the rendered prefix (2 guard digits first, then +5 per retry).
DecimalString constant_digits(const PrimeTable& table, const ConstantSpec& spec,
                              unsigned digits,
                              RenderMode mode = RenderMode::Truncate);

}  // namespace primeconst
