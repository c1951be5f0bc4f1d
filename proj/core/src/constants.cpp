#include "primeconst/constants.hpp"

#include <stdexcept>

namespace primeconst {

int family_offset(Family family) {
    return family == Family::Ceiling ? 2 : 1;
}

const char* to_string(Family family) {
    return family == Family::Ceiling ? "ceiling" : "floor";
}

std::vector<BigInt> RecursionTrace::primes() const {
    std::vector<BigInt> result;
    result.reserve(steps.size());
    for (const TraceStep& step : steps) {
        result.push_back(step.prime);
    }
    return result;
}

Enclosure series_enclosure(const PrimeTable& table, const ConstantSpec& spec,
                           std::uint64_t terms) {
    if (spec.index == 0) {
        throw std::invalid_argument("series_enclosure: index must be >= 1");
    }
    const int t = family_offset(spec.family);
    const std::uint64_t n = spec.index;

    // Partial sum over the common denominator primorial(n, k-1), built by
    // the recurrence num <- num * p_{k-1} + (p_k - t).
    BigInt num = BigInt(table.nth_prime(n)) - t;
    BigInt den = 1;
    for (std::uint64_t k = n + 1; k <= n + terms; ++k) {
        const BigInt p = table.nth_prime(k - 1);
        num = num * p + (BigInt(table.nth_prime(k)) - t);
        den *= p;
    }

    const BigInt p_last = table.nth_prime(n + terms);
    const BigInt p_next = table.nth_prime(n + terms + 1);
    const BigInt scaled_sum = num * p_last;
    const BigInt primorial = den * p_last;
    return Enclosure(make_rational(scaled_sum + (p_next + 1 - t), primorial),
                     make_rational(scaled_sum + (p_next + 2 - t), primorial));
}

Enclosure backward_refine(const PrimeTable& table, const ConstantSpec& spec,
                          std::uint64_t seed_index) {
    if (seed_index <= spec.index) {
        throw std::invalid_argument("backward_refine: seed index must exceed start index");
    }
    const int t = family_offset(spec.family);
    const BigInt p_seed = table.nth_prime(seed_index);
    BigRational lo(p_seed + 1 - t);
    BigRational hi(p_seed + 2 - t);
    for (std::uint64_t k = seed_index; k > spec.index; --k) {
        const BigInt p = table.nth_prime(k - 1);
        lo = lo / p + (p - t);
        hi = hi / p + (p - t);
    }
    return Enclosure(lo, hi);
}

RecursionTrace forward_generate(const ConstantSpec& spec, const Enclosure& start,
                                std::uint64_t count) {
    const int t = family_offset(spec.family);
    RecursionTrace trace;
    Enclosure current = start;
    std::uint64_t index = spec.index;

    for (std::uint64_t emitted = 0; emitted < count; ++emitted) {
        const std::optional<BigInt> certified = spec.family == Family::Ceiling
                                                    ? certified_ceiling(current)
                                                    : certified_floor(current);
        if (!certified) {
            trace.terminal = RecursionTrace::Terminal::PrecisionExhausted;
            trace.exhausted_at = index;
            return trace;
        }
        const BigInt& c = *certified;
        // One recursion step is the affine image e -> c(e - c + t).
        Enclosure next = map_affine(current, c, BigRational(c * (t - c)));
        trace.steps.push_back({index, c, next, next.width()});
        current = std::move(next);
        ++index;
    }
    trace.terminal = RecursionTrace::Terminal::Completed;
    return trace;
}

Enclosure difference_dn(const PrimeTable& table, std::uint64_t n, std::uint64_t terms) {
    return subtract(series_enclosure(table, {Family::Floor, n}, terms),
                    series_enclosure(table, {Family::Ceiling, n}, terms));
}

std::uint64_t required_terms(const PrimeTable& table, const ConstantSpec& spec,
                             std::uint64_t digits) {
    const BigInt bound = pow10(digits);
    BigInt primorial = table.nth_prime(spec.index);
    std::uint64_t m = 0;
    while (primorial <= bound) {
        ++m;
        primorial *= table.nth_prime(spec.index + m);
    }
    return m;
}

Enclosure seed_enclosure(const PrimeTable& table, const ConstantSpec& spec,
                         std::uint64_t digits) {
    const std::uint64_t m = required_terms(table, spec, digits);
    const Enclosure tight = backward_refine(table, spec, spec.index + m + 1);
    // tight.hi - tight.lo = 1/primorial < 10^-digits, so widening the upper
    // endpoint keeps the constant strictly inside.
    return Enclosure(tight.lo(), tight.lo() + make_rational(1, pow10(digits)));
}

DecimalString constant_digits(const PrimeTable& table, const ConstantSpec& spec,
                              unsigned digits, RenderMode mode) {
    for (std::uint64_t guard = 2;; guard += 5) {
        const std::uint64_t m = required_terms(table, spec, digits + guard);
        const Enclosure e = backward_refine(table, spec, spec.index + m + 1);
        const DecimalString lo = decimal_render(e.lo(), digits, mode);
        const DecimalString hi = decimal_render(e.hi(), digits, mode);
        if (lo.text == hi.text) {
            return lo;
        }
        if (guard > 300) {
            // Unreachable for irrational targets: a conflicting render needs
            // a grid point inside an interval that keeps shrinking.
            throw std::logic_error("constant_digits: certification did not converge");
        }
    }
}

}  // namespace primeconst
