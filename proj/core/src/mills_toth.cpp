#include "primeconst/mills_toth.hpp"

#include "primeconst/roots.hpp"

namespace primeconst {

namespace {

PrimeTower build_tower(TowerKind kind, unsigned depth) {
    if (depth == 0) {
        throw std::invalid_argument("tower depth must be >= 1");
    }
    PrimeTower tower;
    tower.kind = kind;
    BigInt q = 2;
    for (unsigned i = 0; i < depth; ++i) {
        if (i > 0) {
            const BigInt cube = q * q * q;
            q = kind == TowerKind::Mills ? next_prime_after(cube)
                                         : prev_prime_before(cube + 1);
        }
        tower.primes.push_back(q);
        tower.verdicts.push_back(is_prime(q));
    }
    return tower;
}

unsigned pow3(unsigned depth) {
    unsigned result = 1;
    for (unsigned i = 0; i < depth; ++i) {
        if (result > (1u << 30) / 3) {
            throw std::invalid_argument("tower depth too large for 3^depth exponent");
        }
        result *= 3;
    }
    return result;
}

TowerConstant tower_constant(TowerKind kind, unsigned depth, unsigned digits) {
    PrimeTower tower = build_tower(kind, depth);
    const BigInt& q = tower.primes.back();
    const unsigned exponent = pow3(depth);

    // The tower bracket is (q, q+1) for Mills and (q-1, q) for Toth, taken
    // to the 3^-depth power.  Root precision adds up to 10^-(digits+guard)
    // slack per side; retry with more guard digits before giving up so a
    // render boundary inside the slack is not mistaken for missing depth.
    for (const unsigned guard : {2u, 7u, 12u}) {
        const BigInt lower_base = kind == TowerKind::Mills ? q : BigInt(q - 1);
        const BigInt upper_base = kind == TowerKind::Mills ? BigInt(q + 1) : q;
        const BigRational lo = root_enclosure(lower_base, exponent, digits + guard).lo;
        const BigRational hi = root_enclosure(upper_base, exponent, digits + guard).hi;
        Enclosure enclosure(lo, hi);
        DecimalString rendered_lo = decimal_truncate(enclosure.lo(), digits);
        DecimalString rendered_hi = decimal_truncate(enclosure.hi(), digits);
        if (rendered_lo.text == rendered_hi.text) {
            return {std::move(tower), std::move(enclosure), std::move(rendered_lo)};
        }
    }
    throw InsufficientDepth("tower bracket wider than the requested precision at depth " +
                            std::to_string(depth));
}

}  // namespace

PrimeTower mills_primes(unsigned depth) {
    return build_tower(TowerKind::Mills, depth);
}

PrimeTower toth_primes(unsigned depth) {
    return build_tower(TowerKind::Toth, depth);
}

TowerConstant mills_constant(unsigned depth, unsigned digits) {
    return tower_constant(TowerKind::Mills, depth, digits);
}

TowerConstant toth_constant(unsigned depth, unsigned digits) {
    return tower_constant(TowerKind::Toth, depth, digits);
}

}  // namespace primeconst
