#pragma once

#include <stdexcept>
#include <vector>

#include "primeconst/decimal.hpp"
#include "primeconst/enclosure.hpp"
#include "primeconst/primes.hpp"

namespace primeconst {

enum class TowerKind {
    Mills,  // q_{i+1} = next prime after q_i^3; floor(A^(3^n)) is prime
    Toth,   // q_{i+1} = largest prime <= q_i^3; ceil(B^(3^n)) is prime
};

// Tower of primes starting at q_1 = 2, with the primality verdict recorded
// for each element (deterministic Prime below 3.3e24, ProbablePrime above).
struct PrimeTower {
    TowerKind kind = TowerKind::Mills;
    std::vector<BigInt> primes;
    std::vector<PrimalityVerdict> verdicts;
};

PrimeTower mills_primes(unsigned depth);
PrimeTower toth_primes(unsigned depth);

// The finite tower bracket is wider than the requested precision; deepen
// the tower to certify more digits.
class InsufficientDepth : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TowerConstant {
    PrimeTower tower;
    Enclosure enclosure;
    DecimalString digits;
};

// Mills' constant A from the depth-level bracket
// (q^(3^-depth), (q+1)^(3^-depth)); digits are truncated and certified by
// endpoint agreement.  Throws InsufficientDepth when the bracket cannot
// settle `digits` fractional digits.
TowerConstant mills_constant(unsigned depth, unsigned digits);

// Toth's constant B from ((q-1)^(3^-depth), q^(3^-depth)).
TowerConstant toth_constant(unsigned depth, unsigned digits);

}  // namespace primeconst
