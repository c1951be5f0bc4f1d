#include "primeconst/enclosure.hpp"

#include <stdexcept>
#include <utility>

namespace primeconst {

Enclosure::Enclosure(BigRational lo, BigRational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_)) {
        throw std::invalid_argument("Enclosure: requires lo < hi");
    }
}

std::optional<BigInt> certified_ceiling(const Enclosure& e) {
    // ceil(hi) is the only candidate: any smaller c has hi > c, any larger
    // one would force lo >= hi.
    BigInt c = ceil_of(e.hi());
    if (c - 1 <= e.lo()) {
        return c;
    }
    return std::nullopt;
}

std::optional<BigInt> certified_floor(const Enclosure& e) {
    BigInt c = floor_of(e.lo());
    if (e.hi() <= c + 1) {
        return c;
    }
    return std::nullopt;
}

Enclosure map_affine(const Enclosure& e, const BigInt& scale, const BigRational& offset) {
    if (scale < 1) {
        throw std::invalid_argument("map_affine: scale must be >= 1");
    }
    return Enclosure(scale * e.lo() + offset, scale * e.hi() + offset);
}

Enclosure subtract(const Enclosure& e1, const Enclosure& e2) {
    return Enclosure(e1.lo() - e2.hi(), e1.hi() - e2.lo());
}

}  // namespace primeconst
