#include "primeconst/rational.hpp"

#include <stdexcept>

namespace primeconst {

BigRational make_rational(BigInt num, BigInt den) {
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRational(num, den);
}

BigInt floor_of(const BigRational& q) {
    // cpp_int division truncates toward zero; adjust for negative values.
    BigInt quotient = numerator(q) / denominator(q);
    if (numerator(q) < 0 && numerator(q) % denominator(q) != 0) {
        --quotient;
    }
    return quotient;
}

BigInt ceil_of(const BigRational& q) {
    BigInt quotient = numerator(q) / denominator(q);
    if (numerator(q) > 0 && numerator(q) % denominator(q) != 0) {
        ++quotient;
    }
    return quotient;
}

BigInt pow10(std::uint64_t d) {
    return pow(BigInt(10), static_cast<unsigned>(d));
}

std::string format_fraction(const BigRational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

BigRational parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(BigInt(std::string(text)));
    }
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    return make_rational(std::move(num), std::move(den));
}

}  // namespace primeconst
