#include "primeconst/decimal.hpp"

#include <stdexcept>

namespace primeconst {

namespace {

std::string render_scaled(const BigInt& scaled, const BigInt& scale, unsigned d) {
    const BigInt integral = scaled / scale;
    if (d == 0) {
        return integral.str();
    }
    std::string frac = BigInt(scaled % scale).str();
    return integral.str() + "." + std::string(d - frac.size(), '0') + frac;
}

}  // namespace

DecimalString decimal_truncate(const BigRational& q, unsigned d) {
    return decimal_render(q, d, RenderMode::Truncate);
}

DecimalString decimal_render(const BigRational& q, unsigned d, RenderMode mode) {
    if (q < 0) {
        throw std::domain_error("decimal_render: negative value");
    }
    const BigInt scale = pow10(d);
    BigInt scaled;
    switch (mode) {
        case RenderMode::Truncate:
            scaled = numerator(q) * scale / denominator(q);
            break;
        case RenderMode::RoundHalfUp:
            scaled = (2 * numerator(q) * scale + denominator(q)) / (2 * denominator(q));
            break;
    }
    return {render_scaled(scaled, scale, d), d};
}

BigRational parse_decimal(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("parse_decimal: empty input");
    }
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return BigRational(BigInt(std::string(text)));
    }
    const std::string integral(text.substr(0, dot));
    const std::string frac(text.substr(dot + 1));
    if (frac.empty()) {
        throw std::invalid_argument("parse_decimal: missing fractional digits");
    }
    const BigInt scale = pow10(frac.size());
    return make_rational(BigInt(integral) * scale + BigInt(frac), scale);
}

}  // namespace primeconst
