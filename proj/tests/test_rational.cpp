#include <doctest.h>

#include <random>
#include <stdexcept>

#include "primeconst/rational.hpp"

using namespace primeconst;

TEST_SUITE("rational") {

TEST_CASE("basic arithmetic is exact and reduced") {
    CHECK(BigRational(1, 2) + BigRational(1, 3) == BigRational(5, 6));
    CHECK(BigRational(3, 2) * BigRational(2, 3) == BigRational(1));
    CHECK(BigRational(113) - BigRational(112, 1) == BigRational(1));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS(BigRational(1, 2) / BigRational(0));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("make_rational normalizes sign and reduces") {
    const BigRational q = make_rational(6, -4);
    CHECK(numerator(q) == -3);
    CHECK(denominator(q) == 2);
    CHECK(make_rational(0, -7) == BigRational(0));
}

TEST_CASE("floor and ceiling of rationals") {
    CHECK(floor_of(BigRational(7, 2)) == 3);
    CHECK(ceil_of(BigRational(7, 2)) == 4);
    CHECK(floor_of(BigRational(-7, 2)) == -4);
    CHECK(ceil_of(BigRational(-7, 2)) == -3);
    CHECK(floor_of(BigRational(6)) == 6);
    CHECK(ceil_of(BigRational(6)) == 6);
    CHECK(floor_of(BigRational(-6)) == -6);
}

TEST_CASE("fraction string round trip") {
    CHECK(format_fraction(BigRational(22, 7)) == "22/7");
    CHECK(format_fraction(BigRational(5)) == "5/1");
    CHECK(parse_fraction("22/7") == BigRational(22, 7));
    CHECK(parse_fraction("-3/9") == BigRational(-1, 3));
    CHECK(parse_fraction("17") == BigRational(17));
}

// Canonical-form and field-law invariants over random triples.
TEST_CASE("randomized algebraic properties") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<long long> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long long> den(1, 1'000'000);

    for (int i = 0; i < 500; ++i) {
        const BigRational a = make_rational(num(rng), den(rng));
        const BigRational b = make_rational(num(rng), den(rng));
        const BigRational c = make_rational(num(rng), den(rng));

        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);

        for (const BigRational& q : {BigRational(a + b), BigRational(a * b), BigRational(a - c)}) {
            CHECK(denominator(q) > 0);
            CHECK(gcd(BigInt(abs(numerator(q))), BigInt(denominator(q))) == 1);
        }
    }
}

TEST_CASE("pow10") {
    CHECK(pow10(0) == 1);
    CHECK(pow10(3) == 1000);
    CHECK(pow10(20) == BigInt("100000000000000000000"));
}

}  // TEST_SUITE
