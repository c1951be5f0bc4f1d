#include <doctest.h>

#include <random>
#include <stdexcept>

#include "primeconst/constants.hpp"
#include "support/oracles.hpp"

using namespace primeconst;

namespace {

PrimeTable& shared_table() {
    static PrimeTable table;
    return table;
}

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("series enclosure, first ceiling case by hand") {
    // n = 1, no extra terms: partial sum p_1 - 2 = 0, tail bracket is the
    // Theorem-1 bound (2, 3) on h_2 scaled by 1/p_1.
    const Enclosure e = series_enclosure(shared_table(), {Family::Ceiling, 1}, 0);
    CHECK(e.lo() == BigRational(1));
    CHECK(e.hi() == BigRational(3, 2));
}

TEST_CASE("series enclosure renders the published constants") {
    const Enclosure h1 = series_enclosure(shared_table(), {Family::Ceiling, 1}, 17);
    CHECK(decimal_truncate(h1.lo(), 19).text == "1.2148208055243337469");
    CHECK(decimal_truncate(h1.hi(), 19).text == "1.2148208055243337469");

    const Enclosure f1 = series_enclosure(shared_table(), {Family::Floor, 1}, 17);
    CHECK(decimal_truncate(f1.lo(), 19).text == "2.9200509773161347120");
    CHECK(decimal_truncate(f1.hi(), 19).text == "2.9200509773161347120");
}

TEST_CASE("series width law") {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 120; ++i) {
        const std::uint64_t n = 1 + rng() % 12;
        const std::uint64_t m = rng() % 12;
        for (const Family family : {Family::Ceiling, Family::Floor}) {
            const Enclosure e = series_enclosure(shared_table(), {family, n}, m);
            CHECK(e.width() == make_rational(1, shared_table().primorial(n, n + m)));
        }
    }
}

TEST_CASE("family bracket: h_n in (p_n - 1, p_n), f_n in (p_n, p_n + 1)") {
    for (std::uint64_t n = 1; n <= 60; ++n) {
        const BigInt p = shared_table().nth_prime(n);
        const Enclosure h = series_enclosure(shared_table(), {Family::Ceiling, n}, 1);
        CHECK(h.lo() >= p - 1);
        CHECK(h.hi() <= p);
        const Enclosure f = series_enclosure(shared_table(), {Family::Floor, n}, 1);
        CHECK(f.lo() >= p);
        CHECK(f.hi() <= p + 1);
    }
}

TEST_CASE("backward_refine base case and seed orientation") {
    const Enclosure e = backward_refine(shared_table(), {Family::Ceiling, 1}, 2);
    CHECK(e.lo() == BigRational(1));
    CHECK(e.hi() == BigRational(3, 2));
    CHECK_THROWS_AS(backward_refine(shared_table(), {Family::Ceiling, 3}, 3),
                    std::invalid_argument);
}

TEST_CASE("backward_refine renders the published constants") {
    const Enclosure h1 = backward_refine(shared_table(), {Family::Ceiling, 1}, 19);
    CHECK(decimal_truncate(h1.lo(), 19).text == "1.2148208055243337469");
    CHECK(decimal_truncate(h1.hi(), 19).text == "1.2148208055243337469");

    // f_2: truncation gives ...241; the published table rounds up to ...242.
    const Enclosure f2 = backward_refine(shared_table(), {Family::Floor, 2}, 20);
    CHECK(decimal_truncate(f2.lo(), 19).text == "3.8401019546322694241");
    CHECK(decimal_render(f2.lo(), 19, RenderMode::RoundHalfUp).text ==
          "3.8401019546322694242");
    CHECK(decimal_render(f2.hi(), 19, RenderMode::RoundHalfUp).text ==
          "3.8401019546322694242");
}

TEST_CASE("backward equals series exactly (identical rationals)") {
    for (const Family family : {Family::Ceiling, Family::Floor}) {
        for (std::uint64_t n = 1; n < 25; ++n) {
            for (std::uint64_t seed = n + 1; seed <= 25; ++seed) {
                const ConstantSpec spec{family, n};
                const Enclosure b = backward_refine(shared_table(), spec, seed);
                const Enclosure s = series_enclosure(shared_table(), spec, seed - n - 1);
                CHECK(b.lo() == s.lo());
                CHECK(b.hi() == s.hi());
            }
        }
    }
}

TEST_CASE("forward_generate single step from the hand-checked start") {
    const Enclosure start(BigRational(1), BigRational(3, 2));
    const RecursionTrace trace = forward_generate({Family::Ceiling, 1}, start, 1);
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.terminal == RecursionTrace::Terminal::Completed);
    CHECK(trace.steps[0].index == 1);
    CHECK(trace.steps[0].prime == 2);
    CHECK(trace.steps[0].after.lo() == BigRational(2));
    CHECK(trace.steps[0].after.hi() == BigRational(3));
    CHECK(trace.steps[0].width == BigRational(1));
}

TEST_CASE("forward_generate exhausts exactly as the interval recursion dictates") {
    // (1, 3/2) -> certify 2 -> (2, 3) -> certify 3 -> (3, 6) straddles.
    const Enclosure start(BigRational(1), BigRational(3, 2));
    const RecursionTrace trace = forward_generate({Family::Ceiling, 1}, start, 3);
    CHECK(trace.terminal == RecursionTrace::Terminal::PrecisionExhausted);
    CHECK(trace.exhausted_at == 3);
    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.steps[0].prime == 2);
    CHECK(trace.steps[1].prime == 3);
    CHECK(trace.steps[1].after.lo() == BigRational(3));
    CHECK(trace.steps[1].after.hi() == BigRational(6));
}

TEST_CASE("forward_generate floor family agrees with the prime table") {
    const Enclosure seed = seed_enclosure(shared_table(), {Family::Floor, 1}, 40);
    const RecursionTrace trace = forward_generate({Family::Floor, 1}, seed, 20);
    CHECK(trace.terminal == RecursionTrace::Terminal::Completed);
    REQUIRE(trace.steps.size() == 20);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        CHECK(trace.steps[i].prime == shared_table().nth_prime(i + 1));
    }
}

TEST_CASE("forward widths scale by the certified prime") {
    const Enclosure seed = seed_enclosure(shared_table(), {Family::Ceiling, 1}, 30);
    const RecursionTrace trace = forward_generate({Family::Ceiling, 1}, seed, 15);
    BigRational width = seed.width();
    CHECK(width == make_rational(1, pow10(30)));
    for (const TraceStep& step : trace.steps) {
        width *= step.prime;
        CHECK(step.width == width);
        CHECK(step.after.width() == width);
    }
}

TEST_CASE("difference_dn") {
    // d_1 from the published row-1 values: 2.9200509773161347121 minus
    // 1.2148208055243337469; the enclosure at 12 extra terms still
    // contains that (slightly high) rounded difference.
    const BigRational row1_diff =
        make_rational(BigInt("17052301717918009652"), pow10(19));
    const Enclosure d1 = difference_dn(shared_table(), 1, 12);
    CHECK(d1.lo() < row1_diff);
    CHECK(row1_diff < d1.hi());

    const Enclosure d5 = difference_dn(shared_table(), 5, 2);
    CHECK(d5.lo() >= 1);
    CHECK(d5.hi() < BigRational(11, 10));

    const Enclosure d100 = difference_dn(shared_table(), 100, 2);
    CHECK(d100.hi() - 1 < BigRational(2, 541));
}

TEST_CASE("difference bound across indices") {
    for (std::uint64_t n = 1; n <= 120; ++n) {
        const BigInt p = shared_table().nth_prime(n);
        const Enclosure d = difference_dn(shared_table(), n, 2);
        CHECK(d.lo() >= 1);
        CHECK(d.hi() < make_rational(p, p - 1));
    }
}

TEST_CASE("required_terms") {
    const ConstantSpec h1{Family::Ceiling, 1};
    CHECK(required_terms(shared_table(), h1, 0) == 0);
    // primorial(1, 16) = 32589158477190044730 is the first above 10^19.
    CHECK(required_terms(shared_table(), h1, 19) == 15);
    CHECK(required_terms(shared_table(), h1, 20) == 16);

    std::uint64_t previous = 0;
    for (std::uint64_t d = 0; d <= 60; ++d) {
        const std::uint64_t m = required_terms(shared_table(), h1, d);
        CHECK(m >= previous);
        previous = m;
        CHECK(shared_table().primorial(1, 1 + m) > pow10(d));
        if (m > 0) {
            CHECK(shared_table().primorial(1, m) <= pow10(d));
        }
    }
}

TEST_CASE("seed_enclosure has exact width and contains the constant") {
    for (const Family family : {Family::Ceiling, Family::Floor}) {
        for (const std::uint64_t d : {1ull, 5ull, 20ull}) {
            const ConstantSpec spec{family, 1};
            const Enclosure seed = seed_enclosure(shared_table(), spec, d);
            CHECK(seed.width() == make_rational(1, pow10(d)));
            // A much tighter enclosure must sit strictly inside the seed.
            const Enclosure tight =
                backward_refine(shared_table(), spec, 1 + required_terms(shared_table(), spec, d + 10) + 1);
            CHECK(seed.lo() <= tight.lo());
            CHECK(tight.hi() <= seed.hi());
        }
    }
}

TEST_CASE("constant_digits matches the published values") {
    // h_11 truncates to ...727 and rounds to the published ...728.
    CHECK(constant_digits(shared_table(), {Family::Ceiling, 11}, 18).text ==
          "30.163928642871448727");
    CHECK(constant_digits(shared_table(), {Family::Ceiling, 11}, 18,
                          RenderMode::RoundHalfUp)
              .text == "30.163928642871448728");
    // h_30: truncation and rounding agree here.
    CHECK(constant_digits(shared_table(), {Family::Ceiling, 30}, 17).text ==
          "112.11525595618905130");
    // f_29 truncates to ...465, rounds to the published ...466.
    CHECK(constant_digits(shared_table(), {Family::Floor, 29}, 17).text ==
          "109.03783647459722465");
    CHECK(constant_digits(shared_table(), {Family::Floor, 29}, 17, RenderMode::RoundHalfUp)
              .text == "109.03783647459722466");
    CHECK(constant_digits(shared_table(), {Family::Ceiling, 1}, 1).text == "1.2");
    CHECK(constant_digits(shared_table(), {Family::Floor, 1}, 19).text ==
          "2.9200509773161347120");
}

TEST_CASE("constant_digits prefixes are consistent across precisions") {
    const std::string d40 = constant_digits(shared_table(), {Family::Ceiling, 1}, 40).text;
    const std::string d19 = constant_digits(shared_table(), {Family::Ceiling, 1}, 19).text;
    CHECK(d40.substr(0, d19.size()) == d19);
}

TEST_CASE("bracketing against the sieve oracle") {
    const auto oracle = oracles::sieve_primes(2200);
    for (std::uint64_t n = 1; n <= 300; ++n) {
        const auto ceiling =
            certified_ceiling(series_enclosure(shared_table(), {Family::Ceiling, n}, 0));
        const auto floor =
            certified_floor(series_enclosure(shared_table(), {Family::Floor, n}, 0));
        REQUIRE(ceiling.has_value());
        REQUIRE(floor.has_value());
        CHECK(*ceiling == oracle[n - 1]);
        CHECK(*floor == oracle[n - 1]);
    }
}

TEST_CASE("trace invariants: primes increase, widths increase") {
    const Enclosure seed = seed_enclosure(shared_table(), {Family::Ceiling, 1}, 25);
    const RecursionTrace trace = forward_generate({Family::Ceiling, 1}, seed, 40);
    CHECK(trace.terminal == RecursionTrace::Terminal::PrecisionExhausted);
    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
        CHECK(trace.steps[i].prime > trace.steps[i - 1].prime);
        CHECK(trace.steps[i].width > trace.steps[i - 1].width);
    }
    // Even on exhaustion nothing wrong was emitted.
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        CHECK(trace.steps[i].prime == shared_table().nth_prime(i + 1));
    }
}

}  // TEST_SUITE
