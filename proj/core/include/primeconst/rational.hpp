#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace primeconst {

// Exact arbitrary-precision integers and reduced fractions.  BigRational is
// the only number representation used by the certification paths: every
// endpoint, width and partial sum is an exact fraction with positive
// denominator and gcd(|num|, den) = 1.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Builds num/den in canonical form.  Accepts negative or unreduced
// denominators; throws std::domain_error when den == 0.
BigRational make_rational(BigInt num, BigInt den);

// Largest integer <= q.
BigInt floor_of(const BigRational& q);

// Smallest integer >= q.
BigInt ceil_of(const BigRational& q);

BigInt pow10(std::uint64_t d);

// "numerator/denominator", always with the slash ("5/1" for integers).
std::string format_fraction(const BigRational& q);

// Inverse of format_fraction; also accepts a bare integer.
BigRational parse_fraction(std::string_view text);

}  // namespace primeconst
