#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kingman {

// Exact arbitrary-precision integers and fractions. cpp_rational keeps the
// canonical form we rely on everywhere: gcd-reduced, denominator > 0.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with the sign moved to the numerator; throws std::domain_error when
// den == 0. (cpp_rational's own two-argument constructor rejects negative
// denominators outright, so canonicalization of the sign happens here.)
Rational make_rational(BigInt num, BigInt den);

BigInt factorial(int n);

// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long long n, long long k);

// base^e for integer e of either sign; base must be nonzero when e < 0.
Rational rational_pow(const Rational& base, long long e);

// 2^e as an exact fraction, e of either sign.
Rational pow2(long long e);

// "p/q" (or "p" when the denominator is 1).
std::string to_fraction_string(const Rational& q);

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
Rational rational_from_string(std::string_view s);

// Exact fixed-point rendering with `decimals` digits after the point,
// rounded half away from zero.
std::string decimal_string(const Rational& q, int decimals);

// Sum_{k=1}^{n} k^(-j), exact. Divide-and-conquer so the reductions happen on
// balanced operand sizes. Guarded: throws std::length_error when n exceeds the
// exact-arithmetic budget (the numbers themselves would be fine, but e.g.
// harmonic numbers at n ~ 10^6 have ~10^5-digit denominators).
Rational power_sum(long long n, int j);

Rational harmonic(long long n);

}  // namespace kingman
