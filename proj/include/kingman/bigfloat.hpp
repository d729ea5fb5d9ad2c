#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "kingman/rational.hpp"

namespace kingman {

// Working float for every numeric evaluation path. 76 decimal digits leaves
// headroom above the 50-digit embedded constants and the largest integer
// coefficients we evaluate (cancellations of ~17 orders at cumulant order 20).
using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<76>>;

// Significant digits carried by the embedded gamma/log2/pi literals.
inline constexpr int kConstantDigits = 50;

const BigFloat& bf_gamma();
const BigFloat& bf_log2();
const BigFloat& bf_pi();

BigFloat to_bigfloat(const Rational& q);

// Fixed-point rendering with `decimals` digits after the point, rounded half
// away from zero. Never uses exponent notation.
std::string fixed_string(const BigFloat& x, int decimals);

}  // namespace kingman
