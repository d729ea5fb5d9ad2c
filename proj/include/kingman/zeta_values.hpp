#pragma once

#include <stdexcept>
#include <string>

#include "kingman/bigfloat.hpp"
#include "kingman/rational.hpp"
#include "kingman/zeta_polynomial.hpp"

namespace kingman {

// Raised when a requested output precision cannot be certified with the
// embedded 50-digit constants / working precision for the given polynomial.
class precision_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// B_n via B_0 = 1, B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k. Memoized and
// internally synchronized.
const Rational& bernoulli(int n);

// c with zeta(2m) = c * pi^(2m); m = 0 yields -1/2.
Rational zeta_even_coefficient(int m);

// Rewrites every zeta(2m) factor as its rational multiple of pi^(2m);
// gamma, log2 and odd zeta factors pass through.
PiForm to_pi_form(const ZetaPolynomial& p);

// zeta(k) at full working precision (error well below 10^-70). Cached.
const BigFloat& zeta_value(int k);

// |result - zeta(k)| < 10^(-digits). Direct sum plus Euler-Maclaurin tail with
// the remainder certified by the first omitted correction term.
BigFloat zeta_numeric(int k, int digits);

// Numeric value of a generator at working precision; gamma/log2 carry the
// 50-digit embedded constants.
BigFloat generator_value(const Generator& g);

// Evaluates p with absolute error certified below 10^(-digits)/2.
// Throws precision_exceeded when that cannot be certified, std::domain_error
// when digits is outside [1, 50].
BigFloat eval_value(const ZetaPolynomial& p, int digits);
BigFloat eval_value(const PiForm& f, int digits);

// Fixed-point decimal string with `digits` decimals, correctly rounded.
std::string eval_numeric(const ZetaPolynomial& p, int digits);
std::string eval_numeric(const PiForm& f, int digits);

}  // namespace kingman
