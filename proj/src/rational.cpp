#include "kingman/rational.hpp"

#include <stdexcept>

namespace kingman {

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

Rational rational_pow(const Rational& base, long long e) {
    if (e == 0) return 1;
    if (base == 0 && e < 0) throw std::domain_error("rational_pow: 0^negative");
    Rational acc = 1;
    Rational b = e > 0 ? base : Rational(1) / base;
    long long m = e > 0 ? e : -e;
    while (m > 0) {
        if (m & 1) acc *= b;
        b *= b;
        m >>= 1;
    }
    return acc;
}

Rational pow2(long long e) { return rational_pow(Rational(2), e); }

std::string to_fraction_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_string(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("rational_from_string: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
        BigInt num{std::string(s.substr(0, slash))};
        BigInt den{std::string(s.substr(slash + 1))};
        if (den == 0) bad();
        return make_rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return 0;  // unreachable
}

std::string decimal_string(const Rational& q, int decimals) {
    if (decimals < 0) throw std::domain_error("decimal_string: negative decimals");
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    // round(|q|*scale) half away from zero
    BigInt scaled = (2 * num * scale + den) / (2 * den);
    std::string digits = scaled.str();
    if ((int)digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
    std::string out;
    if (neg && scaled != 0) out += '-';
    out += digits.substr(0, digits.size() - decimals);
    if (decimals > 0) {
        out += '.';
        out += digits.substr(digits.size() - decimals);
    }
    return out;
}

namespace {

Rational power_sum_range(long long lo, long long hi, int j) {
    if (lo == hi) return rational_pow(Rational(lo), -j);
    long long mid = lo + (hi - lo) / 2;
    return power_sum_range(lo, mid, j) + power_sum_range(mid + 1, hi, j);
}

}  // namespace

Rational power_sum(long long n, int j) {
    if (j < 1) throw std::domain_error("power_sum: exponent must be >= 1");
    if (n < 1) return 0;
    if (n > 100000) throw std::length_error("power_sum: n exceeds exact-arithmetic budget");
    return power_sum_range(1, n, j);
}

Rational harmonic(long long n) { return power_sum(n, 1); }

}  // namespace kingman
