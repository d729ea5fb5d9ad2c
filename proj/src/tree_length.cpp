#include "kingman/tree_length.hpp"

#include <cmath>
#include <stdexcept>

namespace kingman {

namespace {

constexpr long long kTupleBudget = 10000000;
constexpr long long kExactSumBudget = 100000;

void check_length_args(int n, int j) {
    if (n < 2) throw std::domain_error("sample size must be >= 2");
    if (j < 1) throw std::domain_error("order must be >= 1");
}

// sum over nondecreasing tuples k_lo <= k_1 <= ... <= k_levels <= kmax
// of prod 1/k_i, exact.
Rational ordered_product_sum(int levels, int k_lo, int kmax) {
    Rational total(0);
    for (int k = k_lo; k <= kmax; ++k) {
        Rational f(1, k);
        if (levels == 1) {
            total += f;
        } else {
            total += f * ordered_product_sum(levels - 1, k, kmax);
        }
    }
    return total;
}

}  // namespace

Rational edge_rate(int k) {
    if (k < 2) throw std::domain_error("edge rate index must be >= 2");
    return Rational(k - 1, 2);
}

Rational cumulant_L(int n, int j) {
    check_length_args(n, j);
    return Rational(factorial(j - 1)) * pow2(j) * power_sum(n - 1, j);
}

Rational moment_L_alternating(int n, int j) {
    check_length_args(n, j);
    Rational sum(0);
    for (int k = 1; k <= n - 1; ++k) {
        Rational term = Rational(binomial(n - 1, k)) * rational_pow(Rational(k), -j);
        if (k % 2 == 0) term = -term;
        sum += term;
    }
    return Rational(factorial(j)) * pow2(j) * sum;
}

Rational moment_L_ordered(int n, int j) {
    check_length_args(n, j);
    BigInt tuples = binomial(n + j - 2, j);
    if (tuples > kTupleBudget) throw std::length_error("ordered tuple enumeration budget exceeded");
    return Rational(factorial(j)) * pow2(j) * ordered_product_sum(j, 1, n - 1);
}

double cdf_L(int n, double t) {
    if (n < 2) throw std::domain_error("sample size must be >= 2");
    if (t < 0.0) throw std::domain_error("time must be nonnegative");
    return std::pow(-std::expm1(-0.5 * t), n - 1);
}

double density_L(int n, double t) {
    if (n < 2) throw std::domain_error("sample size must be >= 2");
    if (t < 0.0) throw std::domain_error("time must be nonnegative");
    double p = -std::expm1(-0.5 * t);
    return 0.5 * (n - 1) * std::pow(p, n - 2) * std::exp(-0.5 * t);
}

ShiftedCumulant gumbel_shift_cumulant(long long n, int j) {
    if (n < 2) throw std::domain_error("sample size must be >= 2");
    if (j < 1) throw std::domain_error("order must be >= 1");
    ShiftedCumulant out;
    out.n = n;
    out.j = j;
    out.log_offset = (j == 1);

    if (n - 1 <= kExactSumBudget) {
        if (j == 1) {
            out.exact = harmonic(static_cast<int>(n - 1));
        } else {
            out.exact = Rational(factorial(j - 1)) * power_sum(static_cast<int>(n - 1), j);
        }
    }

    if (out.exact) {
        out.value = static_cast<double>(*out.exact);
    } else {
        long double sum = 0.0L;
        for (long long k = n - 1; k >= 1; --k) {
            sum += 1.0L / std::pow(static_cast<long double>(k), static_cast<long double>(j));
        }
        long double fact = 1.0L;
        for (int r = 2; r < j; ++r) fact *= r;
        out.value = static_cast<double>(fact * sum);
    }
    if (j == 1) out.value -= std::log(static_cast<double>(n));
    return out;
}

}  // namespace kingman
