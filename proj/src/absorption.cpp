#include "kingman/absorption.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace kingman {

Rational merge_rate(int k) {
    if (k < 1) throw std::domain_error("merge rate index must be >= 1");
    return Rational(BigInt(k) * (k - 1), 2);
}

const Rational& HypoexpCoefficients::coeff(int k) const {
    if (k < 2 || k > n) throw std::domain_error("coefficient index out of range");
    return a[static_cast<size_t>(k - 2)];
}

HypoexpCoefficients hypoexp_coefficients(int n) {
    if (n < 2) throw std::domain_error("sample size must be >= 2");
    HypoexpCoefficients out;
    out.n = n;
    out.a.reserve(static_cast<size_t>(n - 1));
    // b_{n2} = (n-1)/(n+1); b_{n,k+1} = b_{nk} (n-k)/(n+k).
    Rational b(n - 1, n + 1);
    for (int k = 2; k <= n; ++k) {
        Rational coeff = b * (2 * k - 1);
        if (k % 2 != 0) coeff = -coeff;
        out.a.push_back(coeff);
        b *= Rational(n - k, n + k);
    }
    return out;
}

ZetaPolynomial cumulant_T(int j) {
    if (j < 1) throw std::domain_error("cumulant order must be >= 1");
    ZetaPolynomial result;
    Rational scale = pow2(j + 1);
    if (j % 2 != 0) scale = -scale;
    for (int m = 0; 2 * m <= j; ++m) {
        Rational c = scale * Rational(factorial(2 * j - 2 * m - 1), factorial(j - 2 * m));
        if (m == 0) {
            result += ZetaPolynomial(c * Rational(-1, 2));
        } else {
            result += zp_zeta(2 * m) * c;
        }
    }
    return result;
}

ZetaPolynomial moment_T(int j) {
    if (j < 1) throw std::domain_error("moment order must be >= 1");
    ZetaPolynomial result;
    Rational scale = pow2(j + 1) * j;
    if (j % 2 != 0) scale = -scale;
    for (int m = 0; 2 * m <= j; ++m) {
        Rational c = scale * (2 * m - 1) * (Rational(1) - pow2(1 - 2 * m)) *
                     Rational(factorial(2 * j - 2 * m - 2), factorial(j - 2 * m));
        if (m == 0) {
            result += ZetaPolynomial(c * Rational(-1, 2));
        } else {
            result += zp_zeta(2 * m) * c;
        }
    }
    return result;
}

namespace {

// Sum over nondecreasing tuples k_lo <= k_1 <= ... <= k_levels <= kmax of
// prod 2/(k_i(k_i-1)), by explicit enumeration.
double ordered_tuple_sum(int levels, long long k_lo, long long kmax) {
    double total = 0.0;
    for (long long k = k_lo; k <= kmax; ++k) {
        double f = 2.0 / (static_cast<double>(k) * static_cast<double>(k - 1));
        if (levels == 1) {
            total += f;
        } else {
            total += f * ordered_tuple_sum(levels - 1, k, kmax);
        }
    }
    return total;
}

}  // namespace

double moment_T_ordered_oracle(int j, long long kmax) {
    if (j < 1 || j > 4) throw std::domain_error("ordered oracle supports orders 1 to 4");
    if (kmax < 2) throw std::domain_error("kmax must be >= 2");
    double fact = 1.0;
    for (int r = 2; r <= j; ++r) fact *= r;
    return fact * ordered_tuple_sum(j, 2, kmax);
}

double cdf_T_n(const HypoexpCoefficients& c, double t) {
    if (t < 0.0) throw std::domain_error("time must be nonnegative");
    double sum = 0.0;
    for (int k = c.n; k >= 2; --k) {
        double lambda = 0.5 * static_cast<double>(k) * (k - 1);
        sum += static_cast<double>(c.coeff(k)) * (-std::expm1(-lambda * t));
    }
    return sum;
}

double density_g_n(const HypoexpCoefficients& c, double t) {
    if (t < 0.0) throw std::domain_error("time must be nonnegative");
    double sum = 0.0;
    for (int k = c.n; k >= 2; --k) {
        double lambda = 0.5 * static_cast<double>(k) * (k - 1);
        sum += static_cast<double>(c.coeff(k)) * lambda * std::exp(-lambda * t);
    }
    return sum;
}

double cdf_T_n(int n, double t) { return cdf_T_n(hypoexp_coefficients(n), t); }

double density_g_n(int n, double t) { return density_g_n(hypoexp_coefficients(n), t); }

DensityEstimate density_g(double t, int K) {
    if (t <= 0.0) throw std::domain_error("time must be positive");
    if (K < 2) throw std::domain_error("truncation point must be >= 2");
    DensityEstimate out;
    double sum = 0.0;
    for (int k = 2; k <= K; ++k) {
        double lambda = 0.5 * static_cast<double>(k) * (k - 1);
        double term = (2.0 * k - 1.0) * lambda * std::exp(-lambda * t);
        sum += (k % 2 == 0) ? term : -term;
    }
    out.value = sum;

    // First omitted magnitude and the worst ratio of consecutive magnitudes
    // beyond K; both decrease in k, so a geometric series dominates the tail.
    double m = static_cast<double>(K) + 1.0;
    double lambda_m = 0.5 * m * (m - 1.0);
    double first = (2.0 * m - 1.0) * lambda_m * std::exp(-lambda_m * t);
    double ratio = ((2.0 * m + 1.0) / (2.0 * m - 1.0)) * ((m + 1.0) / (m - 1.0)) *
                   std::exp(-m * t);
    if (ratio < 1.0) {
        out.tail_bound = first / (1.0 - ratio);
        out.tail_reliable = t >= 1e-3;
    } else {
        out.tail_bound = std::numeric_limits<double>::infinity();
        out.tail_reliable = false;
    }
    return out;
}

double density_g_auto(double t) {
    if (t < 1e-3) return 0.0;
    // lambda_K t >= 90 makes the dropped terms irrelevant at double precision.
    double target = 180.0 / t;  // K(K-1) >= 180/t
    int K = static_cast<int>(std::sqrt(target)) + 2;
    if (K < 12) K = 12;
    return density_g(t, K).value;
}

std::vector<ZetaPolynomial> cumulants_to_moments(const std::vector<ZetaPolynomial>& kappas) {
    if (kappas.empty()) throw std::domain_error("cumulant sequence must be non-empty");
    const int J = static_cast<int>(kappas.size());
    std::vector<ZetaPolynomial> m;  // m[0] = m_0 = 1
    m.reserve(static_cast<size_t>(J) + 1);
    m.emplace_back(1);
    for (int order = 1; order <= J; ++order) {
        ZetaPolynomial next;
        for (int k = 1; k <= order; ++k) {
            next += kappas[static_cast<size_t>(k - 1)] *
                    Rational(binomial(order - 1, k - 1)) * m[static_cast<size_t>(order - k)];
        }
        m.push_back(std::move(next));
    }
    return std::vector<ZetaPolynomial>(m.begin() + 1, m.end());
}

}  // namespace kingman
