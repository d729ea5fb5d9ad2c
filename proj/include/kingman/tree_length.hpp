#pragma once

#include <optional>

#include "kingman/rational.hpp"

namespace kingman {

// Rate of one external-edge stage of the total length: mu_k = (k-1)/2.
// Satisfies mu_k = merge_rate(k)/k. Requires k >= 2.
Rational edge_rate(int k);

// j-th cumulant of the total tree length started from n lineages:
//   (j-1)! 2^j sum_{k=1}^{n-1} 1/k^j, exact.
Rational cumulant_L(int n, int j);

// j-th raw moment via the inclusion-exclusion form:
//   j! 2^j sum_{k=1}^{n-1} (-1)^{k+1} C(n-1,k) / k^j, exact.
Rational moment_L_alternating(int n, int j);

// Same moment by direct enumeration of nondecreasing tuples:
//   j! 2^j sum_{1 <= k_1 <= ... <= k_j <= n-1} 1/(k_1 ... k_j), exact.
// Throws std::length_error when the tuple count C(n+j-2, j) exceeds
// the enumeration budget of 10^7.
Rational moment_L_ordered(int n, int j);

// CDF of the total length: the maximum of n-1 independent Exp(1/2)
// variables, (1 - e^{-t/2})^{n-1}. Requires n >= 2, t >= 0.
double cdf_L(int n, double t);
double density_L(int n, double t);

// Cumulant of the recentered variable G_n = L_n/2 - log n.
//   j = 1: H_{n-1} - log n   (exact harmonic part plus a symbolic log shift)
//   j >= 2: (j-1)! sum_{k=1}^{n-1} 1/k^j
// The exact rational part is kept for n - 1 within the exact summation
// budget (10^5 terms); beyond it only the numeric value is filled in.
struct ShiftedCumulant {
    long long n = 0;
    int j = 0;
    bool log_offset = false;        // true iff j == 1; value subtracts log n
    std::optional<Rational> exact;  // harmonic part (j = 1) or the full value
    double value = 0.0;             // numeric evaluation, always set
};

ShiftedCumulant gumbel_shift_cumulant(long long n, int j);

}  // namespace kingman
