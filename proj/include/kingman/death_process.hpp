#pragma once

#include <vector>

#include "kingman/rational.hpp"

namespace kingman {

// Pure death process on states {1..n}: state i leaves at rate d_i to i-1.
// The spectral decomposition below requires pairwise distinct rates.
struct DeathRateVector {
    int n = 0;
    std::vector<Rational> d;  // d[i-1] is the rate of state i

    // Throws std::domain_error when empty or when two rates coincide.
    explicit DeathRateVector(std::vector<Rational> rates);

    const Rational& rate(int i) const { return d[i - 1]; }
};

// Coalescent death rates d_k = k(k-1)/2 for k = 1..n (state 1 absorbing).
DeathRateVector kingman_rates(int n);

// Lower-triangular R, L with
//   r_ij = prod_{l=j+1}^{i} d_l/(d_l - d_j)
//   l_ij = prod_{l=j}^{i-1} d_{l+1}/(d_l - d_i)
// Construction verifies R L = I and R D = Q R exactly, where D = diag(-d_i)
// and Q is the generator (q_ii = -d_i, q_{i,i-1} = d_i).
struct SpectralPair {
    DeathRateVector rates;
    std::vector<std::vector<Rational>> R;  // row-major, full n x n
    std::vector<std::vector<Rational>> L;
    double conditioning = 0.0;  // max |r_ij|; blows up for nearly equal rates
};

SpectralPair spectral_pair(const DeathRateVector& rates);

// p_ij(t) = sum_{k=j}^{i} e^{-d_k t} r_ik l_kj for 1 <= j <= i <= n, t >= 0.
double transition_probability(const SpectralPair& sp, int i, int j, double t);
double transition_probability(const DeathRateVector& rates, int i, int j, double t);

using DMatrix = std::vector<std::vector<double>>;

// exp(Qt) by scaling and squaring with a truncated series; entrywise error
// below 1e-12 for moderate ||Qt||. Guards: square Q, n <= 16, ||Qt||_inf
// within the scaling budget.
DMatrix matrix_exponential(const DMatrix& Q, double t);

}  // namespace kingman
