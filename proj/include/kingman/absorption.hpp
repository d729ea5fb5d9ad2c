#pragma once

#include <vector>

#include "kingman/rational.hpp"
#include "kingman/zeta_polynomial.hpp"

namespace kingman {

// Rate of the k-to-(k-1) merge step: lambda_k = k(k-1)/2. Requires k >= 1.
Rational merge_rate(int k);

// Mixture weights of the absorption time started from n lineages:
//   a_{nk} = (-1)^k (2k-1) n!(n-1)! / ((n-k)!(n+k-1)!),  2 <= k <= n.
// The weights sum to 1 and |a_{nk}| <= 2k-1.
struct HypoexpCoefficients {
    int n = 0;
    std::vector<Rational> a;  // a[k-2] holds a_{nk}

    const Rational& coeff(int k) const;
};

HypoexpCoefficients hypoexp_coefficients(int n);

// j-th cumulant of the limiting absorption time T, exact:
//   (-1)^j 2^{j+1} sum_{m=0}^{floor(j/2)} (2j-2m-1)!/(j-2m)! zeta(2m)
// with zeta(0) = -1/2. Equals (j-1)! 2^j unsigned_diagonal(j).
ZetaPolynomial cumulant_T(int j);

// j-th raw moment of T, exact:
//   (-1)^j j 2^{j+1} sum_{m=0}^{floor(j/2)}
//       (2m-1)(1-2^{1-2m})(2j-2m-2)!/(j-2m)! zeta(2m).
// Equals j! 2^j solve_closed(j, j, SeriesKind::Signed).
ZetaPolynomial moment_T(int j);

// Brute-force enumeration of j! 2^j sum over 2 <= k_1 <= ... <= k_j <= kmax
// of prod 1/(k_i(k_i-1)). Increasing in kmax with limit moment_T(j).
// Requires 1 <= j <= 4 and kmax >= 2.
double moment_T_ordered_oracle(int j, long long kmax);

// Distribution of T_n (n lineages to one):
//   CDF(t)     = sum_k a_{nk} (1 - e^{-lambda_k t})
//   density(t) = sum_k a_{nk} lambda_k e^{-lambda_k t}
double cdf_T_n(int n, double t);
double density_g_n(int n, double t);
double cdf_T_n(const HypoexpCoefficients& c, double t);
double density_g_n(const HypoexpCoefficients& c, double t);

// Density of T as the truncated series
//   sum_{k=2}^{K} (-1)^k (2k-1) lambda_k e^{-lambda_k t}.
// tail_bound dominates the dropped terms by a geometric series; the bound
// is flagged unreliable when t < 1e-3 or when the term ratio at K is not
// yet below one (the series only behaves well once lambda_k t is large).
struct DensityEstimate {
    double value = 0.0;
    double tail_bound = 0.0;
    bool tail_reliable = false;
};

DensityEstimate density_g(double t, int K);

// Convenience evaluation with K chosen so that the tail bound is far below
// double precision for the given t (t >= 1e-3); returns 0 below that.
double density_g_auto(double t);

// Raw moments from cumulants via m_n = sum_{k=1}^{n} C(n-1,k-1) kappa_k m_{n-k},
// with m_0 = 1. Input kappas[i] is kappa_{i+1}; output[i] is m_{i+1}.
std::vector<ZetaPolynomial> cumulants_to_moments(const std::vector<ZetaPolynomial>& kappas);

}  // namespace kingman
