#pragma once

#include <functional>
#include <vector>

#include "kingman/rational.hpp"
#include "kingman/zeta_polynomial.hpp"

namespace kingman {

// Number of fixed-point-free permutations of n elements; memoized.
// d_n = n d_{n-1} + (-1)^n, d_0 = 1; equivalently n! sum_{j<=n} (-1)^j/j!.
BigInt derangement(int n);

// Cumulants of the standard Gumbel law: kappa_1 = gamma,
// kappa_j = (j-1)! zeta(j) for j >= 2.
ZetaPolynomial gumbel_cumulant(int j);

// Raw moments, two routes that must agree exactly:
//   gumbel_moment: Bell-type recursion over the cumulants
//   gumbel_moment_by_partitions: sum over set partitions of {1..n} of
//     prod_{B} kappa_{|B|}
// m_0 = 1.
ZetaPolynomial gumbel_moment(int n);
ZetaPolynomial gumbel_moment_by_partitions(int n);

// Central moments m'_n of the Gumbel law, two routes that must agree:
//   gumbel_central_moment: recursion
//     m'_n = (n-1)! sum_{k=2}^{n} zeta(k) m'_{n-k} / (n-k)!
//   gumbel_central_moment_composition:
//     n! sum_i (1/i!) sum_{n_1..n_i >= 2, sum = n}
//        (prod d_{n_r}/n_r!) s_i(n_1..n_i)
// m'_0 = 1, m'_1 = 0.
ZetaPolynomial gumbel_central_moment(int n);
ZetaPolynomial gumbel_central_moment_composition(int n);

// Raw moments from central moments: sum_j C(n,j) gamma^{n-j} m'_j.
// Must equal gumbel_moment(n).
ZetaPolynomial central_to_raw(int n);

// s_i(n_1..n_i) = sum over i-tuples of distinct positive integers k_r of
// prod k_r^{-n_r}; all parts must be >= 2 so every sum converges.
// Three routes:
//   s_multi_partition:  sum_{partitions pi of {1..i}} (-1)^{i-|pi|}
//                       prod_B (|B|-1)! zeta(n_B)
//   s_multi_recursive:  s_{i+1} = s_i zeta(n_{i+1})
//                       - sum_r s_i(.., n_r + n_{i+1}, ..)
//   s_multi_truncated:  numeric enumeration of the defining tuples with
//                       indices in [1,N]
ZetaPolynomial s_multi_partition(const std::vector<int>& parts);
ZetaPolynomial s_multi_recursive(const std::vector<int>& parts);

// Truncated defining sum. Underestimates the exact value (all terms are
// positive). Throws std::length_error past the enumeration budget.
double s_multi_truncated(const std::vector<int>& parts, long long N);

// Partition of {1..i} into disjoint non-empty blocks; blocks are listed
// in order of their least element, elements ascending within a block.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
};

// Streams every partition of {1..i} exactly once, in restricted-growth-
// string order. Requires 1 <= i <= 14.
void for_each_set_partition(int i, const std::function<void(const SetPartition&)>& visit);

// Materialized variant for small i (guarded at i <= 12).
std::vector<SetPartition> set_partitions(int i);

}  // namespace kingman
