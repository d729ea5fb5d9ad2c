#pragma once

#include <functional>

#include "kingman/rational.hpp"
#include "kingman/zeta_polynomial.hpp"

namespace kingman {

// Double sequence s(i,j) defined by s(i,j) = s(i-1,j) - s(i,j-1) with
// initial row s(0,k) = a(k) and column s(k,0) = b(k), k >= 1.
// s(0,0) is never assigned and never consulted.
struct DoubleSequenceSpec {
    std::function<ZetaPolynomial(int)> a;  // row s(0,k)
    std::function<ZetaPolynomial(int)> b;  // column s(k,0)
};

// The two concrete instantiations used for absorption-time moments:
//   Unsigned: s(i,j) = sum_{k>=2} 1 / (k^i (k-1)^j)
//   Signed:   s(i,j) = sum_{k>=2} (-1)^k (2k-1) / (k^i (k-1)^j)
enum class SeriesKind { Unsigned, Signed };

const DoubleSequenceSpec& series_spec(SeriesKind kind);

// Closed solution, exact:
//   sum_{k=1}^{j} (-1)^{j-k} C(i+j-k-1, i-1) a(k)
//   + (-1)^j sum_{k=1}^{i} C(i+j-k-1, j-1) b(k)
// Requires i,j >= 1.
ZetaPolynomial solve_closed(int i, int j, const DoubleSequenceSpec& spec);
ZetaPolynomial solve_closed(int i, int j, SeriesKind kind);  // memoized

// Independent oracle: fills the dynamic-programming table cell by cell
// from the initial row and column using only the defining recursion.
ZetaPolynomial solve_by_recursion(int i, int j, const DoubleSequenceSpec& spec);
ZetaPolynomial solve_by_recursion(int i, int j, SeriesKind kind);

// Exact value of the unsigned diagonal sum_{k>=2} 1/(k(k-1))^j:
//   2 (-1)^j sum_{m=0}^{floor(j/2)} C(2j-2m-1, j-1) zeta(2m)
// with the m=0 term contributing the rational constant (zeta(0) = -1/2).
// Equals solve_closed(j, j, SeriesKind::Unsigned). Requires j >= 1.
ZetaPolynomial unsigned_diagonal(int j);

// Partial sum of the defining diagonal series up to k = K together with a
// bound on |true value - value| that covers both the dropped tail and
// floating-point summation error.
struct TruncatedSum {
    double value;
    double tail_bound;
};

// Unsigned terms are positive and decreasing: integral tail bound.
// Signed terms alternate; consecutive terms (k even with k odd) are added
// in pairs so the remainder is bounded by the first omitted magnitude.
// Requires j >= 1 and K >= 2.
TruncatedSum diagonal_series_truncated(SeriesKind kind, int j, long long K);

}  // namespace kingman
