#include "kingman/recursion.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace kingman {

namespace {

void check_indices(int i, int j) {
    if (i < 1 || j < 1) throw std::domain_error("indices must satisfy i >= 1 and j >= 1");
}

ZetaPolynomial unsigned_a(int k) {
    if (k < 1) throw std::domain_error("initial index must be >= 1");
    if (k == 1) return ZetaPolynomial(1);
    return zp_zeta(k);
}

ZetaPolynomial unsigned_b(int k) {
    if (k < 1) throw std::domain_error("initial index must be >= 1");
    if (k == 1) return ZetaPolynomial(0);
    return zp_zeta(k) - ZetaPolynomial(1);
}

ZetaPolynomial signed_a(int k) {
    if (k < 1) throw std::domain_error("initial index must be >= 1");
    if (k == 1) return ZetaPolynomial(1);
    if (k == 2) return zp_log2() * Rational(2) + zp_zeta(2) * Rational(1, 2);
    // 2 (1 - 2^{2-k}) zeta(k-1) + (1 - 2^{1-k}) zeta(k)
    return zp_zeta(k - 1) * (Rational(2) * (Rational(1) - pow2(2 - k))) +
           zp_zeta(k) * (Rational(1) - pow2(1 - k));
}

ZetaPolynomial signed_b(int k) {
    if (k < 1) throw std::domain_error("initial index must be >= 1");
    if (k == 1) return ZetaPolynomial(0);
    if (k == 2) return ZetaPolynomial(1) - zp_log2() * Rational(2) + zp_zeta(2) * Rational(1, 2);
    // 1 - 2 (1 - 2^{2-k}) zeta(k-1) + (1 - 2^{1-k}) zeta(k)
    return ZetaPolynomial(1) - zp_zeta(k - 1) * (Rational(2) * (Rational(1) - pow2(2 - k))) +
           zp_zeta(k) * (Rational(1) - pow2(1 - k));
}

using MemoKey = std::tuple<int, int, int>;
std::map<MemoKey, ZetaPolynomial> g_closed_memo;
std::mutex g_closed_memo_mutex;

}  // namespace

const DoubleSequenceSpec& series_spec(SeriesKind kind) {
    static const DoubleSequenceSpec unsigned_spec{unsigned_a, unsigned_b};
    static const DoubleSequenceSpec signed_spec{signed_a, signed_b};
    return kind == SeriesKind::Unsigned ? unsigned_spec : signed_spec;
}

ZetaPolynomial solve_closed(int i, int j, const DoubleSequenceSpec& spec) {
    check_indices(i, j);
    ZetaPolynomial result;
    for (int k = 1; k <= j; ++k) {
        Rational c(binomial(i + j - k - 1, i - 1));
        if ((j - k) % 2 != 0) c = -c;
        result += spec.a(k) * c;
    }
    ZetaPolynomial col;
    for (int k = 1; k <= i; ++k) {
        col += spec.b(k) * Rational(binomial(i + j - k - 1, j - 1));
    }
    if (j % 2 != 0) {
        result -= col;
    } else {
        result += col;
    }
    return result;
}

ZetaPolynomial solve_closed(int i, int j, SeriesKind kind) {
    check_indices(i, j);
    MemoKey key{static_cast<int>(kind), i, j};
    {
        std::lock_guard<std::mutex> lock(g_closed_memo_mutex);
        auto it = g_closed_memo.find(key);
        if (it != g_closed_memo.end()) return it->second;
    }
    ZetaPolynomial value = solve_closed(i, j, series_spec(kind));
    std::lock_guard<std::mutex> lock(g_closed_memo_mutex);
    return g_closed_memo.emplace(key, std::move(value)).first->second;
}

ZetaPolynomial solve_by_recursion(int i, int j, const DoubleSequenceSpec& spec) {
    check_indices(i, j);
    // Table rows 0..i, columns 0..j; cell (0,0) stays untouched.
    std::vector<std::vector<ZetaPolynomial>> t(i + 1, std::vector<ZetaPolynomial>(j + 1));
    for (int c = 1; c <= j; ++c) t[0][c] = spec.a(c);
    for (int r = 1; r <= i; ++r) t[r][0] = spec.b(r);
    for (int r = 1; r <= i; ++r) {
        for (int c = 1; c <= j; ++c) {
            t[r][c] = t[r - 1][c] - t[r][c - 1];
        }
    }
    return t[i][j];
}

ZetaPolynomial solve_by_recursion(int i, int j, SeriesKind kind) {
    return solve_by_recursion(i, j, series_spec(kind));
}

ZetaPolynomial unsigned_diagonal(int j) {
    if (j < 1) throw std::domain_error("diagonal index must be >= 1");
    ZetaPolynomial result;
    for (int m = 0; 2 * m <= j; ++m) {
        Rational c(binomial(2LL * j - 2 * m - 1, j - 1));
        c *= 2;
        if (j % 2 != 0) c = -c;
        if (m == 0) {
            result += ZetaPolynomial(c * Rational(-1, 2));
        } else {
            result += zp_zeta(2 * m) * c;
        }
    }
    return result;
}

TruncatedSum diagonal_series_truncated(SeriesKind kind, int j, long long K) {
    if (j < 1) throw std::domain_error("diagonal index must be >= 1");
    if (K < 2) throw std::domain_error("truncation point must be >= 2");

    // Kahan-compensated accumulation in long double.
    long double sum = 0.0L, comp = 0.0L, abs_sum = 0.0L;
    auto accumulate = [&](long double term) {
        abs_sum += std::fabs(term);
        long double y = term - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    auto term_at = [&](long long k) -> long double {
        long double base = static_cast<long double>(k) * static_cast<long double>(k - 1);
        long double denom = std::pow(base, static_cast<long double>(j));
        if (kind == SeriesKind::Unsigned) return 1.0L / denom;
        long double t = static_cast<long double>(2 * k - 1) / denom;
        return (k % 2 == 0) ? t : -t;
    };

    long double tail = 0.0L;
    if (kind == SeriesKind::Unsigned) {
        for (long long k = 2; k <= K; ++k) accumulate(term_at(k));
        if (j == 1) {
            // sum_{k>K} 1/(k(k-1)) telescopes to exactly 1/K.
            tail = 1.0L / static_cast<long double>(K);
        } else {
            // 1/(k(k-1))^j < (k-1)^{-2j}; compare with the integral of x^{-2j}.
            long double Kd = static_cast<long double>(K);
            tail = std::pow(Kd, -2.0L * j) + std::pow(Kd, 1.0L - 2.0L * j) / (2.0L * j - 1.0L);
        }
    } else {
        // Add even k with the following odd k as one pair; magnitudes decrease,
        // so the remainder is bounded by the first term left out.
        for (long long k = 2; k <= K; k += 2) {
            if (k + 1 <= K) {
                accumulate(term_at(k) + term_at(k + 1));
            } else {
                accumulate(term_at(k));
            }
        }
        tail = std::fabs(term_at(K + 1));
    }

    // Floating-point error floor: compensated summation keeps the rounding
    // error within a few epsilon of the absolute term mass; the final cast
    // to double and the caller's comparison add a few double ulps more.
    long double eps64 = 2.220446049250313e-16L;
    long double noise = 16.0L * eps64 * (abs_sum + std::fabs(sum));

    TruncatedSum out;
    out.value = static_cast<double>(sum);
    out.tail_bound = static_cast<double>(tail + noise);
    return out;
}

}  // namespace kingman
