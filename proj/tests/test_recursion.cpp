#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "kingman/recursion.hpp"
#include "kingman/zeta_values.hpp"

using namespace kingman;

namespace {

double eval_d(const ZetaPolynomial& p) {
    return static_cast<double>(eval_value(p, 30));
}

}  // namespace

TEST_CASE("initial value conventions") {
    for (SeriesKind kind : {SeriesKind::Unsigned, SeriesKind::Signed}) {
        const auto& spec = series_spec(kind);
        CHECK(spec.a(1) == ZetaPolynomial(1));
        CHECK(spec.b(1) == ZetaPolynomial(0));
        // a and b are pure.
        CHECK(spec.a(4) == spec.a(4));
        CHECK(spec.b(4) == spec.b(4));
    }
    CHECK(series_spec(SeriesKind::Unsigned).a(2) == zp_zeta(2));
    CHECK(series_spec(SeriesKind::Unsigned).b(2) == zp_zeta(2) - ZetaPolynomial(1));
    CHECK(series_spec(SeriesKind::Signed).a(2) ==
          zp_log2() * Rational(2) + zp_zeta(2) * Rational(1, 2));
    CHECK(series_spec(SeriesKind::Signed).b(2) ==
          ZetaPolynomial(1) - zp_log2() * Rational(2) + zp_zeta(2) * Rational(1, 2));
    // Spot-check the signed k = 5 initial values against their defining
    // series: a(5) = sum (-1)^k (2k-1)/(k-1)^5, b(5) = sum (-1)^k (2k-1)/k^5.
    long double a5 = 0.0L, b5 = 0.0L;
    for (long long k = 100001; k >= 2; --k) {
        long double s = (k % 2 == 0 ? 1.0L : -1.0L) * (2.0L * k - 1.0L);
        a5 += s / std::pow(static_cast<long double>(k - 1), 5.0L);
        b5 += s / std::pow(static_cast<long double>(k), 5.0L);
    }
    CHECK(std::fabs(eval_d(series_spec(SeriesKind::Signed).a(5)) - static_cast<double>(a5)) < 1e-9);
    CHECK(std::fabs(eval_d(series_spec(SeriesKind::Signed).b(5)) - static_cast<double>(b5)) < 1e-9);
}

TEST_CASE("closed solution matches examples") {
    for (SeriesKind kind : {SeriesKind::Unsigned, SeriesKind::Signed}) {
        const auto& spec = series_spec(kind);
        CHECK(solve_closed(1, 1, spec) == spec.a(1) - spec.b(1));
        CHECK(solve_closed(1, 1, kind) == ZetaPolynomial(1));
    }
    CHECK(solve_closed(2, 2, SeriesKind::Unsigned) == zp_zeta(2) * Rational(2) - ZetaPolynomial(3));
    CHECK(solve_closed(2, 2, SeriesKind::Unsigned).str() == "2\xCE\xB6(2)-3");
    CHECK(eval_numeric(solve_closed(2, 2, SeriesKind::Unsigned), 5) == "0.28987");
    CHECK(solve_closed(3, 3, SeriesKind::Unsigned) ==
          ZetaPolynomial(10) - zp_zeta(2) * Rational(6));
    CHECK(eval_numeric(solve_closed(3, 3, SeriesKind::Unsigned), 5) == "0.13040");
    // Signed diagonal at 2: the log 2 contributions cancel to zeta(2) - 1.
    CHECK(solve_closed(2, 2, SeriesKind::Signed) == zp_zeta(2) - ZetaPolynomial(1));
}

TEST_CASE("closed solution equals recursion oracle") {
    for (SeriesKind kind : {SeriesKind::Unsigned, SeriesKind::Signed}) {
        for (int i = 1; i <= 8; ++i) {
            for (int j = 1; j <= 8; ++j) {
                CHECK(solve_closed(i, j, kind) == solve_by_recursion(i, j, kind));
            }
        }
    }
    CHECK(solve_by_recursion(2, 2, SeriesKind::Signed) == solve_closed(2, 2, SeriesKind::Signed));
    CHECK(solve_by_recursion(4, 4, SeriesKind::Unsigned) ==
          solve_closed(4, 4, SeriesKind::Unsigned));
}

TEST_CASE("closed solution satisfies the defining recursion") {
    for (SeriesKind kind : {SeriesKind::Unsigned, SeriesKind::Signed}) {
        for (int i = 2; i <= 8; ++i) {
            for (int j = 2; j <= 8; ++j) {
                CHECK(solve_closed(i, j, kind) ==
                      solve_closed(i - 1, j, kind) - solve_closed(i, j - 1, kind));
            }
        }
    }
}

TEST_CASE("closed solution with a custom spec") {
    // a(k) = k, b(k) = k^2 as constant polynomials; oracle equality still holds.
    DoubleSequenceSpec spec{
        [](int k) { return ZetaPolynomial(k); },
        [](int k) { return ZetaPolynomial(Rational(k) * Rational(k)); },
    };
    for (int i = 1; i <= 5; ++i) {
        for (int j = 1; j <= 5; ++j) {
            CHECK(solve_closed(i, j, spec) == solve_by_recursion(i, j, spec));
        }
    }
}

TEST_CASE("unsigned diagonal closed form") {
    CHECK(unsigned_diagonal(1) == ZetaPolynomial(1));
    CHECK(unsigned_diagonal(2) == zp_zeta(2) * Rational(2) - ZetaPolynomial(3));
    CHECK(eval_numeric(unsigned_diagonal(2), 5) == "0.28987");
    CHECK(unsigned_diagonal(3) == ZetaPolynomial(10) - zp_zeta(2) * Rational(6));
    CHECK(eval_numeric(unsigned_diagonal(3), 5) == "0.13040");
    for (int j = 1; j <= 10; ++j) {
        CHECK(unsigned_diagonal(j) == solve_closed(j, j, SeriesKind::Unsigned));
    }
}

TEST_CASE("signed diagonal is free of log 2") {
    for (int j = 1; j <= 10; ++j) {
        CHECK_FALSE(solve_closed(j, j, SeriesKind::Signed).contains_kind(GenKind::Log2));
    }
    // Off-diagonal signed values do carry log 2.
    CHECK(solve_closed(1, 2, SeriesKind::Signed).contains_kind(GenKind::Log2));
}

TEST_CASE("truncated diagonal series") {
    const long long K = 1000000;

    auto u2 = diagonal_series_truncated(SeriesKind::Unsigned, 2, K);
    CHECK(std::fabs(u2.value - 0.28987) < 1e-5);
    CHECK(u2.tail_bound < 1e-5);

    auto u1 = diagonal_series_truncated(SeriesKind::Unsigned, 1, K);
    CHECK(std::fabs(u1.value - (1.0 - 1.0 / static_cast<double>(K))) < 1e-12);
    CHECK(std::fabs(1.0 - u1.value) <= u1.tail_bound);

    auto s2 = diagonal_series_truncated(SeriesKind::Signed, 2, K);
    CHECK(std::fabs(s2.value - eval_d(solve_closed(2, 2, SeriesKind::Signed))) < 1e-4);

    // Paired truncation keeps the conditionally convergent j = 1 case usable.
    auto s1 = diagonal_series_truncated(SeriesKind::Signed, 1, K);
    CHECK(std::fabs(s1.value - 1.0) <= s1.tail_bound);
    CHECK(s1.tail_bound < 1e-5);
}

TEST_CASE("numeric consistency of closed forms") {
    const long long K = 1000000;
    for (SeriesKind kind : {SeriesKind::Unsigned, SeriesKind::Signed}) {
        for (int j = 2; j <= 6; ++j) {
            auto t = diagonal_series_truncated(kind, j, K);
            double exact = eval_d(solve_closed(j, j, kind));
            CHECK(std::fabs(exact - t.value) <= t.tail_bound);
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(solve_closed(0, 1, SeriesKind::Unsigned), std::domain_error);
    CHECK_THROWS_AS(solve_closed(1, 0, SeriesKind::Signed), std::domain_error);
    CHECK_THROWS_AS(solve_by_recursion(0, 1, SeriesKind::Unsigned), std::domain_error);
    CHECK_THROWS_AS(unsigned_diagonal(0), std::domain_error);
    CHECK_THROWS_AS(diagonal_series_truncated(SeriesKind::Unsigned, 0, 100), std::domain_error);
    CHECK_THROWS_AS(diagonal_series_truncated(SeriesKind::Unsigned, 2, 1), std::domain_error);
}
