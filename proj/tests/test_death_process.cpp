#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "kingman/absorption.hpp"
#include "kingman/death_process.hpp"

using namespace kingman;

namespace {

DeathRateVector random_rates(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-60, 60);
    std::uniform_int_distribution<int> den(1, 6);
    std::set<Rational> vals;
    while (static_cast<int>(vals.size()) < n) vals.insert(Rational(num(rng), den(rng)));
    return DeathRateVector(std::vector<Rational>(vals.begin(), vals.end()));
}

DMatrix generator_of(const DeathRateVector& rates) {
    int n = rates.n;
    DMatrix q(n, std::vector<double>(n, 0.0));
    for (int i = 1; i <= n; ++i) {
        q[i - 1][i - 1] = -static_cast<double>(rates.rate(i));
        if (i >= 2) q[i - 1][i - 2] = static_cast<double>(rates.rate(i));
    }
    return q;
}

}  // namespace

TEST_CASE("spectral pair small cases") {
    auto one = spectral_pair(DeathRateVector({Rational(3)}));
    CHECK(one.R == std::vector<std::vector<Rational>>{{Rational(1)}});
    CHECK(one.L == std::vector<std::vector<Rational>>{{Rational(1)}});
    CHECK(one.conditioning == 1.0);

    auto two = spectral_pair(DeathRateVector({Rational(0), Rational(1)}));
    CHECK(two.R == std::vector<std::vector<Rational>>{{Rational(1), Rational(0)},
                                                      {Rational(1), Rational(1)}});
    CHECK(two.L == std::vector<std::vector<Rational>>{{Rational(1), Rational(0)},
                                                      {Rational(-1), Rational(1)}});
}

TEST_CASE("coalescent rates spectral identities") {
    auto sp = spectral_pair(kingman_rates(6));
    // With d_1 = 0 every product for the first column collapses to 1.
    for (int i = 0; i < 6; ++i) CHECK(sp.R[i][0] == Rational(1));

    // Recompute both identities independently of the constructor.
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            Rational rl(0);
            for (int k = 0; k < 6; ++k) rl += sp.R[i][k] * sp.L[k][j];
            CHECK(rl == Rational(i == j ? 1 : 0));

            Rational rd = sp.R[i][j] * -sp.rates.rate(j + 1);
            Rational qr = sp.R[i][j] * -sp.rates.rate(i + 1);
            if (i >= 1) qr += sp.R[i - 1][j] * sp.rates.rate(i + 1);
            CHECK(rd == qr);
        }
    }
}

TEST_CASE("random rate vectors keep the exact identities") {
    std::mt19937 rng(20260816);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 1 + static_cast<int>(rng() % 10);
        auto sp = spectral_pair(random_rates(rng, n));
        for (int i = 0; i < n; ++i) {
            CHECK(sp.R[i][i] == Rational(1));
            CHECK(sp.L[i][i] == Rational(1));
            for (int j = 0; j < n; ++j) {
                Rational rl(0);
                for (int k = 0; k < n; ++k) rl += sp.R[i][k] * sp.L[k][j];
                CHECK(rl == Rational(i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("rate vector validation and conditioning") {
    CHECK_THROWS_AS(DeathRateVector({}), std::domain_error);
    CHECK_THROWS_AS(DeathRateVector({Rational(1), Rational(1)}), std::domain_error);
    CHECK_THROWS_AS(DeathRateVector({Rational(2), Rational(3), Rational(2)}), std::domain_error);

    // Two rates within relative 1e-8 blow up the R entries.
    auto tight = spectral_pair(DeathRateVector(
        {Rational(1), Rational(100000001, 100000000), Rational(3)}));
    CHECK(tight.conditioning > 1e7);

    auto tame = spectral_pair(kingman_rates(8));
    CHECK(tame.conditioning < 1e4);
}

TEST_CASE("transition probabilities") {
    auto sp = spectral_pair(kingman_rates(7));

    for (int i = 1; i <= 7; ++i) {
        for (int j = 1; j <= i; ++j) {
            CHECK(std::fabs(transition_probability(sp, i, j, 0.0) - (i == j ? 1.0 : 0.0)) <
                  1e-12);
        }
    }
    // Absorbing bottom state: rows are honest distributions.
    for (double t : {0.05, 0.3, 1.0, 2.0}) {
        for (int i = 1; i <= 7; ++i) {
            double row = 0.0;
            for (int j = 1; j <= i; ++j) row += transition_probability(sp, i, j, t);
            CHECK(std::fabs(row - 1.0) < 1e-10);
        }
    }
    // Absorption probability is nondecreasing in t.
    for (int i = 2; i <= 6; ++i) {
        double prev = 0.0;
        for (int step = 0; step <= 50; ++step) {
            double p = transition_probability(sp, i, 1, 0.1 * step);
            CHECK(p >= prev - 1e-12);
            prev = p;
        }
    }

    CHECK_THROWS_AS(transition_probability(sp, 0, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(transition_probability(sp, 3, 4, 1.0), std::domain_error);
    CHECK_THROWS_AS(transition_probability(sp, 8, 1, 1.0), std::domain_error);
    CHECK_THROWS_AS(transition_probability(sp, 3, 1, -0.5), std::domain_error);
}

TEST_CASE("absorption time distribution equals bottom-row transition") {
    for (int n = 2; n <= 8; ++n) {
        auto sp = spectral_pair(kingman_rates(n));
        for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            CHECK(std::fabs(transition_probability(sp, n, 1, t) - cdf_T_n(n, t)) < 1e-10);
        }
    }
}

TEST_CASE("matrix exponential basics") {
    DMatrix zero(3, std::vector<double>(3, 0.0));
    DMatrix id = matrix_exponential(zero, 2.5);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(std::fabs(id[i][j] - (i == j ? 1.0 : 0.0)) < 1e-15);
    }

    DMatrix single{{-1.7}};
    CHECK(matrix_exponential(single, 0.9)[0][0] == doctest::Approx(std::exp(-1.53)).epsilon(1e-14));

    auto sp2 = spectral_pair(kingman_rates(2));
    DMatrix p2 = matrix_exponential(generator_of(sp2.rates), 0.7);
    CHECK(p2[1][0] == doctest::Approx(transition_probability(sp2, 2, 1, 0.7)).epsilon(1e-12));
    CHECK(p2[1][1] == doctest::Approx(transition_probability(sp2, 2, 2, 0.7)).epsilon(1e-12));

    CHECK_THROWS_AS(matrix_exponential(DMatrix(17, std::vector<double>(17, 0.0)), 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(matrix_exponential(DMatrix{{1.0, 2.0}}, 1.0), std::domain_error);
    CHECK_THROWS_AS(matrix_exponential(DMatrix{{-1e7}}, 1.0), std::domain_error);
}

TEST_CASE("spectral form matches matrix exponential") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 12; ++rep) {
        int n = 2 + static_cast<int>(rng() % 7);
        // Nonnegative, well-separated rates keep both routes accurate.
        std::vector<Rational> d;
        for (int i = 0; i < n; ++i) d.push_back(Rational(i * 12 + static_cast<int>(rng() % 9), 4));
        auto sp = spectral_pair(DeathRateVector(std::move(d)));
        for (double t : {0.2, 1.0, 3.0}) {
            DMatrix p = matrix_exponential(generator_of(sp.rates), t);
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= i; ++j) {
                    CHECK(std::fabs(p[i - 1][j - 1] - transition_probability(sp, i, j, t)) < 1e-10);
                }
                for (int j = i + 1; j <= n; ++j) CHECK(std::fabs(p[i - 1][j - 1]) < 1e-14);
            }
        }
    }
}

TEST_CASE("chapman-kolmogorov") {
    auto check_ck = [](const SpectralPair& sp, double s, double t) {
        int n = sp.rates.n;
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= i; ++j) {
                double conv = 0.0;
                for (int k = j; k <= i; ++k) {
                    conv += transition_probability(sp, i, k, s) * transition_probability(sp, k, j, t);
                }
                CHECK(std::fabs(conv - transition_probability(sp, i, j, s + t)) < 1e-9);
            }
        }
    };
    check_ck(spectral_pair(kingman_rates(6)), 0.3, 0.4);
    check_ck(spectral_pair(kingman_rates(6)), 0.7, 1.1);
    check_ck(spectral_pair(DeathRateVector({Rational(0), Rational(1, 2), Rational(2),
                                            Rational(9, 2), Rational(7)})),
             0.5, 0.25);
}
