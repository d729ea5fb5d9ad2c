#include "kingman/death_process.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace kingman {

namespace {

std::vector<std::vector<Rational>> zero_matrix(int n) {
    return std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0)));
}

}  // namespace

DeathRateVector::DeathRateVector(std::vector<Rational> rates) : n(static_cast<int>(rates.size())), d(std::move(rates)) {
    if (n < 1) throw std::domain_error("DeathRateVector: need at least one rate");
    std::set<Rational> seen(d.begin(), d.end());
    if (static_cast<int>(seen.size()) != n) {
        throw std::domain_error("DeathRateVector: rates must be pairwise distinct");
    }
}

DeathRateVector kingman_rates(int n) {
    std::vector<Rational> d;
    d.reserve(n);
    for (int k = 1; k <= n; ++k) d.emplace_back(BigInt(k) * (k - 1), BigInt(2));
    return DeathRateVector(std::move(d));
}

SpectralPair spectral_pair(const DeathRateVector& rates) {
    int n = rates.n;
    SpectralPair sp{rates, zero_matrix(n), zero_matrix(n), 0.0};

    // r_jj = 1; r_{i+1,j} = r_ij * d_{i+1}/(d_{i+1} - d_j).
    for (int j = 1; j <= n; ++j) {
        sp.R[j - 1][j - 1] = Rational(1);
        for (int i = j + 1; i <= n; ++i) {
            sp.R[i - 1][j - 1] =
                sp.R[i - 2][j - 1] * rates.rate(i) / (rates.rate(i) - rates.rate(j));
        }
    }
    // l_ii = 1; l_{i,j-1} = l_ij * d_j/(d_{j-1} - d_i).
    for (int i = 1; i <= n; ++i) {
        sp.L[i - 1][i - 1] = Rational(1);
        for (int j = i; j >= 2; --j) {
            sp.L[i - 1][j - 2] =
                sp.L[i - 1][j - 1] * rates.rate(j) / (rates.rate(j - 1) - rates.rate(i));
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double a = std::fabs(static_cast<double>(sp.R[i][j]));
            if (a > sp.conditioning) sp.conditioning = a;
        }
    }

    // Construction-time verification: R L = I.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational acc(0);
            for (int k = 0; k < n; ++k) acc += sp.R[i][k] * sp.L[k][j];
            if (acc != Rational(i == j ? 1 : 0)) {
                throw std::logic_error("spectral_pair: R L != I");
            }
        }
    }
    // Construction-time verification: R D = Q R with D = diag(-d), Q the
    // lower-bidiagonal generator.
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Rational lhs = sp.R[i - 1][j - 1] * -rates.rate(j);
            Rational rhs = sp.R[i - 1][j - 1] * -rates.rate(i);
            if (i >= 2) rhs += sp.R[i - 2][j - 1] * rates.rate(i);
            if (lhs != rhs) throw std::logic_error("spectral_pair: R D != Q R");
        }
    }
    return sp;
}

double transition_probability(const SpectralPair& sp, int i, int j, double t) {
    int n = sp.rates.n;
    if (j < 1 || i < j || i > n) throw std::domain_error("transition_probability: need 1 <= j <= i <= n");
    if (t < 0) throw std::domain_error("transition_probability: need t >= 0");
    double sum = 0.0;
    for (int k = j; k <= i; ++k) {
        double rate = static_cast<double>(sp.rates.rate(k));
        sum += std::exp(-rate * t) * static_cast<double>(sp.R[i - 1][k - 1]) *
               static_cast<double>(sp.L[k - 1][j - 1]);
    }
    return sum;
}

double transition_probability(const DeathRateVector& rates, int i, int j, double t) {
    return transition_probability(spectral_pair(rates), i, j, t);
}

DMatrix matrix_exponential(const DMatrix& Q, double t) {
    int n = static_cast<int>(Q.size());
    if (n < 1 || n > 16) throw std::domain_error("matrix_exponential: need 1 <= n <= 16");
    for (const auto& row : Q) {
        if (static_cast<int>(row.size()) != n) throw std::domain_error("matrix_exponential: Q must be square");
    }
    if (t < 0) throw std::domain_error("matrix_exponential: need t >= 0");

    double norm = 0.0;
    for (const auto& row : Q) {
        double s = 0.0;
        for (double v : row) s += std::fabs(v) * t;
        if (s > norm) norm = s;
    }
    if (norm > 1e6) throw std::domain_error("matrix_exponential: ||Qt|| beyond scaling budget");

    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }

    auto matmul = [n](const DMatrix& a, const DMatrix& b) {
        DMatrix c(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                double aik = a[i][k];
                if (aik == 0.0) continue;
                for (int j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
            }
        }
        return c;
    };

    DMatrix a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Q[i][j] * t * scale;
    }

    // Taylor series of exp(a) with ||a|| <= 0.5: terms shrink at least
    // geometrically, 30 terms push truncation far below 1e-16.
    DMatrix result(n, std::vector<double>(n, 0.0));
    DMatrix term(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        result[i][i] = 1.0;
        term[i][i] = 1.0;
    }
    for (int k = 1; k <= 30; ++k) {
        term = matmul(term, a);
        double inv = 1.0 / k;
        double max_abs = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                term[i][j] *= inv;
                result[i][j] += term[i][j];
                max_abs = std::max(max_abs, std::fabs(term[i][j]));
            }
        }
        if (max_abs < 1e-20) break;
    }
    for (int s = 0; s < squarings; ++s) result = matmul(result, result);
    return result;
}

}  // namespace kingman
