#include "kingman/gumbel.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kingman/absorption.hpp"

namespace kingman {

namespace {

// Elementary-operation budget for truncated tuple enumeration.
constexpr double kTruncBudget = 2.5e8;

void validate_parts(const std::vector<int>& parts) {
    if (parts.empty()) throw std::domain_error("s_multi: need at least one part");
    for (int p : parts) {
        if (p < 2) throw std::domain_error("s_multi: every part must be >= 2, got " + std::to_string(p));
    }
}

void rgs_rec(int pos, int i, std::vector<int>& a, int maxv,
             const std::function<void(const SetPartition&)>& visit) {
    if (pos == i) {
        SetPartition sp;
        sp.blocks.assign(maxv + 1, {});
        for (int k = 0; k < i; ++k) sp.blocks[a[k]].push_back(k + 1);
        visit(sp);
        return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
        a[pos] = v;
        rgs_rec(pos + 1, i, a, std::max(maxv, v), visit);
    }
}

// Ordered compositions of n into parts >= 2, emitted in lexicographic order.
void for_each_composition(int n, std::vector<int>& prefix,
                          const std::function<void(const std::vector<int>&)>& visit) {
    for (int p = 2; p <= n; ++p) {
        if (n - p == 1) continue;  // remainder 1 cannot be completed
        prefix.push_back(p);
        if (p == n) {
            visit(prefix);
        } else {
            for_each_composition(n - p, prefix, visit);
        }
        prefix.pop_back();
    }
}

ZetaPolynomial srec(const std::vector<int>& parts) {
    if (parts.size() == 1) return zp_zeta(parts[0]);
    int q = parts.back();
    std::vector<int> head(parts.begin(), parts.end() - 1);
    ZetaPolynomial s = srec(head) * zp_zeta(q);
    for (std::size_t r = 0; r < head.size(); ++r) {
        std::vector<int> bumped = head;
        bumped[r] += q;
        s -= srec(bumped);
    }
    return s;
}

}  // namespace

BigInt derangement(int n) {
    if (n < 0) throw std::domain_error("derangement: n must be >= 0");
    static std::vector<BigInt> memo{1, 0};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(memo.size()) <= n) {
        int k = static_cast<int>(memo.size());
        BigInt next = BigInt(k) * memo.back() + (k % 2 == 0 ? 1 : -1);
        memo.push_back(next);
    }
    return memo[n];
}

ZetaPolynomial gumbel_cumulant(int j) {
    if (j < 1) throw std::domain_error("gumbel_cumulant: j must be >= 1");
    if (j == 1) return zp_gamma();
    return zp_zeta(j) * Rational(factorial(j - 1));
}

ZetaPolynomial gumbel_moment(int n) {
    if (n < 0) throw std::domain_error("gumbel_moment: n must be >= 0");
    if (n == 0) return ZetaPolynomial(1);
    std::vector<ZetaPolynomial> kappas;
    kappas.reserve(n);
    for (int j = 1; j <= n; ++j) kappas.push_back(gumbel_cumulant(j));
    return cumulants_to_moments(kappas)[n - 1];
}

ZetaPolynomial gumbel_moment_by_partitions(int n) {
    if (n < 0) throw std::domain_error("gumbel_moment_by_partitions: n must be >= 0");
    if (n == 0) return ZetaPolynomial(1);
    ZetaPolynomial acc;
    for_each_set_partition(n, [&](const SetPartition& sp) {
        Monomial m;
        Rational coeff(1);
        for (const auto& block : sp.blocks) {
            int s = static_cast<int>(block.size());
            if (s == 1) {
                m[Generator::gamma()] += 1;
            } else {
                coeff *= Rational(factorial(s - 1));
                m[Generator::zeta(s)] += 1;
            }
        }
        acc.add_term(m, coeff);
    });
    return acc;
}

ZetaPolynomial gumbel_central_moment(int n) {
    if (n < 0) throw std::domain_error("gumbel_central_moment: n must be >= 0");
    std::vector<ZetaPolynomial> m(n + 1);
    m[0] = ZetaPolynomial(1);
    if (n >= 1) m[1] = ZetaPolynomial(0);
    for (int k = 2; k <= n; ++k) {
        ZetaPolynomial acc;
        for (int j = 2; j <= k; ++j) {
            acc += zp_zeta(j) * m[k - j] * Rational(BigInt(1), factorial(k - j));
        }
        m[k] = acc * Rational(factorial(k - 1));
    }
    return m[n];
}

ZetaPolynomial gumbel_central_moment_composition(int n) {
    if (n < 0) throw std::domain_error("gumbel_central_moment_composition: n must be >= 0");
    if (n == 0) return ZetaPolynomial(1);
    if (n == 1) return ZetaPolynomial(0);
    ZetaPolynomial acc;
    std::vector<int> prefix;
    for_each_composition(n, prefix, [&](const std::vector<int>& comp) {
        Rational w(BigInt(1), factorial(static_cast<int>(comp.size())));
        for (int p : comp) w *= Rational(derangement(p), factorial(p));
        acc += s_multi_partition(comp) * w;
    });
    return acc * Rational(factorial(n));
}

ZetaPolynomial central_to_raw(int n) {
    if (n < 0) throw std::domain_error("central_to_raw: n must be >= 0");
    ZetaPolynomial acc;
    for (int j = 0; j <= n; ++j) {
        acc += zp_gamma().pow(n - j) * gumbel_central_moment(j) * Rational(binomial(n, j));
    }
    return acc;
}

ZetaPolynomial s_multi_partition(const std::vector<int>& parts) {
    validate_parts(parts);
    int i = static_cast<int>(parts.size());
    ZetaPolynomial acc;
    for_each_set_partition(i, [&](const SetPartition& sp) {
        ZetaPolynomial term(1);
        for (const auto& block : sp.blocks) {
            int nb = 0;
            for (int e : block) nb += parts[e - 1];
            term *= zp_zeta(nb) * Rational(factorial(static_cast<int>(block.size()) - 1));
        }
        int sign_exp = i - static_cast<int>(sp.blocks.size());
        acc += (sign_exp % 2 == 0) ? term : -term;
    });
    return acc;
}

ZetaPolynomial s_multi_recursive(const std::vector<int>& parts) {
    validate_parts(parts);
    return srec(parts);
}

double s_multi_truncated(const std::vector<int>& parts, long long N) {
    validate_parts(parts);
    int i = static_cast<int>(parts.size());
    if (N < i) throw std::domain_error("s_multi_truncated: need N >= number of parts");

    auto powni = [](long long k, int e) {
        return std::pow(static_cast<long double>(k), static_cast<long double>(-e));
    };

    if (i == 1) {
        if (static_cast<double>(N) > kTruncBudget) throw std::length_error("s_multi_truncated: budget exceeded");
        long double sum = 0.0L;
        for (long long k = N; k >= 1; --k) sum += powni(k, parts[0]);
        return static_cast<double>(sum);
    }

    if (i == 2 || i == 3) {
        if (static_cast<double>(N) * static_cast<double>(N) > kTruncBudget) {
            throw std::length_error("s_multi_truncated: budget exceeded");
        }
        std::vector<std::vector<long double>> pw(i, std::vector<long double>(N + 1, 0.0L));
        for (int r = 0; r < i; ++r) {
            for (long long k = 1; k <= N; ++k) pw[r][k] = powni(k, parts[r]);
        }
        long double sum = 0.0L;
        if (i == 2) {
            // Ordered pairs of distinct indices, smaller contributions first.
            for (long long k2 = N; k2 >= 2; --k2) {
                for (long long k1 = k2 - 1; k1 >= 1; --k1) {
                    sum += pw[0][k1] * pw[1][k2] + pw[0][k2] * pw[1][k1];
                }
            }
        } else {
            // Third index hoisted: for each ordered distinct pair (k1,k2) the
            // inner sum over k3 excludes the two used indices, so the terms
            // are exactly the defining distinct triples, regrouped.
            long double s3 = 0.0L;
            for (long long k = N; k >= 1; --k) s3 += pw[2][k];
            for (long long k1 = N; k1 >= 1; --k1) {
                for (long long k2 = N; k2 >= 1; --k2) {
                    if (k2 == k1) continue;
                    sum += pw[0][k1] * pw[1][k2] * (s3 - pw[2][k1] - pw[2][k2]);
                }
            }
        }
        return static_cast<double>(sum);
    }

    // General case: sorted index sets times all assignments to positions.
    double subsets = 1.0;
    for (int r = 0; r < i; ++r) subsets *= static_cast<double>(N - r) / (r + 1);
    double fact_i = 1.0;
    for (int r = 2; r <= i; ++r) fact_i *= r;
    if (subsets * fact_i > kTruncBudget) throw std::length_error("s_multi_truncated: budget exceeded");

    std::vector<long long> idx(i);
    std::vector<int> perm(i);
    long double sum = 0.0L;
    std::function<void(int, long long)> choose = [&](int pos, long long lo) {
        if (pos == i) {
            std::iota(perm.begin(), perm.end(), 0);
            do {
                long double prod = 1.0L;
                for (int r = 0; r < i; ++r) prod *= powni(idx[perm[r]], parts[r]);
                sum += prod;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (long long v = lo; v <= N - (i - 1 - pos); ++v) {
            idx[pos] = v;
            choose(pos + 1, v + 1);
        }
    };
    choose(0, 1);
    return static_cast<double>(sum);
}

void for_each_set_partition(int i, const std::function<void(const SetPartition&)>& visit) {
    if (i < 1 || i > 14) throw std::domain_error("for_each_set_partition: need 1 <= i <= 14");
    std::vector<int> a(i, 0);
    rgs_rec(0, i, a, -1, visit);
}

std::vector<SetPartition> set_partitions(int i) {
    if (i > 12) throw std::length_error("set_partitions: materializing beyond i = 12 is too large");
    std::vector<SetPartition> out;
    for_each_set_partition(i, [&](const SetPartition& sp) { out.push_back(sp); });
    return out;
}

}  // namespace kingman
