#include "kingman/zeta_values.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace kingman {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};  // B_0

std::mutex g_zeta_mutex;
std::map<int, BigFloat> g_zeta_cache;

BigFloat pow10(int e) {
    BigFloat r = 1;
    BigFloat b = e >= 0 ? BigFloat(10) : BigFloat(1) / 10;
    for (int i = std::abs(e); i > 0; --i) r *= b;
    return r;
}

// zeta(k) = sum_{i<N} i^-k + N^(1-k)/(k-1) + N^-k/2
//           + sum_r B_{2r}/(2r)! * k(k+1)...(k+2r-2) * N^(-k-2r+1) + R.
// x^-k is completely monotone, so |R| is at most the first omitted correction
// term. N doubles if the correction terms stop shrinking before the target.
BigFloat euler_maclaurin_zeta(int k, const BigFloat& target) {
    for (long long n = 64;; n *= 2) {
        BigFloat direct = 0;
        for (long long i = 1; i < n; ++i) direct += pow(BigFloat(i), -k);
        BigFloat nf(n);
        BigFloat tail = pow(nf, 1 - k) / (k - 1) + pow(nf, -k) / 2;
        BigFloat npow = pow(nf, -k - 1);  // N^(-k-2r+1) at r=1
        BigInt poch = k;                  // k(k+1)...(k+2r-2) at r=1
        BigFloat prev_abs = 0;
        for (int r = 1; r <= 120; ++r) {
            BigFloat term = to_bigfloat(bernoulli(2 * r) / factorial(2 * r)) * BigFloat(poch) * npow;
            BigFloat a = abs(term);
            if (a < target) return direct + tail;  // remainder bounded by |term|
            if (r > 1 && a >= prev_abs) break;     // asymptotic series turned; need larger N
            tail += term;
            prev_abs = a;
            poch *= BigInt(k + 2 * r - 1) * BigInt(k + 2 * r);
            npow /= nf * nf;
        }
    }
}

}  // namespace

const Rational& bernoulli(int n) {
    if (n < 0) throw std::domain_error("bernoulli: negative index");
    std::lock_guard lock(g_bernoulli_mutex);
    while ((int)g_bernoulli.size() <= n) {
        int m = (int)g_bernoulli.size();
        Rational s = 0;
        for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * g_bernoulli[k];
        g_bernoulli.push_back(-s / (m + 1));
    }
    return g_bernoulli[n];
}

Rational zeta_even_coefficient(int m) {
    if (m < 0) throw std::domain_error("zeta_even_coefficient: negative index");
    if (m == 0) return Rational(-1, 2);
    // zeta(2m) = (-1)^(m-1) (2pi)^(2m) / (2 (2m)!) * B_{2m}
    Rational c = bernoulli(2 * m) * pow2(2 * m) / (2 * Rational(factorial(2 * m)));
    return (m % 2 == 0) ? -c : c;
}

PiForm to_pi_form(const ZetaPolynomial& p) {
    PiForm out;
    for (const auto& [mono, coeff] : p.terms()) {
        PiMonomial key;
        Rational c = coeff;
        for (const auto& [g, e] : mono) {
            if (g.kind == GenKind::Zeta && g.arg % 2 == 0) {
                key.pi_power += g.arg * e;
                c *= rational_pow(zeta_even_coefficient(g.arg / 2), e);
            } else {
                key.rest.emplace(g, e);
            }
        }
        out.add_term(key, c);
    }
    return out;
}

const BigFloat& zeta_value(int k) {
    if (k < 2) throw std::domain_error("zeta_value: argument must be >= 2");
    std::lock_guard lock(g_zeta_mutex);
    auto it = g_zeta_cache.find(k);
    if (it == g_zeta_cache.end()) {
        static const BigFloat target = pow10(-72);
        it = g_zeta_cache.emplace(k, euler_maclaurin_zeta(k, target)).first;
    }
    return it->second;
}

BigFloat zeta_numeric(int k, int digits) {
    if (digits < 1 || digits > 70) throw std::domain_error("zeta_numeric: digits out of range");
    return zeta_value(k);
}

BigFloat generator_value(const Generator& g) {
    switch (g.kind) {
        case GenKind::Gamma: return bf_gamma();
        case GenKind::Log2: return bf_log2();
        case GenKind::Zeta: return zeta_value(g.arg);
    }
    throw std::logic_error("generator_value: bad kind");
}

namespace {

struct EvalAccumulator {
    BigFloat total = 0;
    BigFloat abs_sum = 0;        // bound on sum of |term| (rounding error scale)
    BigFloat embedded_sum = 0;   // |term| * (embedded-constant factor count)

    void add(const BigFloat& v, int embedded_factors) {
        total += v;
        BigFloat a = abs(v);
        abs_sum += a;
        embedded_sum += a * embedded_factors;
    }

    // Certify |error| < 10^(-digits)/2: embedded constants are truncated at
    // kConstantDigits significant digits; everything else rounds at working
    // precision (76 digits, with generous slack for the zeta cache).
    void certify(int digits) const {
        BigFloat bound = embedded_sum * pow10(-kConstantDigits + 1) + (abs_sum + 1) * pow10(-70);
        if (!(bound < pow10(-digits) / 2))
            throw precision_exceeded("requested digits exceed certified precision for this value");
    }
};

}  // namespace

BigFloat eval_value(const ZetaPolynomial& p, int digits) {
    if (digits < 1 || digits > 50) throw std::domain_error("eval_value: digits must be in [1,50]");
    EvalAccumulator acc;
    for (const auto& [mono, coeff] : p.terms()) {
        BigFloat v = to_bigfloat(coeff);
        int embedded = 0;
        for (const auto& [g, e] : mono) {
            v *= pow(generator_value(g), e);
            if (g.kind != GenKind::Zeta) embedded += e;
        }
        acc.add(v, embedded);
    }
    acc.certify(digits);
    return acc.total;
}

BigFloat eval_value(const PiForm& f, int digits) {
    if (digits < 1 || digits > 50) throw std::domain_error("eval_value: digits must be in [1,50]");
    EvalAccumulator acc;
    for (const auto& [mono, coeff] : f.terms()) {
        BigFloat v = to_bigfloat(coeff);
        int embedded = 0;
        if (mono.pi_power > 0) {
            v *= pow(bf_pi(), mono.pi_power);
            embedded += mono.pi_power;
        }
        for (const auto& [g, e] : mono.rest) {
            v *= pow(generator_value(g), e);
            if (g.kind != GenKind::Zeta) embedded += e;
        }
        acc.add(v, embedded);
    }
    acc.certify(digits);
    return acc.total;
}

std::string eval_numeric(const ZetaPolynomial& p, int digits) {
    return fixed_string(eval_value(p, digits), digits);
}

std::string eval_numeric(const PiForm& f, int digits) {
    return fixed_string(eval_value(f, digits), digits);
}

}  // namespace kingman
