#pragma once

#include <compare>
#include <map>
#include <string>

#include "kingman/rational.hpp"

namespace kingman {

enum class GenKind : int { Gamma = 0, Log2 = 1, Zeta = 2 };

// A formal generator: gamma, log 2, or zeta(k) with k >= 2. Ordered by
// (kind, argument) so monomials have one canonical representation.
struct Generator {
    GenKind kind = GenKind::Gamma;
    int arg = 0;  // zeta argument; 0 for gamma/log2

    friend constexpr auto operator<=>(const Generator&, const Generator&) = default;

    static Generator gamma() { return {GenKind::Gamma, 0}; }
    static Generator log_two() { return {GenKind::Log2, 0}; }
    static Generator zeta(int k);  // throws std::domain_error when k < 2

    std::string name() const;  // "gamma", "log2", "zeta(3)"
};

// Multiset of generators, stored as generator -> exponent (every exponent >= 1).
using Monomial = std::map<Generator, int>;

// Exact linear combination of generator monomials over Rational. The empty
// monomial is the constant term. Zero coefficients are never stored.
class ZetaPolynomial {
public:
    ZetaPolynomial() = default;
    ZetaPolynomial(int c) : ZetaPolynomial(Rational(c)) {}
    ZetaPolynomial(const Rational& c);

    static ZetaPolynomial from_generator(Generator g, int exponent = 1);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    bool contains_kind(GenKind k) const;
    int total_degree() const;
    Rational max_abs_coefficient() const;

    void add_term(const Monomial& m, const Rational& coeff);

    ZetaPolynomial& operator+=(const ZetaPolynomial& o);
    ZetaPolynomial& operator-=(const ZetaPolynomial& o);
    ZetaPolynomial& operator*=(const ZetaPolynomial& o);
    ZetaPolynomial& operator*=(const Rational& c);
    ZetaPolynomial operator-() const;
    ZetaPolynomial pow(int e) const;  // e >= 0

    friend bool operator==(const ZetaPolynomial&, const ZetaPolynomial&) = default;

    // Display form, e.g. "8ζ(2)-12" or "γ^3+3γζ(2)+2ζ(3)". Term order follows
    // the conventional presentation: gamma powers descending, then fewer zeta
    // factors first, then larger arguments first; constant last.
    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

ZetaPolynomial operator+(ZetaPolynomial a, const ZetaPolynomial& b);
ZetaPolynomial operator-(ZetaPolynomial a, const ZetaPolynomial& b);
ZetaPolynomial operator*(ZetaPolynomial a, const ZetaPolynomial& b);
ZetaPolynomial operator*(ZetaPolynomial a, const Rational& c);
ZetaPolynomial operator*(const Rational& c, ZetaPolynomial a);

ZetaPolynomial zp_gamma();
ZetaPolynomial zp_log2();
ZetaPolynomial zp_zeta(int k);

// One term of the pi-rewritten form: pi^pi_power times the remaining
// (odd-zeta / gamma / log2) factors.
struct PiMonomial {
    int pi_power = 0;
    Monomial rest;
    friend auto operator<=>(const PiMonomial&, const PiMonomial&) = default;
};

class PiForm {
public:
    const std::map<PiMonomial, Rational>& terms() const { return terms_; }
    void add_term(const PiMonomial& m, const Rational& coeff);
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const PiForm&, const PiForm&) = default;

    std::string str() const;  // e.g. "4/3π^2-12"

private:
    std::map<PiMonomial, Rational> terms_;
};

}  // namespace kingman
