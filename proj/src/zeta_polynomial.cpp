#include "kingman/zeta_polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace kingman {

Generator Generator::zeta(int k) {
    if (k < 2) throw std::domain_error("Generator::zeta: argument must be >= 2");
    return {GenKind::Zeta, k};
}

std::string Generator::name() const {
    switch (kind) {
        case GenKind::Gamma: return "gamma";
        case GenKind::Log2: return "log2";
        case GenKind::Zeta: return "zeta(" + std::to_string(arg) + ")";
    }
    throw std::logic_error("Generator::name: bad kind");
}

ZetaPolynomial::ZetaPolynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

ZetaPolynomial ZetaPolynomial::from_generator(Generator g, int exponent) {
    if (exponent < 0) throw std::domain_error("from_generator: negative exponent");
    ZetaPolynomial p;
    if (exponent == 0) return ZetaPolynomial(1);
    p.terms_.emplace(Monomial{{g, exponent}}, Rational(1));
    return p;
}

bool ZetaPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ZetaPolynomial::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational ZetaPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool ZetaPolynomial::contains_kind(GenKind k) const {
    for (const auto& [mono, c] : terms_)
        for (const auto& [g, e] : mono)
            if (g.kind == k) return true;
    return false;
}

int ZetaPolynomial::total_degree() const {
    int deg = 0;
    for (const auto& [mono, c] : terms_) {
        int d = 0;
        for (const auto& [g, e] : mono) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

Rational ZetaPolynomial::max_abs_coefficient() const {
    Rational m = 0;
    for (const auto& [mono, c] : terms_) m = std::max(m, Rational(abs(c)));
    return m;
}

void ZetaPolynomial::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    for (const auto& [g, e] : m) {
        if (e < 1) throw std::domain_error("add_term: exponent must be >= 1");
        if (g.kind == GenKind::Zeta && g.arg < 2) throw std::domain_error("add_term: zeta argument must be >= 2");
    }
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ZetaPolynomial& ZetaPolynomial::operator+=(const ZetaPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ZetaPolynomial& ZetaPolynomial::operator-=(const ZetaPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ZetaPolynomial& ZetaPolynomial::operator*=(const ZetaPolynomial& o) {
    ZetaPolynomial out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [g, e] : mb) m[g] += e;
            out.add_term(m, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

ZetaPolynomial& ZetaPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

ZetaPolynomial ZetaPolynomial::operator-() const {
    ZetaPolynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

ZetaPolynomial ZetaPolynomial::pow(int e) const {
    if (e < 0) throw std::domain_error("ZetaPolynomial::pow: negative exponent");
    ZetaPolynomial acc(1);
    for (int i = 0; i < e; ++i) acc *= *this;
    return acc;
}

ZetaPolynomial operator+(ZetaPolynomial a, const ZetaPolynomial& b) { return a += b; }
ZetaPolynomial operator-(ZetaPolynomial a, const ZetaPolynomial& b) { return a -= b; }
ZetaPolynomial operator*(ZetaPolynomial a, const ZetaPolynomial& b) { return a *= b; }
ZetaPolynomial operator*(ZetaPolynomial a, const Rational& c) { return a *= c; }
ZetaPolynomial operator*(const Rational& c, ZetaPolynomial a) { return a *= c; }

ZetaPolynomial zp_gamma() { return ZetaPolynomial::from_generator(Generator::gamma()); }
ZetaPolynomial zp_log2() { return ZetaPolynomial::from_generator(Generator::log_two()); }
ZetaPolynomial zp_zeta(int k) { return ZetaPolynomial::from_generator(Generator::zeta(k)); }

namespace {

int exponent_of(const Monomial& m, GenKind k) {
    int e = 0;
    for (const auto& [g, x] : m)
        if (g.kind == k) e += x;
    return e;
}

// Zeta arguments of a monomial, one entry per factor, descending.
std::vector<int> zeta_args_desc(const Monomial& m) {
    std::vector<int> v;
    for (const auto& [g, e] : m)
        if (g.kind == GenKind::Zeta)
            for (int i = 0; i < e; ++i) v.push_back(g.arg);
    std::sort(v.rbegin(), v.rend());
    return v;
}

// Presentation order: constant last; gamma powers descending; log2 powers
// descending; fewer zeta factors first; then larger arguments first.
bool display_before(const Monomial& a, const Monomial& b) {
    if (a.empty() != b.empty()) return !a.empty();
    int ga = exponent_of(a, GenKind::Gamma), gb = exponent_of(b, GenKind::Gamma);
    if (ga != gb) return ga > gb;
    int la = exponent_of(a, GenKind::Log2), lb = exponent_of(b, GenKind::Log2);
    if (la != lb) return la > lb;
    auto za = zeta_args_desc(a), zb = zeta_args_desc(b);
    if (za.size() != zb.size()) return za.size() < zb.size();
    return za > zb;
}

std::string coefficient_prefix(const Rational& c, bool leading, bool unit_suppressible) {
    Rational a = abs(c);
    std::string sign = (c < 0) ? "-" : (leading ? "" : "+");
    if (unit_suppressible && a == 1) return sign;
    return sign + to_fraction_string(a);
}

std::string monomial_string(const Monomial& m) {
    std::string out;
    for (const auto& [g, e] : m) {
        std::string base;
        switch (g.kind) {
            case GenKind::Gamma: base = "γ"; break;
            case GenKind::Log2: base = "log2"; break;
            case GenKind::Zeta: base = "ζ(" + std::to_string(g.arg) + ")"; break;
        }
        out += base;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

std::string ZetaPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(),
                     [](auto* x, auto* y) { return display_before(x->first, y->first); });
    // A two-term difference like 160 - 96z(2) reads better constant-first
    // than with a leading minus; longer sums keep the systematic order.
    if (order.size() == 2 && order[1]->first.empty() && order[0]->second < 0 &&
        order[1]->second > 0) {
        std::swap(order[0], order[1]);
    }
    std::string out;
    bool leading = true;
    for (auto* t : order) {
        const auto& [m, c] = *t;
        out += coefficient_prefix(c, leading, !m.empty());
        out += monomial_string(m);
        leading = false;
    }
    return out;
}

void PiForm::add_term(const PiMonomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

// Pure pi powers first, descending; then terms with residual zeta factors,
// ordered by descending zeta arguments (a run extending a shared prefix
// outranks the prefix), ties broken by ascending pi power; constant last.
bool pi_display_before(const PiMonomial& a, const PiMonomial& b) {
    bool ca = a.rest.empty() && a.pi_power == 0;
    bool cb = b.rest.empty() && b.pi_power == 0;
    if (ca != cb) return !ca;
    bool pa = a.rest.empty(), pb = b.rest.empty();
    if (pa != pb) return pa;
    if (pa) return a.pi_power > b.pi_power;
    auto za = zeta_args_desc(a.rest), zb = zeta_args_desc(b.rest);
    if (za != zb) return za > zb;
    return a.pi_power < b.pi_power;
}

}  // namespace

std::string PiForm::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const PiMonomial, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(),
                     [](auto* x, auto* y) { return pi_display_before(x->first, y->first); });
    if (order.size() == 2 && order[1]->first.rest.empty() && order[1]->first.pi_power == 0 &&
        order[0]->second < 0 && order[1]->second > 0) {
        std::swap(order[0], order[1]);
    }
    std::string out;
    bool leading = true;
    for (auto* t : order) {
        const auto& [m, c] = *t;
        bool has_factors = m.pi_power > 0 || !m.rest.empty();
        out += coefficient_prefix(c, leading, has_factors);
        if (m.pi_power > 0) {
            out += "π";
            if (m.pi_power > 1) out += "^" + std::to_string(m.pi_power);
        }
        out += monomial_string(m.rest);
        leading = false;
    }
    return out;
}

}  // namespace kingman
