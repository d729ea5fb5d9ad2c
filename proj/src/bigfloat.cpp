#include "kingman/bigfloat.hpp"

#include <stdexcept>

namespace kingman {

// 50 significant digits each.
const BigFloat& bf_gamma() {
    static const BigFloat v{"0.57721566490153286060651209008240243104215933593992"};
    return v;
}

const BigFloat& bf_log2() {
    static const BigFloat v{"0.69314718055994530941723212145817656807550013436026"};
    return v;
}

const BigFloat& bf_pi() {
    static const BigFloat v{"3.1415926535897932384626433832795028841971693993751"};
    return v;
}

BigFloat to_bigfloat(const Rational& q) {
    return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

std::string fixed_string(const BigFloat& x, int decimals) {
    if (decimals < 0) throw std::domain_error("fixed_string: negative decimals");
    BigFloat scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    BigFloat y = x * scale;
    bool neg = y < 0;
    if (neg) y = -y;
    BigInt scaled = (boost::multiprecision::floor(y + BigFloat(0.5))).convert_to<BigInt>();
    std::string digits = scaled.str();
    if ((int)digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
    std::string out;
    if (neg && scaled != 0) out += '-';
    out += digits.substr(0, digits.size() - decimals);
    if (decimals > 0) {
        out += '.';
        out += digits.substr(digits.size() - decimals);
    }
    return out;
}

}  // namespace kingman
