#include "skewcap/gauss.hpp"

#include <stdexcept>

namespace skewcap {

GaussRational GaussRational::pow(long e) const {
    if (e < 0) throw std::invalid_argument("GaussRational: negative exponent");
    GaussRational acc(Rational(1)), base(*this);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string GaussRational::to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string s = re.is_zero() ? "" : re.to_string();
    if (im.sign() > 0 && !s.empty()) s += "+";
    if (im == Rational(-1)) {
        s += "-";
    } else if (!(im == Rational(1))) {
        s += im.to_string() + "*";
    }
    s += "i";
    return s;
}

}  // namespace skewcap
