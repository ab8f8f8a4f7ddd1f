#include "skewcap/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace skewcap {

UPoly UPoly::monomial(int exp, const Rational& c) {
    if (exp < 0) throw std::invalid_argument("UPoly: negative exponent");
    UPoly p;
    if (!c.is_zero()) p.coeffs_[exp] = c;
    return p;
}

Rational UPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    r += b;
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator-(const UPoly& a) {
    UPoly r;
    for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            Rational c = ca * cb;
            auto it = r.coeffs_.find(ea + eb);
            if (it == r.coeffs_.end()) {
                if (!c.is_zero()) r.coeffs_.emplace(ea + eb, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) r.coeffs_.erase(it);
            }
        }
    return r;
}

UPoly UPoly::scale(const Rational& c) const {
    UPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, co] : coeffs_) r.coeffs_[e] = co * c;
    return r;
}

Rational UPoly::eval(const Rational& x) const {
    // Horner over the sparse descending coefficients.
    Rational acc(0);
    int prev_exp = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (prev_exp >= 0) acc = acc * x.pow(prev_exp - it->first);
        acc += it->second;
        prev_exp = it->first;
    }
    if (prev_exp > 0) acc = acc * x.pow(prev_exp);
    return acc;
}

std::string UPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        const int e = it->first;
        if (e == 0) {
            os << c.to_string();
        } else {
            if (!(c == Rational(1))) os << c.to_string() << " ";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace skewcap
