#pragma once

#include "skewcap/rational.hpp"

#include <string>

namespace skewcap {

// Gaussian rational a + b*i with i^2 = -1.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() : re(0), im(0) {}
    GaussRational(Rational r) : re(std::move(r)), im(0) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    GaussRational pow(long e) const;
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::string to_string() const;
};

}  // namespace skewcap
