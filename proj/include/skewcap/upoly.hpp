#pragma once

#include "skewcap/rational.hpp"

#include <map>
#include <string>

namespace skewcap {

// Univariate polynomial in the central indeterminate u, exact rational
// coefficients. Canonical: no zero coefficient is ever stored; the zero
// polynomial is the empty map.
class UPoly {
  public:
    UPoly() = default;
    UPoly(const Rational& c) {
        if (!c.is_zero()) coeffs_[0] = c;
    }
    UPoly(long c) : UPoly(Rational(c)) {}

    static UPoly u(int exp = 1) { return monomial(exp, Rational(1)); }
    static UPoly monomial(int exp, const Rational& c);

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    Rational coeff(int exp) const;
    Rational constant() const { return coeff(0); }

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a);
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o) { return *this += -o; }

    UPoly scale(const Rational& c) const;
    Rational eval(const Rational& x) const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator<(const UPoly& a, const UPoly& b) { return a.coeffs_ < b.coeffs_; }

    // Descending powers, e.g. "u^2 + 1/2". `var` names the indeterminate.
    std::string to_string(const std::string& var = "u") const;

  private:
    std::map<int, Rational> coeffs_;
};

}  // namespace skewcap
