#pragma once

#include "skewcap/weyl.hpp"

namespace skewcap {

// Commutative polynomial on Alt_n in the canonical coordinates x[i,j], i<j,
// with UPoly coefficients. Canonical: no zero coefficients.
class AltPoly {
  public:
    using Monomial = std::map<VarIndex, int>;

    explicit AltPoly(int n);

    static AltPoly zero(int n) { return AltPoly(n); }
    static AltPoly scalar(int n, const UPoly& c);
    static AltPoly one(int n) { return scalar(n, UPoly(1)); }
    // x_{i,j} with the alternating sign convention; zero for i == j.
    static AltPoly variable(int n, int i, int j);
    static AltPoly monomial(int n, const Monomial& m, const UPoly& c);

    int n() const { return n_; }
    const std::map<Monomial, UPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    friend AltPoly operator+(const AltPoly& a, const AltPoly& b);
    friend AltPoly operator-(const AltPoly& a, const AltPoly& b);
    friend AltPoly operator*(const AltPoly& a, const AltPoly& b);
    friend AltPoly operator-(const AltPoly& a);
    AltPoly& operator+=(const AltPoly& o);
    AltPoly scale(const UPoly& c) const;

    friend bool operator==(const AltPoly& a, const AltPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

    void add_term(const Monomial& m, const UPoly& c);

  private:
    int n_;
    std::map<Monomial, UPoly> terms_;
};

// P acting on f, derivations as partial derivatives and multiplications as
// products; right factors act first.
AltPoly apply(const WeylElement& P, const AltPoly& f);

}  // namespace skewcap
