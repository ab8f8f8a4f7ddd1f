#pragma once

#include "skewcap/weyl.hpp"

namespace skewcap {

// Fully commutative polynomial in x[i,j] and xi[i,j] (the symbol of d[i,j]),
// UPoly coefficients.
class SymbolPoly {
  public:
    struct Monomial {
        std::map<VarIndex, int> xexp;
        std::map<VarIndex, int> xiexp;
        int xidegree() const;
        friend auto operator<=>(const Monomial&, const Monomial&) = default;
    };

    explicit SymbolPoly(int n);

    static SymbolPoly zero(int n) { return SymbolPoly(n); }
    static SymbolPoly scalar(int n, const UPoly& c);
    static SymbolPoly one(int n) { return scalar(n, UPoly(1)); }
    // Signed generators: kind Mult gives x[i,j], Deriv gives xi[i,j].
    static SymbolPoly variable(int n, int i, int j, GenKind kind);

    int n() const { return n_; }
    const std::map<Monomial, UPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend SymbolPoly operator+(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator-(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator-(const SymbolPoly& a);
    SymbolPoly& operator+=(const SymbolPoly& o);
    SymbolPoly scale(const UPoly& c) const;

    friend bool operator==(const SymbolPoly& a, const SymbolPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

    void add_term(const Monomial& m, const UPoly& c);

  private:
    int n_;
    std::map<Monomial, UPoly> terms_;
};

// Every derivation replaced by its symbol, all monomials kept.
SymbolPoly total_symbol(const WeylElement& P);
// Only the monomials of maximal derivation degree survive.
SymbolPoly principal_symbol(const WeylElement& P);

}  // namespace skewcap
