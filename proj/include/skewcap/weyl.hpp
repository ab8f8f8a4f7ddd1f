#pragma once

#include "skewcap/upoly.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace skewcap {

// Canonical coordinate index on Alt_n: strictly upper-triangular, i < j.
// Accessors elsewhere implement the sign flips x[j,i] = -x[i,j] and the zero
// diagonal, so exactly one name exists per independent variable.
struct VarIndex {
    int i;
    int j;
    friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

enum class GenKind { Mult, Deriv };

// One factor of a generator word; indices need not be upper-triangular.
struct Generator {
    GenKind kind;
    int i;
    int j;
};

// Normal-ordered monomial: all multiplication factors left of all
// derivations. Exponents are >= 1; an absent key means exponent 0.
struct WeylMonomial {
    std::map<VarIndex, int> xexp;
    std::map<VarIndex, int> dexp;

    int xdegree() const;
    int ddegree() const;
    int degree() const { return xdegree() + ddegree(); }
    bool is_one() const { return xexp.empty() && dexp.empty(); }

    friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;
    // Graded lexicographic on (xexp, dexp).
    friend bool operator<(const WeylMonomial& a, const WeylMonomial& b);
};

// Element of PD(Alt_n) tensored with polynomials in the central u.
// Canonical: map from normal-ordered monomials to nonzero UPoly
// coefficients, so equality is map equality.
class WeylElement {
  public:
    explicit WeylElement(int n);

    static WeylElement zero(int n) { return WeylElement(n); }
    static WeylElement scalar(int n, const UPoly& c);
    static WeylElement one(int n) { return scalar(n, UPoly(1)); }
    static WeylElement monomial(int n, const WeylMonomial& m, const UPoly& c);

    int n() const { return n_; }
    const std::map<WeylMonomial, UPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool is_scalar() const;
    UPoly scalar_part() const;  // coefficient of the empty monomial

    // Max derivation degree over all monomials (order of the operator);
    // -1 for the zero element.
    int order() const;

    friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator-(const WeylElement& a);
    WeylElement& operator+=(const WeylElement& o);

    WeylElement scale(const UPoly& c) const;
    WeylElement scale(const Rational& c) const { return scale(UPoly(c)); }

    // Substitutes a rational value for u in every coefficient.
    WeylElement eval_u(const Rational& u0) const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::set<VarIndex> x_support() const;
    std::set<VarIndex> d_support() const;
    // Sufficient support-disjointness test used to fuse symmetrized
    // Pfaffian products.
    bool commutes_with(const WeylElement& o) const;

    // Canonical text, terms in descending monomial order:
    // "x[1,2]^2 d[1,3] + u^2 + 1/2".
    std::string to_string() const;

    void add_term(const WeylMonomial& m, const UPoly& c);

  private:
    int n_;
    std::map<WeylMonomial, UPoly> terms_;
};

// x_{i,j} or d_{i,j} as an element: the canonical generator for i < j, its
// negation for i > j, zero for i == j. Indices outside [1,n] are an error.
WeylElement signed_generator(int n, int i, int j, GenKind kind);

// Exact product in canonical normal order. Per variable,
// d^a x^b = sum_k k! C(a,k) C(b,k) x^(b-k) d^(a-k); distinct variables
// commute.
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return weyl_mul(a, b); }

WeylElement commutator(const WeylElement& a, const WeylElement& b);

WeylElement weyl_pow(const WeylElement& a, int e);

// The normal ordering :.: on a generator word: multiplication factors move
// left, derivations right, all commutator corrections discarded; scalar
// signs multiply. The empty word maps to 1.
WeylElement normal_order_word(int n, const std::vector<Generator>& word, const UPoly& coeff = UPoly(1));

// Checks the (A+B)^m expansion in the one-variable Weyl algebra with A = x,
// B = d, [A,B] = -1 central, once for each candidate commutator exponent:
// (A+B)^m = sum_k c_k(m) ([A,B])^e sum_s C(m-2k,s) B^s A^(m-2k-s)
// with e = 2k (squared) or e = k (single).
struct BinomialExpansionCheck {
    bool squared_power_holds;
    bool single_power_holds;
};
BinomialExpansionCheck binomial_central_commutator_check(int m);

}  // namespace skewcap
