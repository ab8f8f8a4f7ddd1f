#pragma once

#include "skewcap/opmatrix.hpp"
#include "skewcap/weyl.hpp"

#include <vector>

namespace skewcap {

// Subset of the basis {e_i}, i in [+-n], stored as strictly increasing
// positions under the total order 1 < 2 < ... < n < -n < ... < -2 < -1.
// Position r corresponds to label r for r <= n and label r - (vdim+1)
// otherwise, so the volume form is exactly positions 1..vdim.
struct ExtIndex {
    std::vector<int> ranks;
    friend auto operator<=>(const ExtIndex&, const ExtIndex&) = default;
    std::size_t degree() const { return ranks.size(); }
};

int rank_of_label(int label, int vdim);
int label_of_rank(int rank, int vdim);

// Wedge of two sorted index sets: {0, merged} on overlap, else the shuffle
// sign and the merged set.
std::pair<int, ExtIndex> wedge_indices(const ExtIndex& a, const ExtIndex& b);

// Element of the exterior algebra on 'vdim' basis vectors with coefficients
// in PD(Alt_n); coefficients commute past basis vectors, so products compose
// as (w (x) X)(t (x) Y) = wt (x) XY.
class ExtElement {
  public:
    ExtElement(int vdim, int coeff_n);

    static ExtElement zero(int vdim, int coeff_n) { return ExtElement(vdim, coeff_n); }
    static ExtElement scalar(int vdim, int coeff_n, const UPoly& c);
    static ExtElement one(int vdim, int coeff_n) { return scalar(vdim, coeff_n, UPoly(1)); }
    static ExtElement term(int vdim, const ExtIndex& idx, const WeylElement& c);
    // Basis vector from a label in [+-n].
    static ExtElement basis(int vdim, int coeff_n, int label);

    int vdim() const { return vdim_; }
    int coeff_n() const { return coeff_n_; }
    const std::map<ExtIndex, WeylElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator-(const ExtElement& a);
    ExtElement& operator+=(const ExtElement& o);
    ExtElement scale(const UPoly& c) const;
    ExtElement scale(const Rational& c) const { return scale(UPoly(c)); }

    friend bool operator==(const ExtElement& a, const ExtElement& b) {
        return a.vdim_ == b.vdim_ && a.coeff_n_ == b.coeff_n_ && a.terms_ == b.terms_;
    }

    WeylElement coefficient(const ExtIndex& idx) const;

    std::string to_string() const;

    void add_term(const ExtIndex& idx, const WeylElement& c);

  private:
    int vdim_;
    int coeff_n_;
    std::map<ExtIndex, WeylElement> terms_;
};

ExtElement wedge(const ExtElement& a, const ExtElement& b);
inline ExtElement operator*(const ExtElement& a, const ExtElement& b) { return wedge(a, b); }
ExtElement ext_pow(const ExtElement& a, int e);
ExtElement ext_commutator(const ExtElement& a, const ExtElement& b);

// Xi_X = sum_{i,j in [+-n]} e_i e_{-j} (x) X_{i,j} for anti-alternating X.
ExtElement two_form_of_matrix(const OpMatrix& x);

ExtElement tau(int n);          // sum_i e_i e_{-i}
ExtElement theta_minus(int n);  // sum_{i,j} e_i e_j x_{i,j}
ExtElement theta_plus(int n);   // sum_{i,j} e_{-j} e_{-i} d_{i,j}
ExtElement omega(int n);        // theta_minus + 2u tau + theta_plus

// Coefficient of the volume form e_1 ... e_n e_{-n} ... e_{-1}.
WeylElement volume_coefficient(const ExtElement& w);

// Pf via the volume coefficient of Xi_X^n / (2^n n!); the forms Pfaffian
// backend. X must be anti-alternating of even dimension.
WeylElement pf_via_forms(const OpMatrix& x);

// Forms whose coefficients are tracked as generator words, the domain of the
// normal ordering map. Only wedge products of the theta generators (and
// scalars) are ever built this way.
struct WordTerm {
    UPoly coeff;
    std::vector<Generator> word;
};

class WordForm {
  public:
    WordForm(int vdim, int coeff_n);

    static WordForm scalar(int vdim, int coeff_n, const UPoly& c);
    static WordForm theta_minus(int n);
    static WordForm theta_plus(int n);

    int vdim() const { return vdim_; }
    int coeff_n() const { return coeff_n_; }

    friend WordForm operator+(const WordForm& a, const WordForm& b);
    friend WordForm wedge(const WordForm& a, const WordForm& b);
    WordForm pow(int e) const;

    // Coefficient-wise evaluation (words multiplied out in the Weyl algebra).
    ExtElement evaluate() const;
    // Coefficient-wise normal ordering :.: .
    ExtElement normal_order() const;

  private:
    int vdim_;
    int coeff_n_;
    std::map<ExtIndex, std::vector<WordTerm>> terms_;
};

// [tau, theta_-] = [tau, theta_+] = 0 and [theta_+, theta_-] = 2 tau^2.
bool cr_check(int n);

// theta_-^r = 2^r r! sum_{|I|=2r} e_I Pf(x_I) and the theta_+ mirror.
bool theta_power_identity_check(int n, int r);

// m!/(2^k k! (m-2k)!), zero outside 0 <= k <= floor(m/2).
Rational c_coeff(int k, int m);

// (theta_- + theta_+)^m = sum_k c_k(m) (2 tau^2)^k :(theta_- + theta_+)^(m-2k): .
bool expansion_check(int n, int m);

// theta_+^a theta_-^b = sum_k (a)_k (b)_k / k! (2 tau^2)^k theta_-^(b-k) theta_+^(a-k).
bool theta_commutation_check(int n, int a, int b);

// Parity of the shuffle placing [n] \ I before I.
int shuffle_sign(const std::vector<int>& subset, int n);
// Parity of the mirrored shuffle (-[n] \ -I, -I) inside -[n].
int shuffle_sign_mirror(const std::vector<int>& subset, int n);

Rational descending_factorial(int z, int k);

}  // namespace skewcap
