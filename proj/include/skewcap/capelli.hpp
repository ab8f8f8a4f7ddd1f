#pragma once

#include "skewcap/altpoly.hpp"
#include "skewcap/pfaffian.hpp"
#include "skewcap/symbol.hpp"
#include "skewcap/upoly.hpp"

#include <cstdint>
#include <string>

namespace skewcap {

// Gamma_k = sum over 2k-subsets I of [n] of Pf(x_I) Pf(d_I), factors in that
// order. Gamma_0 = 1 by the empty-Pfaffian convention.
struct GammaOperator {
    int n;
    int k;
    WeylElement element;
};

GammaOperator gamma(int n, int k);

// H_m by the explicit sum m! sum_k (-1)^k 2^(m-2k) / (k! (m-2k)!) x^(m-2k).
UPoly hermite(int m);

// a_m(u) = sum_k m! / (2^(2k) (m-2k)! k!) u^(m-2k); monic of degree m.
UPoly a_poly(int m);

// (-i/2)^m H_m(iu) expands to a_m(u) with vanishing imaginary part.
bool hermite_relation_check(int m);

struct HermiteData {
    int m;
    UPoly hermite;  // H_m, integer coefficients
    UPoly a;        // a_m(u), monic of degree m
};
HermiteData hermite_data(int m);

struct MainIdentityReport {
    int n;
    std::string backend;
    bool pass;
    std::size_t delta_term_count;
    std::size_t pf_term_count;
    std::int64_t millis;
    WeylElement pf;     // Pf(Phi(u))
    WeylElement delta;  // Pf(Phi(u)) - sum_k a_{n-2k}(u) Gamma_k
};

// Pf(Phi(u)) against sum_k a_{n-2k}(u) Gamma_k; failure is a report, not an
// error. backend must be Restricted or Forms.
MainIdentityReport main_identity_check(int n, PfBackend backend);

// Commutative sigma-level identity: Pf of the xi-substituted PhiTilde equals
// sum_k u^(n-2k) sum_I Pf(x_I) Pf(xi_I).
bool symbol_identity_check(int n);

// [dpi(E_{i,j}), Gamma_k] = 0 for all i, j, k and [dpi(E_{i,j}), Pf(Phi(u))] = 0.
bool invariance_check(int n);

// pi(g) (Pf(Phi(u0)) (pi(g)^{-1} f)) = Pf(Phi(u0)) f at max(4, n+1) rational
// samples u0.
bool group_invariance_spot_check(int n, const ScalarMatrix& g, const AltPoly& f);

}  // namespace skewcap
