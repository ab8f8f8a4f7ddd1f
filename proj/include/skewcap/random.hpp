#pragma once

#include "skewcap/altpoly.hpp"
#include "skewcap/opmatrix.hpp"
#include "skewcap/weyl.hpp"

#include <cstdint>
#include <random>

namespace skewcap {

// Seed-deterministic generator for property suites. Bounded draws go through
// modulo reduction on the raw mt19937_64 stream, so identical seeds give
// identical inputs on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    int int_in(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(int max_abs_num = 9, int max_den = 4) {
        const int num = int_in(-max_abs_num, max_abs_num);
        const int den = int_in(1, max_den);
        return Rational(num, den);
    }

    Rational nonzero_rational(int max_abs_num = 9, int max_den = 4) {
        while (true) {
            Rational r = rational(max_abs_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    UPoly upoly(int max_deg = 3, int max_abs_num = 9) {
        UPoly p;
        const int deg = int_in(0, max_deg);
        for (int e = 0; e <= deg; ++e)
            if (int_in(0, 1)) p += UPoly::monomial(e, rational(max_abs_num, 3));
        if (p.is_zero()) p = UPoly(rational(max_abs_num, 3));
        return p;
    }

    ScalarMatrix invertible_matrix(int dim, int max_abs = 4) {
        while (true) {
            ScalarMatrix g(dim, Rational(0));
            for (int i = 1; i <= dim; ++i)
                for (int j = 1; j <= dim; ++j) g.at(i, j) = Rational(int_in(-max_abs, max_abs));
            if (!det(g).is_zero()) return g;
        }
    }

    ScalarMatrix invertible_rational_matrix(int dim, int max_abs = 3, int max_den = 3) {
        while (true) {
            ScalarMatrix g(dim, Rational(0));
            for (int i = 1; i <= dim; ++i)
                for (int j = 1; j <= dim; ++j) g.at(i, j) = rational(max_abs, max_den);
            if (!det(g).is_zero()) return g;
        }
    }

    // Random invertible matrix rescaled to determinant 1.
    ScalarMatrix special_linear_matrix(int dim, int max_abs = 3) {
        ScalarMatrix g = invertible_matrix(dim, max_abs);
        const Rational d = det(g);
        for (int j = 1; j <= dim; ++j) g.at(1, j) = g.at(1, j) / d;
        return g;
    }

    // Single-monomial element c * x^a d^b over small exponents.
    WeylElement weyl_monomial(int n, int max_factors = 2, int max_abs_num = 3) {
        WeylMonomial m;
        const int fx = int_in(0, max_factors);
        for (int t = 0; t < fx; ++t) {
            const int i = int_in(1, n - 1);
            const int j = int_in(i + 1, n);
            m.xexp[VarIndex{i, j}] += 1;
        }
        const int fd = int_in(0, max_factors);
        for (int t = 0; t < fd; ++t) {
            const int i = int_in(1, n - 1);
            const int j = int_in(i + 1, n);
            m.dexp[VarIndex{i, j}] += 1;
        }
        return WeylElement::monomial(n, m, UPoly(nonzero_rational(max_abs_num, 2)));
    }

    WeylElement weyl_element(int n, int max_terms = 3, int max_factors = 2) {
        WeylElement e = WeylElement::zero(n);
        const int terms = int_in(1, max_terms);
        for (int t = 0; t < terms; ++t) e += weyl_monomial(n, max_factors);
        return e;
    }

    // Alternating matrix with single-monomial entries (some zero).
    OpMatrix alternating_op_matrix(int dim, int n, int zero_percent = 20) {
        OpMatrix m = op_zero(dim, n);
        for (int i = 1; i <= dim; ++i)
            for (int j = i + 1; j <= dim; ++j) {
                if (int_in(0, 99) < zero_percent) continue;
                const WeylElement e = weyl_monomial(n, 1);
                m.at(i, j) = e;
                m.at(j, i) = -e;
            }
        return m;
    }

    // Alternating scalar matrix.
    ScalarMatrix alternating_scalar_matrix(int dim, int max_abs = 6) {
        ScalarMatrix m(dim, Rational(0));
        for (int i = 1; i <= dim; ++i)
            for (int j = i + 1; j <= dim; ++j) {
                const Rational r = Rational(int_in(-max_abs, max_abs));
                m.at(i, j) = r;
                m.at(j, i) = -r;
            }
        return m;
    }

    AltPoly alt_poly(int n, int max_deg = 3, int max_terms = 3) {
        AltPoly f = AltPoly::zero(n);
        const int terms = int_in(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            AltPoly::Monomial m;
            const int deg = int_in(0, max_deg);
            for (int q = 0; q < deg; ++q) {
                const int i = int_in(1, n - 1);
                const int j = int_in(i + 1, n);
                m[VarIndex{i, j}] += 1;
            }
            f.add_term(m, UPoly(nonzero_rational(5, 2)));
        }
        return f;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace skewcap
