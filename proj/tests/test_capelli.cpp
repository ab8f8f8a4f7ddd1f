#include "skewcap/action.hpp"
#include "skewcap/capelli.hpp"
#include "skewcap/random.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace skewcap;

namespace {

WeylElement x(int n, int i, int j) { return signed_generator(n, i, j, GenKind::Mult); }
WeylElement d(int n, int i, int j) { return signed_generator(n, i, j, GenKind::Deriv); }

}  // namespace

TEST_SUITE_BEGIN("capelli");

TEST_CASE("gamma operators") {
    CHECK(gamma(3, 0).element == WeylElement::one(3));
    CHECK(gamma(2, 1).element == weyl_mul(x(2, 1, 2), d(2, 1, 2)));

    // All six 2-subsets of [4].
    WeylElement want = WeylElement::zero(4);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) want += weyl_mul(x(4, i, j), d(4, i, j));
    const GammaOperator g41 = gamma(4, 1);
    CHECK(g41.element == want);
    CHECK(g41.element.term_count() == 6);

    CHECK_THROWS_AS(gamma(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(gamma(2, -1), std::invalid_argument);
}

TEST_CASE("gamma bidegree") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; 2 * k <= n; ++k) {
            const GammaOperator g = gamma(n, k);
            for (const auto& [m, c] : g.element.terms()) {
                CHECK(m.xdegree() == k);
                CHECK(m.ddegree() == k);
            }
        }
}

TEST_CASE("hermite polynomials") {
    CHECK(hermite(0) == UPoly(1));
    CHECK(hermite(1) == UPoly::monomial(1, Rational(2)));
    CHECK(hermite(2) == UPoly::monomial(2, Rational(4)) - UPoly(2));
    CHECK(hermite(3) == UPoly::monomial(3, Rational(8)) - UPoly::monomial(1, Rational(12)));
    // Recurrence H_{m+1} = 2 x H_m - 2 m H_{m-1}.
    const UPoly two_x = UPoly::monomial(1, Rational(2));
    for (int m = 1; m <= 20; ++m)
        CHECK(hermite(m + 1) == two_x * hermite(m) - hermite(m - 1).scale(Rational(2 * m)));
}

TEST_CASE("a polynomials") {
    CHECK(a_poly(0) == UPoly(1));
    CHECK(a_poly(1) == UPoly::u());
    CHECK(a_poly(2) == UPoly::monomial(2, Rational(1)) + UPoly(Rational(1, 2)));
    CHECK(a_poly(3) == UPoly::monomial(3, Rational(1)) + UPoly::monomial(1, Rational(3, 2)));
    for (int m = 0; m <= 20; ++m) {
        const UPoly a = a_poly(m);
        CHECK(a.degree() == m);
        CHECK(a.coeff(m) == Rational(1));  // monic
        for (const auto& [e, c] : a.coeffs()) {
            CHECK(c.sign() > 0);
            CHECK((m - e) % 2 == 0);
        }
    }
}

TEST_CASE("hermite data bundle") {
    const HermiteData hd = hermite_data(3);
    CHECK(hd.m == 3);
    CHECK(hd.hermite == hermite(3));
    CHECK(hd.a == a_poly(3));
    for (const auto& [e, c] : hd.hermite.coeffs()) CHECK(c.is_integer());
}

TEST_CASE("hermite relation") {
    // m=2 by hand: (-i/2)^2 (4 (iu)^2 - 2) = u^2 + 1/2.
    CHECK(hermite_relation_check(2));
    for (int m = 0; m <= 10; ++m) CHECK(hermite_relation_check(m));
}

TEST_CASE("main identity") {
    for (int n = 1; n <= 4; ++n)
        for (const PfBackend b : {PfBackend::Restricted, PfBackend::Forms}) {
            const MainIdentityReport rep = main_identity_check(n, b);
            CHECK(rep.pass);
            CHECK(rep.delta_term_count == 0);
            CHECK(rep.delta.is_zero());
        }
    CHECK_THROWS_AS(main_identity_check(2, PfBackend::Full), std::invalid_argument);
}

TEST_CASE("n=1 pfaffian is u") {
    CHECK(pf_anti(build_phi(1)) == WeylElement::scalar(1, UPoly::u()));
}

TEST_CASE("backends agree before subtraction") {
    for (int n = 1; n <= 4; ++n)
        CHECK(pf_anti(build_phi(n), PfBackend::Restricted) == pf_anti(build_phi(n), PfBackend::Forms));
}

TEST_CASE("u-coefficients of the pfaffian") {
    for (int n = 1; n <= 5; ++n) {
        const WeylElement pf = pf_anti(build_phi(n));
        const UPoly scalar = pf.scalar_part();
        CHECK(scalar.coeff(n) == Rational(1));
        CHECK(scalar.coeff(n - 1) == Rational(0));
        // No monomial carries a u-power above n-1 besides the scalar term.
        for (const auto& [m, c] : pf.terms())
            if (!m.is_one()) CHECK(c.degree() <= n - 1);
    }
}

TEST_CASE("symbol identity") {
    // n=2 content: x12 xi12 + u^2 = u^2 gamma_0 + gamma_1 at the symbol level.
    for (int n = 1; n <= 6; ++n) CHECK(symbol_identity_check(n));
}

TEST_CASE("principal symbol of the pfaffian drops lower order terms") {
    const int n = 2;
    const WeylElement pf = pf_anti(build_phi(n)).eval_u(Rational(0));
    // At u=0 the pfaffian is Gamma_1 + 1/2; its principal symbol is just
    // x12 xi12.
    CHECK(principal_symbol(pf) == principal_symbol(gamma(n, 1).element));
}

TEST_CASE("infinitesimal invariance") {
    // [dpi(E_12), Gamma_0] = 0 trivially; the full check covers all i, j, k.
    CHECK(commutator(dpi(2, 1, 2), gamma(2, 0).element).is_zero());
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK(commutator(dpi(2, i, j), weyl_mul(x(2, 1, 2), d(2, 1, 2))).is_zero());
    for (int n = 2; n <= 4; ++n) CHECK(invariance_check(n));
}

TEST_CASE("group invariance spot checks") {
    const int n2 = 2;
    CHECK(group_invariance_spot_check(n2, scalar_identity(n2), AltPoly::one(n2)));

    ScalarMatrix shear(2, Rational(0));
    shear.at(1, 1) = Rational(1);
    shear.at(1, 2) = Rational(1);
    shear.at(2, 2) = Rational(1);
    AltPoly::Monomial sq;
    sq[VarIndex{1, 2}] = 2;
    CHECK(group_invariance_spot_check(n2, shear, AltPoly::monomial(n2, sq, UPoly(1))));

    Rng rng(53);
    const int n3 = 3;
    const ScalarMatrix g = rng.invertible_rational_matrix(n3, 2, 2);
    for (int i = 1; i <= n3; ++i)
        for (int j = i + 1; j <= n3; ++j) {
            CHECK(group_invariance_spot_check(n3, g, AltPoly::variable(n3, i, j)));
            AltPoly::Monomial m;
            m[VarIndex{i, j}] = 2;
            CHECK(group_invariance_spot_check(n3, g, AltPoly::monomial(n3, m, UPoly(1))));
        }

    ScalarMatrix sing(2, Rational(1));
    CHECK_THROWS_AS(group_invariance_spot_check(2, sing, AltPoly::one(2)), std::domain_error);
}

TEST_SUITE_END();
