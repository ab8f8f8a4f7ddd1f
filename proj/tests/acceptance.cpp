// Acceptance suite: one test per numbered criterion, each printing a
// one-line verdict. All comparisons are exact; there are no tolerances
// anywhere because every computation is rational.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewcap/action.hpp"
#include "skewcap/capelli.hpp"
#include "skewcap/forms.hpp"
#include "skewcap/parse.hpp"
#include "skewcap/random.hpp"
#include "skewcap/suite.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

using namespace skewcap;

namespace {

void verdict(int criterion, bool pass, const std::string& what) {
    std::cout << "criterion " << (criterion < 10 ? "0" : "") << criterion << ": "
              << (pass ? "PASS" : "FAIL") << " - " << what << "\n";
}

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string cmd = std::string(SKEWCAP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

}  // namespace

TEST_CASE("criterion 01: generating function identity, n = 1..5 (both backends) and n = 6 (forms)") {
    bool pass = true;
    for (int n = 1; n <= 5 && pass; ++n)
        for (const PfBackend b : {PfBackend::Restricted, PfBackend::Forms}) {
            const MainIdentityReport rep = main_identity_check(n, b);
            pass = pass && rep.pass && rep.millis <= 60000;
        }
    const MainIdentityReport stretch = main_identity_check(6, PfBackend::Forms);
    pass = pass && stretch.pass && stretch.millis <= 600000;
    verdict(1, pass, "Pf(Phi(u)) = sum_k a_{n-2k}(u) Gamma_k, delta identically 0");
    CHECK(pass);
}

TEST_CASE("criterion 02: closed form at n = 2") {
    const int n = 2;
    const WeylElement want = weyl_mul(signed_generator(n, 1, 2, GenKind::Mult),
                                      signed_generator(n, 1, 2, GenKind::Deriv)) +
                             WeylElement::scalar(n, UPoly::monomial(2, Rational(1)) + UPoly(Rational(1, 2)));
    const bool pass = pf_anti(build_phi(n)) == want;
    verdict(2, pass, "Pf(Phi(u)) = x[1,2] d[1,2] + u^2 + 1/2 exactly");
    CHECK(pass);
}

TEST_CASE("criterion 03: backend equivalence on seeded random alternating matrices") {
    Rng rng(2024);
    int cases = 0;
    bool pass = true;
    for (int dim = 4; dim <= 8; dim += 2)
        for (int rep = 0; rep < 18; ++rep) {
            const OpMatrix x = rng.alternating_op_matrix(dim, 3);
            const WeylElement full = pf_full(x);
            const WeylElement restr = pf_restricted(x);
            const WeylElement via_forms = pfaffian_alternating(x, PfBackend::Forms);
            pass = pass && full == restr && restr == via_forms;
            ++cases;
        }
    verdict(3, pass && cases >= 50, "pf_full = pf_restricted = pf_via_forms on " + std::to_string(cases) +
                                        " matrices, 2n in {4,6,8}");
    CHECK(pass);
    CHECK(cases >= 50);
}

TEST_CASE("criterion 04: conjugation closed forms against the substitution oracle") {
    Rng rng(2025);
    bool pass = true;
    int gs = 0;
    for (int n = 2; n <= 4; ++n) {
        // Monomial basis of degree <= 3, deduplicated.
        std::vector<VarIndex> vars;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) vars.push_back({i, j});
        std::set<AltPoly::Monomial> monos{{}};
        std::vector<AltPoly::Monomial> layer{{}};
        for (int deg = 1; deg <= 3; ++deg) {
            std::vector<AltPoly::Monomial> next;
            for (const auto& m : layer)
                for (const auto& v : vars) {
                    auto m2 = m;
                    m2[v] += 1;
                    next.push_back(m2);
                }
            monos.insert(next.begin(), next.end());
            layer = std::move(next);
        }
        std::vector<AltPoly> basis;
        for (const auto& m : monos) basis.push_back(AltPoly::monomial(n, m, UPoly(1)));
        for (int rep = 0; rep < 8 && pass; ++rep) {
            const ScalarMatrix g =
                rep % 2 == 0 ? rng.invertible_rational_matrix(n, 2, 2) : rng.invertible_matrix(n, 3);
            ++gs;
            const GroupSubstitution act_inv(inverse(g), n);
            for (int i = 1; i <= n && pass; ++i)
                for (int j = i + 1; j <= n && pass; ++j) {
                    const WeylElement cd = conjugate_derivation(g, i, j);
                    const WeylElement cm = conjugate_multiplication(g, i, j);
                    const WeylElement dij = signed_generator(n, i, j, GenKind::Deriv);
                    const WeylElement xij = signed_generator(n, i, j, GenKind::Mult);
                    // pi(g) P pi(g)^-1 = C  iff  P pi(g^-1) = pi(g^-1) C;
                    // the right-hand shape keeps every substitution input
                    // small.
                    for (const AltPoly& f : basis) {
                        if (!(apply(dij, act_inv(f)) == act_inv(apply(cd, f))) ||
                            !(apply(xij, act_inv(f)) == act_inv(apply(cm, f)))) {
                            pass = false;
                            break;
                        }
                    }
                }
        }
    }
    verdict(4, pass && gs >= 20,
            "pi(g) D pi(g)^-1 and pi(g) M pi(g)^-1 match the minor sums on all monomials of degree <= 3");
    CHECK(pass);
    CHECK(gs >= 20);
}

TEST_CASE("criterion 05: entrywise conjugation of Phi(u) vs conjugation by iota(tg)") {
    // Checked in the transpose form the criterion states:
    //   Ad_{pi(g)}(Phi(u)) = iota(tg) Phi(u) iota(tg)^{-1}.
    // For the matrix built from its displayed layout this fails for every
    // non-orthogonal g (at n=2 the off-diagonal blocks already force
    // det(g)^2 = 1). The law that does hold, verified below and reported
    // alongside, is conjugation by iota(g^{-1}); the transpose form would
    // hold only for the variant matrix with the x- and d-blocks swapped.
    Rng rng(2026);
    bool stated = true;
    bool corrected = true;
    int gs = 0;
    for (int n = 2; n <= 4; ++n) {
        const OpMatrix phi = build_phi(n);
        for (int rep = 0; rep < 4; ++rep) {
            const ScalarMatrix g =
                rep % 2 == 0 ? rng.invertible_rational_matrix(n, 2, 2) : rng.invertible_matrix(n, 3);
            ++gs;
            const OpMatrix ad = ad_matrix(g, phi);
            auto conj_by = [&](const ScalarMatrix& h) {
                return op_matmul(op_matmul(op_from_scalar(h, n), phi), op_from_scalar(inverse(h), n));
            };
            stated = stated && ad == conj_by(iota(transpose(g)));
            corrected = corrected && ad == conj_by(iota(inverse(g)));
        }
    }
    verdict(5, stated && gs >= 10, "Ad_{pi(g)}(Phi(u)) = iota(tg) Phi(u) iota(tg)^-1 in the stated transpose form");
    std::cout << "              note: conjugation by iota(g^-1) instead holds on all " << gs
              << " samples: " << (corrected ? "verified" : "violated") << "\n";
    CHECK(gs >= 10);
    CHECK(corrected);
    CHECK_MESSAGE(stated,
                  "expected failure: the transpose form does not hold for the displayed matrix; "
                  "Phi transforms by iota(g^-1) conjugation, verified above");
}

TEST_CASE("criterion 06: Pfaffian equivariance Pf(g X g-hat) = det(g) Pf(X)") {
    Rng rng(2027);
    bool pass = true;
    int cases = 0;
    for (int dim = 4; dim <= 6; dim += 2)
        for (int rep = 0; rep < 10; ++rep) {
            const OpMatrix alt = rng.alternating_op_matrix(dim, 3);
            const OpMatrix anti = op_matmul(alt, op_from_scalar(j_matrix(dim), 3));
            const ScalarMatrix g =
                rep % 2 == 0 ? rng.invertible_rational_matrix(dim, 2, 2) : rng.invertible_matrix(dim, 2);
            pass = pass && pf_equivariance_check(g, anti);
            ++cases;
        }
    verdict(6, pass && cases >= 20, "on " + std::to_string(cases) + " random (g, X), 2n in {4,6}");
    CHECK(pass);
    CHECK(cases >= 20);
}

TEST_CASE("criterion 07: infinitesimal invariance of Gamma_k and Pf(Phi(u))") {
    bool pass = true;
    for (int n = 2; n <= 5; ++n) pass = pass && invariance_check(n);
    verdict(7, pass, "[dpi(E_ij), Gamma_k] = 0 and [dpi(E_ij), Pf(Phi(u))] = 0, n <= 5");
    CHECK(pass);
}

TEST_CASE("criterion 08: commutation relations among tau, theta_-, theta_+") {
    bool pass = true;
    for (int n = 1; n <= 5; ++n) pass = pass && cr_check(n);
    verdict(8, pass, "[tau, theta_-+-] = 0 and [theta_+, theta_-] = 2 tau^2, n <= 5");
    CHECK(pass);
}

TEST_CASE("criterion 09: normal-ordering expansion, coefficient recursion, descending factorials") {
    bool expansion = true;
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= 5; ++m) expansion = expansion && expansion_check(n, m);
    bool recursion = true;
    for (int m = 0; m <= 20; ++m)
        for (int k = -1; k <= m / 2 + 2; ++k)
            recursion =
                recursion && c_coeff(k, m + 1) == c_coeff(k, m) + Rational(m + 2 - 2 * k) * c_coeff(k - 1, m);
    bool commutation = true;
    for (int n = 1; n <= 4; ++n)
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; a + b <= 5; ++b) commutation = commutation && theta_commutation_check(n, a, b);
    const bool pass = expansion && recursion && commutation;
    verdict(9, pass, "(theta_-+theta_+)^m expansion (n<=4, m<=5), c_k recursion (m<=20), theta power swaps (a+b<=5)");
    CHECK(expansion);
    CHECK(recursion);
    CHECK(commutation);
}

TEST_CASE("criterion 10: central-commutator binomial expansion, exponent resolved") {
    bool variant = true;
    bool squared_all = true;
    for (int m = 0; m <= 8; ++m) {
        const BinomialExpansionCheck rc = binomial_central_commutator_check(m);
        variant = variant && rc.single_power_holds;
        squared_all = squared_all && rc.squared_power_holds;
    }
    const bool resolved = variant && !squared_all;
    verdict(10, resolved, "([A,B])^k form passes for m <= 8; the ([A,B])^(2k) variant fails from m = 2");
    CHECK(variant);
    CHECK_FALSE(squared_all);
}

TEST_CASE("criterion 11: Hermite bridge") {
    bool rel = true;
    for (int m = 0; m <= 10; ++m) rel = rel && hermite_relation_check(m);
    bool monic = true;
    for (int m = 0; m <= 20; ++m) {
        const UPoly a = a_poly(m);
        monic = monic && a.degree() == m && a.coeff(m) == Rational(1);
    }
    verdict(11, rel && monic, "a_m(u) = (-i/2)^m H_m(iu) for m <= 10; a_m monic of degree m for m <= 20");
    CHECK(rel);
    CHECK(monic);
}

TEST_CASE("criterion 12: principal-symbol identity") {
    bool pass = true;
    for (int n = 1; n <= 6; ++n) pass = pass && symbol_identity_check(n);
    verdict(12, pass, "sigma(Pf PhiTilde(u)) = sum_k u^(n-2k) gamma_k, n <= 6");
    CHECK(pass);
}

TEST_CASE("criterion 13: proof-step identities") {
    bool powers = true;
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; 2 * r <= n; ++r) powers = powers && theta_power_identity_check(n, r);

    // Shuffle-sign mirror identity over subsets of [4]. The volume-form
    // argument consumes even-size subsets, where the two signs agree; the
    // parity oracle fixes the general law sgn * sgn' = (-1)^(|I| (n-|I|)).
    bool mirror = true;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> subset;
        for (int v = 1; v <= 4; ++v)
            if (mask & (1 << (v - 1))) subset.push_back(v);
        const int k = static_cast<int>(subset.size());
        const int s = shuffle_sign(subset, 4), sm = shuffle_sign_mirror(subset, 4);
        if (k % 2 == 0) mirror = mirror && s == sm;
        mirror = mirror && s * sm == ((k * (4 - k)) % 2 == 0 ? 1 : -1);
    }
    verdict(13, powers && mirror, "theta power Pfaffian expansions (2r <= n <= 4) and shuffle-sign mirror law on [4]");
    CHECK(powers);
    CHECK(mirror);
}

TEST_CASE("criterion 14: CLI determinism and exit-code contract") {
    int rc1 = 0, rc2 = 0;
    const std::string out1 = run_cli("suite --seed 42", rc1);
    const std::string out2 = run_cli("suite --seed 42", rc2);
    const bool deterministic = out1 == out2 && !out1.empty();
    const bool suite_ok = rc1 == 0 && rc2 == 0;

    int rc_usage = 0;
    run_cli("verify --n 0", rc_usage);
    int rc_ok = 0;
    run_cli("verify --n 2", rc_ok);

    // Crafted fixtures: a Pfaffian expectation that cannot hold (exit 1)
    // and a malformed matrix file (exit 2).
    const std::string dir = std::string(SKEWCAP_SOURCE_DIR) + "/tests/fixtures";
    int rc_expect_fail = 0;
    run_cli("pfaffian --file " + dir + "/phi_tilde_n2.mat --expect \"x[1,2]\"", rc_expect_fail);
    int rc_expect_ok = 0;
    run_cli("pfaffian --file " + dir + "/phi_tilde_n2.mat --expect \"x[1,2] d[1,2] + u^2 + 1/2\"",
            rc_expect_ok);
    int rc_malformed = 0;
    run_cli("pfaffian --file " + dir + "/malformed.mat", rc_malformed);

    const bool exit_contract =
        rc_usage == 2 && rc_ok == 0 && rc_expect_fail == 1 && rc_expect_ok == 0 && rc_malformed == 2;
    verdict(14, deterministic && suite_ok && exit_contract,
            "byte-identical suite reports for repeated seeds; exit codes 0/1/2 honored");
    CHECK(deterministic);
    CHECK(suite_ok);
    CHECK(exit_contract);
}
