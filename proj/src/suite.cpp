#include "skewcap/suite.hpp"

#include "skewcap/action.hpp"
#include "skewcap/capelli.hpp"
#include "skewcap/forms.hpp"
#include "skewcap/gauss.hpp"
#include "skewcap/parse.hpp"
#include "skewcap/random.hpp"

#include <sstream>

namespace skewcap {

namespace {

GaussRational random_gauss(Rng& rng) { return {rng.rational(), rng.rational()}; }

PropertyResult rational_ring_axioms(Rng& rng) {
    const int total = 1000;
    int passed = 0;
    for (int t = 0; t < total; ++t) {
        const Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        bool ok = (a + b) + c == a + (b + c);
        ok = ok && (a * b) * c == a * (b * c);
        ok = ok && a * (b + c) == a * b + a * c;
        ok = ok && a + b == b + a && a * b == b * a;
        if (ok) ++passed;
    }
    return {"scalars/rational_ring_axioms", passed, total};
}

PropertyResult upoly_ring_axioms(Rng& rng) {
    const int total = 1000;
    int passed = 0;
    for (int t = 0; t < total; ++t) {
        const UPoly a = rng.upoly(), b = rng.upoly(), c = rng.upoly();
        bool ok = (a + b) + c == a + (b + c);
        ok = ok && (a * b) * c == a * (b * c);
        ok = ok && a * (b + c) == a * b + a * c;
        ok = ok && a + b == b + a && a * b == b * a;
        if (ok) ++passed;
    }
    return {"scalars/upoly_ring_axioms", passed, total};
}

PropertyResult gauss_ring_axioms(Rng& rng) {
    const int total = 1000;
    int passed = 0;
    for (int t = 0; t < total; ++t) {
        const GaussRational a = random_gauss(rng), b = random_gauss(rng), c = random_gauss(rng);
        bool ok = (a + b) + c == a + (b + c);
        ok = ok && (a * b) * c == a * (b * c);
        ok = ok && a * (b + c) == a * b + a * c;
        ok = ok && a + b == b + a && a * b == b * a;
        if (ok) ++passed;
    }
    return {"scalars/gauss_ring_axioms", passed, total};
}

PropertyResult upoly_eval_hom(Rng& rng) {
    const int total = 300;
    int passed = 0;
    for (int t = 0; t < total; ++t) {
        const UPoly p = rng.upoly(), q = rng.upoly();
        const Rational r = rng.rational();
        if ((p * q).eval(r) == p.eval(r) * q.eval(r) && (p + q).eval(r) == p.eval(r) + q.eval(r)) ++passed;
    }
    return {"scalars/upoly_eval_hom", passed, total};
}

PropertyResult weyl_mul_associative(Rng& rng) {
    const int total = 500;
    int passed = 0;
    for (int t = 0; t < total; ++t) {
        const int n = rng.int_in(2, 3);
        const WeylElement a = rng.weyl_element(n), b = rng.weyl_element(n), c = rng.weyl_element(n);
        if (weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c))) ++passed;
    }
    return {"weyl/mul_associative", passed, total};
}

PropertyResult weyl_leibniz(Rng& rng) {
    const int total = 150;
    int passed = 0;
    for (int t = 0; t < total; ++t) {
        const int n = rng.int_in(2, 4);
        const WeylElement p = rng.weyl_element(n, 2, 2), q = rng.weyl_element(n, 2, 2);
        const AltPoly f = rng.alt_poly(n);
        if (apply(weyl_mul(p, q), f) == apply(p, apply(q, f))) ++passed;
    }
    return {"weyl/apply_composition", passed, total};
}

PropertyResult weyl_dpi_bracket(Rng&) {
    int passed = 0, total = 0;
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l) {
                        ++total;
                        WeylElement want = WeylElement::zero(n);
                        if (j == k) want += dpi(n, i, l);
                        if (l == i) want += -dpi(n, k, j);
                        if (commutator(dpi(n, i, j), dpi(n, k, l)) == want) ++passed;
                    }
    return {"weyl/dpi_gl_bracket", passed, total};
}

PropertyResult weyl_conjugation_closed_forms(Rng& rng) {
    int passed = 0, total = 0;
    for (int n = 2; n <= 4; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const ScalarMatrix g = rng.invertible_matrix(n, 3);
            const GroupSubstitution act(g, n);
            const GroupSubstitution act_inv(inverse(g), n);
            const AltPoly f = rng.alt_poly(n, 3, 2);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    ++total;
                    const WeylElement dij = signed_generator(n, i, j, GenKind::Deriv);
                    const AltPoly lhs_d = act(apply(dij, act_inv(f)));
                    const AltPoly rhs_d = apply(conjugate_derivation(g, i, j), f);
                    const WeylElement xij = signed_generator(n, i, j, GenKind::Mult);
                    const AltPoly lhs_m = act(apply(xij, act_inv(f)));
                    const AltPoly rhs_m = apply(conjugate_multiplication(g, i, j), f);
                    if (lhs_d == rhs_d && lhs_m == rhs_m) ++passed;
                }
        }
    }
    return {"weyl/conjugation_closed_forms", passed, total};
}

PropertyResult weyl_symbol_top_order(Rng& rng) {
    const int total = 200;
    int passed = 0;
    for (int t = 0; t < total; ++t) {
        const int n = rng.int_in(2, 3);
        const WeylElement p = rng.weyl_element(n, 2, 2), q = rng.weyl_element(n, 2, 2);
        if (principal_symbol(weyl_mul(p, q)) == principal_symbol(p) * principal_symbol(q)) ++passed;
    }
    return {"weyl/principal_symbol_multiplicative", passed, total};
}

PropertyResult group_action_representation(Rng& rng) {
    const int total = 60;
    int passed = 0;
    for (int t = 0; t < total; ++t) {
        const int n = rng.int_in(2, 3);
        const ScalarMatrix g = rng.invertible_matrix(n, 3), h = rng.invertible_matrix(n, 3);
        const AltPoly f = rng.alt_poly(n, 2, 2);
        if (group_action(g, group_action(h, f)) == group_action(matmul(g, h), f)) ++passed;
    }
    return {"weyl/group_action_representation", passed, total};
}

PropertyResult opmatrix_phi_blocks(Rng&) {
    int passed = 0, total = 0;
    for (int n = 1; n <= 6; ++n) {
        ++total;
        const OpMatrix phi = build_phi(n);
        const OpMatrix mj = op_matmul(build_m(n), op_from_scalar(j_matrix(n), n));
        const OpMatrix jd = op_matmul(op_from_scalar(j_matrix(n), n), build_d(n));
        bool ok = is_anti_alternating(phi);
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j <= n && ok; ++j) {
                const UPoly want_diag = i == j ? UPoly::u() : UPoly();
                ok = phi.at(i, j) == WeylElement::scalar(n, want_diag) &&
                     phi.at(n + i, n + j) == WeylElement::scalar(n, -want_diag) &&
                     phi.at(i, n + j) == mj.at(i, j) && phi.at(n + i, j) == -jd.at(i, j);
            }
        if (ok) ++passed;
    }
    return {"opmatrix/phi_block_form", passed, total};
}

PropertyResult opmatrix_iota(Rng& rng) {
    int passed = 0, total = 0;
    for (int n = 2; n <= 4; ++n)
        for (int rep = 0; rep < 7; ++rep) {
            ++total;
            const ScalarMatrix g = rng.invertible_matrix(n, 3), h = rng.invertible_matrix(n, 3);
            const ScalarMatrix j2n = j_matrix(2 * n);
            const ScalarMatrix ig = iota(g);
            bool ok = iota(matmul(g, h)) == matmul(ig, iota(h));
            ok = ok && matmul(matmul(transpose(ig), j2n), ig) == j2n;
            ok = ok && det(ig) == Rational(1);
            if (ok) ++passed;
        }
    return {"opmatrix/iota_into_SO", passed, total};
}

PropertyResult opmatrix_ad_equivariance(Rng& rng) {
    // Entrywise conjugation of Phi(u) matches conjugation by iota(g^{-1}).
    int passed = 0, total = 0;
    for (int n = 2; n <= 4; ++n)
        for (int rep = 0; rep < 4; ++rep) {
            ++total;
            const ScalarMatrix g = rng.invertible_matrix(n, 3);
            const OpMatrix phi = build_phi(n);
            const ScalarMatrix cg = iota(inverse(g));
            const OpMatrix want =
                op_matmul(op_matmul(op_from_scalar(cg, n), phi), op_from_scalar(inverse(cg), n));
            if (ad_matrix(g, phi) == want) ++passed;
        }
    return {"opmatrix/ad_phi_equivariance", passed, total};
}

PropertyResult pfaffian_backends(Rng& rng) {
    int passed = 0, total = 0;
    for (int dim = 4; dim <= 8; dim += 2)
        for (int rep = 0; rep < 6; ++rep) {
            ++total;
            const OpMatrix x = rng.alternating_op_matrix(dim, 3);
            const WeylElement full = pf_full(x);
            const WeylElement restr = pf_restricted(x);
            const WeylElement forms = pfaffian_alternating(x, PfBackend::Forms);
            if (full == restr && restr == forms) ++passed;
        }
    return {"pfaffian/backend_agreement", passed, total};
}

PropertyResult pfaffian_square_is_det(Rng& rng) {
    int passed = 0, total = 0;
    for (int dim = 2; dim <= 8; dim += 2)
        for (int rep = 0; rep < 8; ++rep) {
            ++total;
            const ScalarMatrix s = rng.alternating_scalar_matrix(dim);
            const Rational pf = pf_commutative(s, Rational(0));
            if (pf * pf == det(s)) ++passed;
        }
    return {"pfaffian/square_equals_det", passed, total};
}

PropertyResult pfaffian_equivariance(Rng& rng) {
    int passed = 0, total = 0;
    for (int dim = 4; dim <= 6; dim += 2)
        for (int rep = 0; rep < 6; ++rep) {
            ++total;
            const OpMatrix alt = rng.alternating_op_matrix(dim, 3);
            const OpMatrix anti = op_matmul(alt, op_from_scalar(j_matrix(dim), 3));
            const ScalarMatrix g = rng.invertible_matrix(dim, 2);
            if (pf_equivariance_check(g, anti)) ++passed;
        }
    return {"pfaffian/gl_equivariance", passed, total};
}

PropertyResult forms_wedge_laws(Rng& rng) {
    const int total = 150;
    int passed = 0;
    for (int t = 0; t < total; ++t) {
        const int n = rng.int_in(2, 3);
        const int vdim = 2 * n;
        // Random forms with scalar (central) coefficients for the graded
        // commutativity law; homogeneous degrees.
        auto random_form = [&](int deg) {
            ExtElement f = ExtElement::zero(vdim, n);
            for (int k = 0; k < 3; ++k) {
                ExtIndex idx;
                std::vector<int> pool;
                for (int r = 1; r <= vdim; ++r) pool.push_back(r);
                for (int d = 0; d < deg; ++d) {
                    const int pick = rng.int_in(0, static_cast<int>(pool.size()) - 1);
                    idx.ranks.push_back(pool[pick]);
                    pool.erase(pool.begin() + pick);
                }
                std::sort(idx.ranks.begin(), idx.ranks.end());
                f.add_term(idx, WeylElement::scalar(n, UPoly(rng.rational(3, 2))));
            }
            return f;
        };
        const int da = rng.int_in(1, 2), db = rng.int_in(1, 2);
        const ExtElement a = random_form(da), b = random_form(db), c = random_form(rng.int_in(1, 2));
        bool ok = wedge(wedge(a, b), c) == wedge(a, wedge(b, c));
        const ExtElement ba = wedge(b, a);
        ok = ok && wedge(a, b) == ((da * db) % 2 == 0 ? ba : -ba);
        if (ok) ++passed;
    }
    return {"forms/wedge_graded_laws", passed, total};
}

PropertyResult forms_relations(Rng&) {
    int passed = 0, total = 0;
    for (int n = 1; n <= 5; ++n) {
        ++total;
        if (cr_check(n)) ++passed;
    }
    for (int n = 2; n <= 4; ++n)
        for (int r = 0; 2 * r <= n; ++r) {
            ++total;
            if (theta_power_identity_check(n, r)) ++passed;
        }
    return {"forms/theta_tau_relations", passed, total};
}

PropertyResult forms_normal_ordering(Rng&) {
    int passed = 0, total = 0;
    for (int n = 2; n <= 4; ++n)
        for (int m = 0; m <= 5; ++m) {
            ++total;
            if (expansion_check(n, m)) ++passed;
        }
    for (int n = 2; n <= 4; ++n)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 5; ++b) {
                ++total;
                if (theta_commutation_check(n, a, b)) ++passed;
            }
    for (int m = 0; m <= 20; ++m)
        for (int k = -1; k <= m / 2 + 1; ++k) {
            ++total;
            if (c_coeff(k, m + 1) == c_coeff(k, m) + Rational(m + 2 - 2 * k) * c_coeff(k - 1, m)) ++passed;
        }
    return {"forms/normal_ordering_expansion", passed, total};
}

PropertyResult capelli_main_identity(Rng&) {
    int passed = 0, total = 0;
    for (int n = 1; n <= 4; ++n)
        for (const PfBackend b : {PfBackend::Restricted, PfBackend::Forms}) {
            ++total;
            if (main_identity_check(n, b).pass) ++passed;
        }
    return {"capelli/main_identity", passed, total};
}

PropertyResult capelli_hermite(Rng&) {
    int passed = 0, total = 0;
    for (int m = 0; m <= 10; ++m) {
        ++total;
        if (hermite_relation_check(m)) ++passed;
    }
    for (int m = 0; m <= 20; ++m) {
        ++total;
        const UPoly a = a_poly(m);
        bool ok = a.degree() == m && a.coeff(m) == Rational(1);
        for (const auto& [e, c] : a.coeffs()) ok = ok && c.sign() > 0 && (m - e) % 2 == 0;
        if (ok) ++passed;
    }
    return {"capelli/hermite_bridge", passed, total};
}

PropertyResult capelli_symbol_identity(Rng&) {
    int passed = 0, total = 0;
    for (int n = 1; n <= 5; ++n) {
        ++total;
        if (symbol_identity_check(n)) ++passed;
    }
    return {"capelli/symbol_identity", passed, total};
}

PropertyResult capelli_invariance(Rng&) {
    int passed = 0, total = 0;
    for (int n = 2; n <= 4; ++n) {
        ++total;
        if (invariance_check(n)) ++passed;
    }
    return {"capelli/dpi_invariance", passed, total};
}

PropertyResult weyl_central_expansion(Rng&) {
    int passed = 0, total = 0;
    for (int m = 0; m <= 8; ++m) {
        ++total;
        if (binomial_central_commutator_check(m).single_power_holds) ++passed;
    }
    return {"weyl/central_commutator_expansion", passed, total};
}

PropertyResult parse_roundtrip(Rng& rng) {
    const int total = 200;
    int passed = 0;
    for (int t = 0; t < total; ++t) {
        const int n = rng.int_in(2, 4);
        WeylElement e = rng.weyl_element(n, 3, 2);
        if (rng.int_in(0, 1)) e += WeylElement::scalar(n, rng.upoly(2));
        if (parse_weyl_element(n, e.to_string()) == e) ++passed;
    }
    return {"cli/canonical_text_roundtrip", passed, total};
}

}  // namespace

SuiteReport run_suite(std::uint64_t seed) {
    SuiteReport rep;
    rep.seed = seed;
    using Prop = PropertyResult (*)(Rng&);
    const Prop props[] = {
        rational_ring_axioms,
        upoly_ring_axioms,
        gauss_ring_axioms,
        upoly_eval_hom,
        weyl_mul_associative,
        weyl_leibniz,
        weyl_dpi_bracket,
        weyl_conjugation_closed_forms,
        weyl_symbol_top_order,
        group_action_representation,
        weyl_central_expansion,
        opmatrix_phi_blocks,
        opmatrix_iota,
        opmatrix_ad_equivariance,
        pfaffian_backends,
        pfaffian_square_is_det,
        pfaffian_equivariance,
        forms_wedge_laws,
        forms_relations,
        forms_normal_ordering,
        capelli_main_identity,
        capelli_hermite,
        capelli_symbol_identity,
        capelli_invariance,
        parse_roundtrip,
    };
    std::uint64_t salt = 0;
    for (Prop p : props) {
        Rng rng(seed * 1000003ULL + salt++);
        rep.results.push_back(p(rng));
    }
    return rep;
}

std::string suite_report_text(const SuiteReport& rep) {
    std::ostringstream os;
    os << "suite seed=" << rep.seed << "\n";
    for (const auto& r : rep.results)
        os << (r.ok() ? "pass" : "FAIL") << " " << r.name << ": " << r.passed << "/" << r.total << "\n";
    os << (rep.all_pass() ? "all properties passed" : "SUITE FAILED") << "\n";
    return os.str();
}

}  // namespace skewcap
