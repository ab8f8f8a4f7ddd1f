#include "skewcap/capelli.hpp"

#include "skewcap/action.hpp"
#include "skewcap/forms.hpp"
#include "skewcap/gauss.hpp"

#include <chrono>
#include <stdexcept>

namespace skewcap {

GammaOperator gamma(int n, int k) {
    if (k < 0 || 2 * k > n) throw std::invalid_argument("gamma: k outside [0, n/2]");
    WeylElement acc = WeylElement::zero(n);
    for (const auto& I : subsets_of_size(n, 2 * k))
        acc += weyl_mul(generator_submatrix_pfaffian(n, I, GenKind::Mult),
                        generator_submatrix_pfaffian(n, I, GenKind::Deriv));
    return GammaOperator{n, k, acc};
}

UPoly hermite(int m) {
    if (m < 0) throw std::invalid_argument("hermite: negative degree");
    UPoly h;
    const Rational mfact = Rational::factorial(m);
    for (int k = 0; 2 * k <= m; ++k) {
        Rational c = mfact * Rational(2).pow(m - 2 * k) /
                     (Rational::factorial(k) * Rational::factorial(m - 2 * k));
        if (k % 2 == 1) c = -c;
        h += UPoly::monomial(m - 2 * k, c);
    }
    return h;
}

UPoly a_poly(int m) {
    if (m < 0) throw std::invalid_argument("a_poly: negative degree");
    UPoly a;
    const Rational mfact = Rational::factorial(m);
    for (int k = 0; 2 * k <= m; ++k) {
        Rational c = mfact / (Rational(2).pow(2 * k) * Rational::factorial(m - 2 * k) * Rational::factorial(k));
        a += UPoly::monomial(m - 2 * k, c);
    }
    return a;
}

HermiteData hermite_data(int m) { return HermiteData{m, hermite(m), a_poly(m)}; }

bool hermite_relation_check(int m) {
    // Coefficients of (-i/2)^m H_m(iu) as Gaussian rationals, indexed by the
    // power of u.
    const UPoly h = hermite(m);
    const GaussRational front = GaussRational(Rational(0), Rational(-1, 2)).pow(m);
    std::map<int, GaussRational> expanded;
    for (const auto& [e, c] : h.coeffs()) {
        GaussRational g = front * GaussRational(c) * GaussRational::i().pow(e);
        if (!g.is_zero()) expanded[e] = g;
    }
    const UPoly a = a_poly(m);
    for (const auto& [e, g] : expanded) {
        if (!g.im.is_zero()) return false;
        if (!(g.re == a.coeff(e))) return false;
    }
    // Nothing of a_m may be missing from the expansion either.
    for (const auto& [e, c] : a.coeffs())
        if (!expanded.count(e)) return false;
    return true;
}

MainIdentityReport main_identity_check(int n, PfBackend backend) {
    if (backend != PfBackend::Restricted && backend != PfBackend::Forms)
        throw std::invalid_argument("main_identity_check: backend must be restricted or forms");
    const auto t0 = std::chrono::steady_clock::now();

    const OpMatrix phi = build_phi(n);
    const WeylElement pf = pf_anti(phi, backend);

    WeylElement expected = WeylElement::zero(n);
    for (int k = 0; 2 * k <= n; ++k) expected += gamma(n, k).element.scale(a_poly(n - 2 * k));

    const WeylElement delta = pf - expected;
    const auto t1 = std::chrono::steady_clock::now();
    MainIdentityReport rep{
        n,
        backend == PfBackend::Restricted ? "restricted" : "forms",
        delta.is_zero(),
        delta.term_count(),
        pf.term_count(),
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count(),
        pf,
        delta,
    };
    return rep;
}

namespace {

using SymbolMatrix = SquareMatrix<SymbolPoly>;

// PhiTilde with every derivation replaced by its symbol xi.
SymbolMatrix phi_tilde_symbol(int n) {
    const OpMatrix pt = build_phi_tilde(n);
    SymbolMatrix m(2 * n, SymbolPoly::zero(n));
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= 2 * n; ++j) m.at(i, j) = total_symbol(pt.at(i, j));
    return m;
}

SymbolPoly symbol_submatrix_pf(int n, const std::vector<int>& idx, GenKind kind) {
    if (idx.empty()) return SymbolPoly::one(n);
    SymbolMatrix sub(static_cast<int>(idx.size()), SymbolPoly::zero(n));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
            if (a != b)
                sub.at(static_cast<int>(a + 1), static_cast<int>(b + 1)) =
                    SymbolPoly::variable(n, idx[a], idx[b], kind);
    return pf_commutative(sub, SymbolPoly::zero(n));
}

}  // namespace

bool symbol_identity_check(int n) {
    const SymbolMatrix pts = phi_tilde_symbol(n);
    const SymbolPoly lhs = pf_commutative(pts, SymbolPoly::zero(n));

    SymbolPoly rhs = SymbolPoly::zero(n);
    for (int k = 0; 2 * k <= n; ++k) {
        SymbolPoly gk = SymbolPoly::zero(n);
        for (const auto& I : subsets_of_size(n, 2 * k))
            gk += symbol_submatrix_pf(n, I, GenKind::Mult) * symbol_submatrix_pf(n, I, GenKind::Deriv);
        rhs += gk.scale(UPoly::monomial(n - 2 * k, Rational(1)));
    }
    return lhs == rhs;
}

bool invariance_check(int n) {
    std::vector<WeylElement> targets;
    for (int k = 0; 2 * k <= n; ++k) targets.push_back(gamma(n, k).element);
    targets.push_back(pf_anti(build_phi(n)));

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const WeylElement e = dpi(n, i, j);
            for (const WeylElement& t : targets)
                if (!commutator(e, t).is_zero()) return false;
        }
    return true;
}

bool group_invariance_spot_check(int n, const ScalarMatrix& g, const AltPoly& f) {
    if (det(g).is_zero()) throw std::domain_error("group_invariance_spot_check: singular g");
    const WeylElement pf = pf_anti(build_phi(n));
    const ScalarMatrix gi = inverse(g);

    // The identity is polynomial in u of degree n; sample enough points.
    const int samples = std::max(4, n + 1);
    static const long pool[] = {0, 1, -1, 2, 3, -2, 4, -3, 5, -4, 6, -5};
    constexpr int pool_size = static_cast<int>(sizeof pool / sizeof pool[0]);
    for (int s = 0; s < samples; ++s) {
        const Rational u0 = s < pool_size ? Rational(pool[s]) : Rational(s);
        const WeylElement op = pf.eval_u(u0);
        const AltPoly lhs = group_action(g, apply(op, group_action(gi, f)));
        const AltPoly rhs = apply(op, f);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace skewcap
