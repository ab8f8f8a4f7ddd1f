#include "skewcap/action.hpp"

#include <stdexcept>

namespace skewcap {

namespace {

// The linear form sum_{a<b} det((gi)^{i,j}_{a,b}) x_{a,b}; with gi = g^{-1}
// this is the coordinate of g^{-1} x t(g^{-1}) at (i,j).
AltPoly substituted_variable(const ScalarMatrix& gi, int n, int i, int j) {
    AltPoly out(n);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            Rational c = minor2(gi, i, j, a, b);
            if (c.is_zero()) continue;
            AltPoly::Monomial m;
            m[VarIndex{a, b}] = 1;
            out.add_term(m, UPoly(c));
        }
    return out;
}

}  // namespace

GroupSubstitution::GroupSubstitution(const ScalarMatrix& g, int n) : n_(n) {
    if (g.dim() != n) throw std::invalid_argument("GroupSubstitution: matrix size must match n");
    const ScalarMatrix gi = inverse(g);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) var_images_.emplace(VarIndex{i, j}, substituted_variable(gi, n, i, j));
    memo_.emplace(AltPoly::Monomial{}, AltPoly::one(n));
}

const AltPoly& GroupSubstitution::image(const AltPoly::Monomial& m) const {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    AltPoly::Monomial rest = m;
    auto lead = rest.begin();
    const VarIndex v = lead->first;
    if (--lead->second == 0) rest.erase(lead);
    AltPoly value = image(rest) * var_images_.at(v);
    return memo_.emplace(m, std::move(value)).first->second;
}

AltPoly GroupSubstitution::operator()(const AltPoly& f) const {
    if (f.n() != n_) throw std::invalid_argument("GroupSubstitution: mismatched n");
    AltPoly out(n_);
    for (const auto& [m, c] : f.terms()) out += image(m).scale(c);
    return out;
}

AltPoly group_action(const ScalarMatrix& g, const AltPoly& f) {
    return GroupSubstitution(g, f.n())(f);
}

WeylElement conjugate_derivation(const ScalarMatrix& g, int i, int j) {
    const int n = g.dim();
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("conjugate_derivation: index");
    if (det(g).is_zero()) throw std::domain_error("conjugate_derivation: singular matrix");
    WeylElement out(n);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            Rational c = minor2(g, a, b, i, j);
            if (!c.is_zero()) out += signed_generator(n, a, b, GenKind::Deriv).scale(c);
        }
    return out;
}

WeylElement conjugate_multiplication(const ScalarMatrix& g, int i, int j) {
    const int n = g.dim();
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("conjugate_multiplication: index");
    const ScalarMatrix gi = inverse(g);
    WeylElement out(n);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            Rational c = minor2(gi, i, j, a, b);
            if (!c.is_zero()) out += signed_generator(n, a, b, GenKind::Mult).scale(c);
        }
    return out;
}

WeylElement dpi(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("dpi: index outside [1,n]");
    WeylElement out(n);
    for (int k = 1; k <= n; ++k)
        out += weyl_mul(signed_generator(n, k, j, GenKind::Mult), signed_generator(n, k, i, GenKind::Deriv));
    return -out;
}

}  // namespace skewcap
