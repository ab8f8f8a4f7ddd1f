#include "skewcap/symbol.hpp"

#include <sstream>
#include <stdexcept>

namespace skewcap {

int SymbolPoly::Monomial::xidegree() const {
    int d = 0;
    for (const auto& [v, e] : xiexp) d += e;
    return d;
}

SymbolPoly::SymbolPoly(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SymbolPoly: n must be >= 1");
}

SymbolPoly SymbolPoly::scalar(int n, const UPoly& c) {
    SymbolPoly p(n);
    if (!c.is_zero()) p.terms_[Monomial{}] = c;
    return p;
}

SymbolPoly SymbolPoly::variable(int n, int i, int j, GenKind kind) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("SymbolPoly::variable: index");
    SymbolPoly p(n);
    if (i == j) return p;
    Monomial m;
    const VarIndex v{std::min(i, j), std::max(i, j)};
    (kind == GenKind::Mult ? m.xexp : m.xiexp)[v] = 1;
    p.terms_[m] = UPoly(Rational(i < j ? 1 : -1));
    return p;
}

void SymbolPoly::add_term(const Monomial& m, const UPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("SymbolPoly: mismatched n");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SymbolPoly operator+(const SymbolPoly& a, const SymbolPoly& b) {
    SymbolPoly r = a;
    r += b;
    return r;
}

SymbolPoly operator-(const SymbolPoly& a) {
    SymbolPoly r(a.n_);
    for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
}

SymbolPoly operator-(const SymbolPoly& a, const SymbolPoly& b) { return a + (-b); }

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("SymbolPoly: mismatched n");
    SymbolPoly r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            SymbolPoly::Monomial m = ma;
            for (const auto& [v, e] : mb.xexp) m.xexp[v] += e;
            for (const auto& [v, e] : mb.xiexp) m.xiexp[v] += e;
            r.add_term(m, ca * cb);
        }
    return r;
}

SymbolPoly SymbolPoly::scale(const UPoly& c) const {
    SymbolPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, co] : terms_) r.add_term(m, co * c);
    return r;
}

SymbolPoly total_symbol(const WeylElement& P) {
    SymbolPoly out(P.n());
    for (const auto& [m, c] : P.terms()) {
        SymbolPoly::Monomial sm;
        sm.xexp = m.xexp;
        sm.xiexp = m.dexp;
        out.add_term(sm, c);
    }
    return out;
}

SymbolPoly principal_symbol(const WeylElement& P) {
    const int ord = P.order();
    SymbolPoly out(P.n());
    for (const auto& [m, c] : P.terms()) {
        if (m.ddegree() != ord) continue;
        SymbolPoly::Monomial sm;
        sm.xexp = m.xexp;
        sm.xiexp = m.dexp;
        out.add_term(sm, c);
    }
    return out;
}

std::string SymbolPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const bool paren = it->second.coeffs().size() > 1;
        os << (paren ? "(" + it->second.to_string() + ")" : it->second.to_string());
        for (const auto& [v, e] : it->first.xexp) {
            os << " x[" << v.i << "," << v.j << "]";
            if (e != 1) os << "^" << e;
        }
        for (const auto& [v, e] : it->first.xiexp) {
            os << " xi[" << v.i << "," << v.j << "]";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace skewcap
