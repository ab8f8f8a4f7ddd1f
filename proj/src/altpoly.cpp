#include "skewcap/altpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace skewcap {

AltPoly::AltPoly(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("AltPoly: n must be >= 1");
}

AltPoly AltPoly::scalar(int n, const UPoly& c) {
    AltPoly p(n);
    if (!c.is_zero()) p.terms_[Monomial{}] = c;
    return p;
}

AltPoly AltPoly::variable(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("AltPoly::variable: index outside [1,n]");
    AltPoly p(n);
    if (i == j) return p;
    Monomial m;
    m[VarIndex{std::min(i, j), std::max(i, j)}] = 1;
    p.terms_[m] = UPoly(Rational(i < j ? 1 : -1));
    return p;
}

AltPoly AltPoly::monomial(int n, const Monomial& m, const UPoly& c) {
    AltPoly p(n);
    p.add_term(m, c);
    return p;
}

int AltPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (const auto& [v, e] : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

void AltPoly::add_term(const Monomial& m, const UPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AltPoly& AltPoly::operator+=(const AltPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("AltPoly: mismatched n");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

AltPoly operator+(const AltPoly& a, const AltPoly& b) {
    AltPoly r = a;
    r += b;
    return r;
}

AltPoly operator-(const AltPoly& a) {
    AltPoly r(a.n_);
    for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
}

AltPoly operator-(const AltPoly& a, const AltPoly& b) { return a + (-b); }

AltPoly operator*(const AltPoly& a, const AltPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("AltPoly: mismatched n");
    AltPoly r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            AltPoly::Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            r.add_term(m, ca * cb);
        }
    return r;
}

AltPoly AltPoly::scale(const UPoly& c) const {
    AltPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, co] : terms_) r.add_term(m, co * c);
    return r;
}

AltPoly apply(const WeylElement& P, const AltPoly& f) {
    if (P.n() != f.n()) throw std::invalid_argument("apply: mismatched n");
    AltPoly out(f.n());
    for (const auto& [op, oc] : P.terms()) {
        for (const auto& [fm, fc] : f.terms()) {
            // Differentiate: each d[v]^k contributes the falling factorial.
            AltPoly::Monomial m = fm;
            Rational fall(1);
            bool dead = false;
            for (const auto& [v, k] : op.dexp) {
                auto it = m.find(v);
                const int e = it == m.end() ? 0 : it->second;
                if (e < k) {
                    dead = true;
                    break;
                }
                for (int t = 0; t < k; ++t) fall *= Rational(e - t);
                if (e == k) {
                    m.erase(it);
                } else {
                    it->second = e - k;
                }
            }
            if (dead) continue;
            for (const auto& [v, k] : op.xexp) m[v] += k;
            out.add_term(m, (oc * fc).scale(fall));
        }
    }
    return out;
}

std::string AltPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const bool needs_paren = it->second.coeffs().size() > 1;
        os << (needs_paren ? "(" + it->second.to_string() + ")" : it->second.to_string());
        for (const auto& [v, e] : it->first) {
            os << " x[" << v.i << "," << v.j << "]";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace skewcap
