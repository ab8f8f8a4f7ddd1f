#include "skewcap/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewcap {

int WeylMonomial::xdegree() const {
    int d = 0;
    for (const auto& [v, e] : xexp) d += e;
    return d;
}

int WeylMonomial::ddegree() const {
    int d = 0;
    for (const auto& [v, e] : dexp) d += e;
    return d;
}

bool operator<(const WeylMonomial& a, const WeylMonomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.xexp != b.xexp) return a.xexp < b.xexp;
    return a.dexp < b.dexp;
}

WeylElement::WeylElement(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("WeylElement: n must be >= 1");
}

WeylElement WeylElement::scalar(int n, const UPoly& c) {
    WeylElement e(n);
    if (!c.is_zero()) e.terms_[WeylMonomial{}] = c;
    return e;
}

WeylElement WeylElement::monomial(int n, const WeylMonomial& m, const UPoly& c) {
    WeylElement e(n);
    e.add_term(m, c);
    return e;
}

bool WeylElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

UPoly WeylElement::scalar_part() const {
    auto it = terms_.find(WeylMonomial{});
    return it == terms_.end() ? UPoly() : it->second;
}

int WeylElement::order() const {
    int ord = -1;
    for (const auto& [m, c] : terms_) ord = std::max(ord, m.ddegree());
    return ord;
}

void WeylElement::add_term(const WeylMonomial& m, const UPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("WeylElement: mismatched n");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
    WeylElement r = a;
    r += b;
    return r;
}

WeylElement operator-(const WeylElement& a) {
    WeylElement r(a.n_);
    for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) { return a + (-b); }

WeylElement WeylElement::scale(const UPoly& c) const {
    WeylElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, co] : terms_) r.add_term(m, co * c);
    return r;
}

WeylElement WeylElement::eval_u(const Rational& u0) const {
    WeylElement r(n_);
    for (const auto& [m, co] : terms_) r.add_term(m, UPoly(co.eval(u0)));
    return r;
}

std::set<VarIndex> WeylElement::x_support() const {
    std::set<VarIndex> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.xexp) s.insert(v);
    return s;
}

std::set<VarIndex> WeylElement::d_support() const {
    std::set<VarIndex> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.dexp) s.insert(v);
    return s;
}

bool WeylElement::commutes_with(const WeylElement& o) const {
    const auto xa = x_support(), da = d_support();
    const auto xb = o.x_support(), db = o.d_support();
    for (const auto& v : xa)
        if (db.count(v)) return false;
    for (const auto& v : da)
        if (xb.count(v)) return false;
    return true;
}

WeylElement signed_generator(int n, int i, int j, GenKind kind) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("signed_generator: index outside [1,n]");
    WeylElement e(n);
    if (i == j) return e;
    const bool flip = i > j;
    const VarIndex v{std::min(i, j), std::max(i, j)};
    WeylMonomial m;
    (kind == GenKind::Mult ? m.xexp : m.dexp)[v] = 1;
    e.add_term(m, UPoly(Rational(flip ? -1 : 1)));
    return e;
}

namespace {

// d^a x^b in one variable, as (x-exponent, d-exponent, integer coeff) triples:
// sum_k k! C(a,k) C(b,k) x^(b-k) d^(a-k).
struct Swap {
    int xe;
    int de;
    Rational c;
};

std::vector<Swap> one_var_swaps(int a, int b) {
    std::vector<Swap> out;
    const int kmax = std::min(a, b);
    for (int k = 0; k <= kmax; ++k) {
        Rational c = Rational::factorial(k) * Rational::binomial(a, k) * Rational::binomial(b, k);
        out.push_back({b - k, a - k, c});
    }
    return out;
}

void mono_mul_into(WeylElement& acc, const WeylMonomial& a, const WeylMonomial& b, const UPoly& coeff) {
    // Variables where a's derivations meet b's multiplications need the
    // one-variable reordering; everything else merges exponent-wise.
    std::vector<VarIndex> clash;
    for (const auto& [v, e] : a.dexp)
        if (b.xexp.count(v)) clash.push_back(v);

    WeylMonomial base;
    base.xexp = a.xexp;
    for (const auto& [v, e] : b.xexp)
        if (!std::count(clash.begin(), clash.end(), v)) base.xexp[v] += e;
    base.dexp = b.dexp;
    for (const auto& [v, e] : a.dexp)
        if (!std::count(clash.begin(), clash.end(), v)) base.dexp[v] += e;

    if (clash.empty()) {
        acc.add_term(base, coeff);
        return;
    }

    std::vector<std::vector<Swap>> options;
    options.reserve(clash.size());
    for (const auto& v : clash) options.push_back(one_var_swaps(a.dexp.at(v), b.xexp.at(v)));

    std::vector<std::size_t> pick(clash.size(), 0);
    while (true) {
        WeylMonomial m = base;
        Rational c(1);
        for (std::size_t t = 0; t < clash.size(); ++t) {
            const Swap& s = options[t][pick[t]];
            c *= s.c;
            if (s.xe > 0) m.xexp[clash[t]] += s.xe;
            if (s.de > 0) m.dexp[clash[t]] += s.de;
        }
        acc.add_term(m, coeff.scale(c));
        std::size_t t = 0;
        for (; t < pick.size(); ++t) {
            if (++pick[t] < options[t].size()) break;
            pick[t] = 0;
        }
        if (t == pick.size()) break;
    }
}

}  // namespace

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("weyl_mul: mismatched n");
    WeylElement r(a.n());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) mono_mul_into(r, ma, mb, ca * cb);
    return r;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) {
    return weyl_mul(a, b) - weyl_mul(b, a);
}

WeylElement weyl_pow(const WeylElement& a, int e) {
    if (e < 0) throw std::invalid_argument("weyl_pow: negative exponent");
    WeylElement r = WeylElement::one(a.n());
    for (int t = 0; t < e; ++t) r = weyl_mul(r, a);
    return r;
}

WeylElement normal_order_word(int n, const std::vector<Generator>& word, const UPoly& coeff) {
    int sign = 1;
    WeylMonomial m;
    for (const Generator& g : word) {
        if (g.i < 1 || g.i > n || g.j < 1 || g.j > n)
            throw std::out_of_range("normal_order_word: index outside [1,n]");
        if (g.i == g.j) return WeylElement::zero(n);
        if (g.i > g.j) sign = -sign;
        const VarIndex v{std::min(g.i, g.j), std::max(g.i, g.j)};
        (g.kind == GenKind::Mult ? m.xexp : m.dexp)[v] += 1;
    }
    return WeylElement::monomial(n, m, coeff.scale(Rational(sign)));
}

BinomialExpansionCheck binomial_central_commutator_check(int m) {
    if (m < 0 || m > 16) throw std::invalid_argument("binomial_central_commutator_check: m out of range");
    const int n = 2;  // PD(Alt_2) is the one-variable Weyl algebra
    const WeylElement A = signed_generator(n, 1, 2, GenKind::Mult);
    const WeylElement B = signed_generator(n, 1, 2, GenKind::Deriv);
    const WeylElement lhs = weyl_pow(A + B, m);
    const Rational comm(-1);  // [A,B] = [x,d] = -1

    auto rhs_with = [&](bool doubled) {
        WeylElement acc = WeylElement::zero(n);
        for (int k = 0; 2 * k <= m; ++k) {
            Rational ck = Rational::factorial(m) /
                          (Rational(2).pow(k) * Rational::factorial(k) * Rational::factorial(m - 2 * k));
            Rational cpow = comm.pow(doubled ? 2 * k : k);
            WeylElement inner = WeylElement::zero(n);
            for (int s = 0; s <= m - 2 * k; ++s) {
                WeylElement t = weyl_mul(weyl_pow(B, s), weyl_pow(A, m - 2 * k - s));
                inner += t.scale(Rational::binomial(m - 2 * k, s));
            }
            acc += inner.scale(ck * cpow);
        }
        return acc;
    };

    return BinomialExpansionCheck{rhs_with(true) == lhs, rhs_with(false) == lhs};
}

std::string WeylElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const WeylMonomial& m = it->first;
        UPoly c = it->second;
        bool negated = false;
        // Pull a leading minus out of single-term coefficients.
        if (c.coeffs().size() == 1 && c.coeffs().begin()->second.sign() < 0) {
            negated = true;
            c = -c;
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;

        if (m.is_one()) {
            os << c.to_string();
            continue;
        }
        std::string cs;
        if (!(c == UPoly(1))) {
            cs = c.is_constant() || c.coeffs().size() == 1 ? c.to_string() : "(" + c.to_string() + ")";
            os << cs << " ";
        }
        bool first_factor = true;
        auto put = [&](const char* name, const std::map<VarIndex, int>& exps) {
            for (const auto& [v, e] : exps) {
                if (!first_factor) os << " ";
                first_factor = false;
                os << name << "[" << v.i << "," << v.j << "]";
                if (e != 1) os << "^" << e;
            }
        };
        put("x", m.xexp);
        put("d", m.dexp);
    }
    return os.str();
}

}  // namespace skewcap
