#include "skewcap/forms.hpp"

#include "skewcap/pfaffian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewcap {

int rank_of_label(int label, int vdim) {
    const int n = vdim / 2;
    if (label >= 1 && label <= n) return label;
    if (label <= -1 && label >= -n) return vdim + 1 + label;
    throw std::out_of_range("rank_of_label: label outside [+-n]");
}

int label_of_rank(int rank, int vdim) {
    const int n = vdim / 2;
    if (rank < 1 || rank > vdim) throw std::out_of_range("label_of_rank: rank outside [1,vdim]");
    return rank <= n ? rank : rank - vdim - 1;
}

std::pair<int, ExtIndex> wedge_indices(const ExtIndex& a, const ExtIndex& b) {
    ExtIndex merged;
    merged.ranks.reserve(a.ranks.size() + b.ranks.size());
    // Count the transpositions needed to interleave b into a: each element
    // of b jumps over the elements of a that remain to its right.
    std::size_t ia = 0, ib = 0;
    int crossings = 0;
    while (ia < a.ranks.size() && ib < b.ranks.size()) {
        if (a.ranks[ia] == b.ranks[ib]) return {0, ExtIndex{}};
        if (a.ranks[ia] < b.ranks[ib]) {
            merged.ranks.push_back(a.ranks[ia++]);
        } else {
            merged.ranks.push_back(b.ranks[ib++]);
            crossings += static_cast<int>(a.ranks.size() - ia);
        }
    }
    while (ia < a.ranks.size()) merged.ranks.push_back(a.ranks[ia++]);
    while (ib < b.ranks.size()) merged.ranks.push_back(b.ranks[ib++]);
    return {crossings % 2 == 0 ? 1 : -1, merged};
}

ExtElement::ExtElement(int vdim, int coeff_n) : vdim_(vdim), coeff_n_(coeff_n) {
    if (vdim < 2 || vdim % 2 != 0) throw std::invalid_argument("ExtElement: vdim must be even and >= 2");
    if (coeff_n < 1) throw std::invalid_argument("ExtElement: coefficient n must be >= 1");
}

ExtElement ExtElement::scalar(int vdim, int coeff_n, const UPoly& c) {
    ExtElement e(vdim, coeff_n);
    if (!c.is_zero()) e.terms_.emplace(ExtIndex{}, WeylElement::scalar(coeff_n, c));
    return e;
}

ExtElement ExtElement::term(int vdim, const ExtIndex& idx, const WeylElement& c) {
    ExtElement e(vdim, c.n());
    e.add_term(idx, c);
    return e;
}

ExtElement ExtElement::basis(int vdim, int coeff_n, int label) {
    ExtIndex idx;
    idx.ranks.push_back(rank_of_label(label, vdim));
    return term(vdim, idx, WeylElement::one(coeff_n));
}

void ExtElement::add_term(const ExtIndex& idx, const WeylElement& c) {
    int prev = 0;
    for (int r : idx.ranks) {
        if (r <= prev || r > vdim_) throw std::out_of_range("ExtElement: malformed index set");
        prev = r;
    }
    if (c.is_zero()) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
    if (vdim_ != o.vdim_ || coeff_n_ != o.coeff_n_) throw std::invalid_argument("ExtElement: shape mismatch");
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    ExtElement r = a;
    r += b;
    return r;
}

ExtElement operator-(const ExtElement& a) {
    ExtElement r(a.vdim_, a.coeff_n_);
    for (const auto& [idx, c] : a.terms_) r.terms_.emplace(idx, -c);
    return r;
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) { return a + (-b); }

ExtElement ExtElement::scale(const UPoly& c) const {
    ExtElement r(vdim_, coeff_n_);
    if (c.is_zero()) return r;
    for (const auto& [idx, co] : terms_) r.add_term(idx, co.scale(c));
    return r;
}

WeylElement ExtElement::coefficient(const ExtIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? WeylElement::zero(coeff_n_) : it->second;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
    if (a.vdim() != b.vdim() || a.coeff_n() != b.coeff_n())
        throw std::invalid_argument("wedge: shape mismatch");
    ExtElement r(a.vdim(), a.coeff_n());
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            auto [sign, merged] = wedge_indices(ia, ib);
            if (sign == 0) continue;
            WeylElement c = weyl_mul(ca, cb);
            if (sign < 0) c = -c;
            r.add_term(merged, c);
        }
    return r;
}

ExtElement ext_pow(const ExtElement& a, int e) {
    if (e < 0) throw std::invalid_argument("ext_pow: negative exponent");
    ExtElement r = ExtElement::one(a.vdim(), a.coeff_n());
    for (int t = 0; t < e; ++t) r = wedge(r, a);
    return r;
}

ExtElement ext_commutator(const ExtElement& a, const ExtElement& b) {
    return wedge(a, b) - wedge(b, a);
}

ExtElement two_form_of_matrix(const OpMatrix& x) {
    if (!is_anti_alternating(x)) throw std::domain_error("two_form_of_matrix: matrix is not anti-alternating");
    const int vdim = x.dim();
    const int n = x.at(1, 1).n();
    const int half = vdim / 2;
    ExtElement out(vdim, n);
    for (int li = -half; li <= half; ++li) {
        if (li == 0) continue;
        for (int lj = -half; lj <= half; ++lj) {
            if (lj == 0 || lj == -li) continue;
            const WeylElement& entry = x.at(rank_of_label(li, vdim), rank_of_label(lj, vdim));
            if (entry.is_zero()) continue;
            ExtIndex ei{{rank_of_label(li, vdim)}};
            ExtIndex emj{{rank_of_label(-lj, vdim)}};
            auto [sign, merged] = wedge_indices(ei, emj);
            if (sign == 0) continue;
            out.add_term(merged, sign < 0 ? -entry : entry);
        }
    }
    return out;
}

ExtElement tau(int n) {
    // Single sum over i; this is the reading under which
    // tau^2 = 2 sum_{i<j} e_i e_j e_-j e_-i holds.
    ExtElement out(2 * n, n);
    for (int i = 1; i <= n; ++i) {
        ExtIndex idx{{i, 2 * n + 1 - i}};
        out.add_term(idx, WeylElement::one(n));
    }
    return out;
}

ExtElement theta_minus(int n) {
    ExtElement out(2 * n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            ExtIndex idx{{i, j}};
            out.add_term(idx, signed_generator(n, i, j, GenKind::Mult).scale(Rational(2)));
        }
    return out;
}

ExtElement theta_plus(int n) {
    ExtElement out(2 * n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            // e_{-j} e_{-i} has ranks (2n+1-j, 2n+1-i), already increasing.
            ExtIndex idx{{2 * n + 1 - j, 2 * n + 1 - i}};
            out.add_term(idx, signed_generator(n, i, j, GenKind::Deriv).scale(Rational(2)));
        }
    return out;
}

ExtElement omega(int n) {
    return theta_minus(n) + tau(n).scale(UPoly::monomial(1, Rational(2))) + theta_plus(n);
}

WeylElement volume_coefficient(const ExtElement& w) {
    ExtIndex vol;
    vol.ranks.resize(w.vdim());
    for (int i = 0; i < w.vdim(); ++i) vol.ranks[i] = i + 1;
    return w.coefficient(vol);
}

WeylElement pf_via_forms(const OpMatrix& x) {
    const int half = x.dim() / 2;
    const ExtElement xi = two_form_of_matrix(x);
    const WeylElement vol = volume_coefficient(ext_pow(xi, half));
    const Rational norm = Rational(1) / (Rational(2).pow(half) * Rational::factorial(half));
    return vol.scale(norm);
}

WordForm::WordForm(int vdim, int coeff_n) : vdim_(vdim), coeff_n_(coeff_n) {}

WordForm WordForm::scalar(int vdim, int coeff_n, const UPoly& c) {
    WordForm f(vdim, coeff_n);
    if (!c.is_zero()) f.terms_[ExtIndex{}] = {WordTerm{c, {}}};
    return f;
}

WordForm WordForm::theta_minus(int n) {
    WordForm f(2 * n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            f.terms_[ExtIndex{{i, j}}] = {WordTerm{UPoly(2), {Generator{GenKind::Mult, i, j}}}};
    return f;
}

WordForm WordForm::theta_plus(int n) {
    WordForm f(2 * n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            f.terms_[ExtIndex{{2 * n + 1 - j, 2 * n + 1 - i}}] =
                std::vector<WordTerm>{WordTerm{UPoly(2), {Generator{GenKind::Deriv, i, j}}}};
    return f;
}

WordForm operator+(const WordForm& a, const WordForm& b) {
    if (a.vdim_ != b.vdim_ || a.coeff_n_ != b.coeff_n_) throw std::invalid_argument("WordForm: shape mismatch");
    WordForm r = a;
    for (const auto& [idx, ts] : b.terms_) {
        auto& dst = r.terms_[idx];
        dst.insert(dst.end(), ts.begin(), ts.end());
    }
    return r;
}

WordForm wedge(const WordForm& a, const WordForm& b) {
    if (a.vdim_ != b.vdim_ || a.coeff_n_ != b.coeff_n_) throw std::invalid_argument("WordForm: shape mismatch");
    WordForm r(a.vdim_, a.coeff_n_);
    for (const auto& [ia, tsa] : a.terms_)
        for (const auto& [ib, tsb] : b.terms_) {
            auto [sign, merged] = wedge_indices(ia, ib);
            if (sign == 0) continue;
            auto& dst = r.terms_[merged];
            for (const WordTerm& ta : tsa)
                for (const WordTerm& tb : tsb) {
                    WordTerm t;
                    t.coeff = ta.coeff * tb.coeff;
                    if (sign < 0) t.coeff = -t.coeff;
                    t.word = ta.word;
                    t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
                    dst.push_back(std::move(t));
                }
        }
    return r;
}

WordForm WordForm::pow(int e) const {
    if (e < 0) throw std::invalid_argument("WordForm::pow: negative exponent");
    WordForm r = WordForm::scalar(vdim_, coeff_n_, UPoly(1));
    for (int t = 0; t < e; ++t) r = wedge(r, *this);
    return r;
}

ExtElement WordForm::evaluate() const {
    ExtElement out(vdim_, coeff_n_);
    for (const auto& [idx, ts] : terms_)
        for (const WordTerm& t : ts) {
            WeylElement prod = WeylElement::scalar(coeff_n_, t.coeff);
            for (const Generator& g : t.word)
                prod = weyl_mul(prod, signed_generator(coeff_n_, g.i, g.j, g.kind));
            out.add_term(idx, prod);
        }
    return out;
}

ExtElement WordForm::normal_order() const {
    ExtElement out(vdim_, coeff_n_);
    for (const auto& [idx, ts] : terms_)
        for (const WordTerm& t : ts) out.add_term(idx, normal_order_word(coeff_n_, t.word, t.coeff));
    return out;
}

bool cr_check(int n) {
    const ExtElement t = tau(n), tm = theta_minus(n), tp = theta_plus(n);
    const ExtElement zero = ExtElement::zero(2 * n, n);
    if (!(ext_commutator(t, tm) == zero)) return false;
    if (!(ext_commutator(t, tp) == zero)) return false;
    return ext_commutator(tp, tm) == ext_pow(t, 2).scale(Rational(2));
}

bool theta_power_identity_check(int n, int r) {
    if (2 * r > n) throw std::invalid_argument("theta_power_identity_check: need 2r <= n");
    const Rational norm = Rational(2).pow(r) * Rational::factorial(r);

    ExtElement rhs_minus(2 * n, n), rhs_plus(2 * n, n);
    for (const auto& I : subsets_of_size(n, 2 * r)) {
        ExtIndex eI{I};
        rhs_minus.add_term(eI, generator_submatrix_pfaffian(n, I, GenKind::Mult).scale(norm));
        ExtIndex emI;
        for (auto it = I.rbegin(); it != I.rend(); ++it) emI.ranks.push_back(2 * n + 1 - *it);
        rhs_plus.add_term(emI, generator_submatrix_pfaffian(n, I, GenKind::Deriv).scale(norm));
    }
    return ext_pow(theta_minus(n), r) == rhs_minus && ext_pow(theta_plus(n), r) == rhs_plus;
}

Rational c_coeff(int k, int m) {
    if (k < 0 || 2 * k > m) return Rational(0);
    return Rational::factorial(m) /
           (Rational(2).pow(k) * Rational::factorial(k) * Rational::factorial(m - 2 * k));
}

bool expansion_check(int n, int m) {
    const WordForm sum_w = WordForm::theta_minus(n) + WordForm::theta_plus(n);
    const ExtElement lhs = ext_pow(theta_minus(n) + theta_plus(n), m);
    const ExtElement two_tau_sq = ext_pow(tau(n), 2).scale(Rational(2));
    ExtElement rhs = ExtElement::zero(2 * n, n);
    for (int k = 0; 2 * k <= m; ++k) {
        const ExtElement ordered = sum_w.pow(m - 2 * k).normal_order();
        rhs += wedge(ext_pow(two_tau_sq, k), ordered).scale(c_coeff(k, m));
    }
    return lhs == rhs;
}

Rational descending_factorial(int z, int k) {
    Rational r(1);
    for (int t = 0; t < k; ++t) r *= Rational(z - t);
    return r;
}

bool theta_commutation_check(int n, int a, int b) {
    const ExtElement tm = theta_minus(n), tp = theta_plus(n);
    const ExtElement lhs = wedge(ext_pow(tp, a), ext_pow(tm, b));
    const ExtElement two_tau_sq = ext_pow(tau(n), 2).scale(Rational(2));
    ExtElement rhs = ExtElement::zero(2 * n, n);
    for (int k = 0; k <= std::min(a, b); ++k) {
        const Rational c = descending_factorial(a, k) * descending_factorial(b, k) / Rational::factorial(k);
        rhs += wedge(ext_pow(two_tau_sq, k), wedge(ext_pow(tm, b - k), ext_pow(tp, a - k))).scale(c);
    }
    return lhs == rhs;
}

int shuffle_sign(const std::vector<int>& subset, int n) {
    std::vector<int> seq;
    seq.reserve(n);
    for (int v = 1; v <= n; ++v)
        if (!std::count(subset.begin(), subset.end(), v)) seq.push_back(v);
    for (int v : subset) seq.push_back(v);
    return permutation_sign(seq);
}

int shuffle_sign_mirror(const std::vector<int>& subset, int n) {
    // Work with positions of -[n] in the total order: -i has position n+1-i
    // inside the block (-n, ..., -1). The arrangement is (-[n]\-I, -I), each
    // part listed in increasing order.
    std::vector<int> seq;
    seq.reserve(n);
    for (int i = n; i >= 1; --i)
        if (!std::count(subset.begin(), subset.end(), i)) seq.push_back(n + 1 - i);
    for (auto it = subset.rbegin(); it != subset.rend(); ++it) seq.push_back(n + 1 - *it);
    return permutation_sign(seq);
}

std::string ExtElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first) os << "\n";
        first = false;
        os << "e[";
        for (std::size_t k = 0; k < idx.ranks.size(); ++k) {
            if (k) os << ",";
            os << label_of_rank(idx.ranks[k], vdim_);
        }
        os << "] ⊗ (" << c.to_string() << ")";
    }
    return os.str();
}

}  // namespace skewcap
