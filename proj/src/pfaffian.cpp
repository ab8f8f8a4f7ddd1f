#include "skewcap/pfaffian.hpp"

#include "skewcap/forms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace skewcap {

int permutation_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

namespace {

void enumerate(std::vector<int>& free_elems, std::vector<std::pair<int, int>>& acc,
               std::vector<Matching>& out) {
    if (free_elems.empty()) {
        std::vector<int> flat;
        flat.reserve(2 * acc.size());
        for (const auto& [a, b] : acc) {
            flat.push_back(a);
            flat.push_back(b);
        }
        out.push_back({acc, permutation_sign(flat)});
        return;
    }
    const int a = free_elems[0];
    for (std::size_t p = 1; p < free_elems.size(); ++p) {
        const int b = free_elems[p];
        std::vector<int> rest;
        rest.reserve(free_elems.size() - 2);
        for (std::size_t q = 1; q < free_elems.size(); ++q)
            if (q != p) rest.push_back(free_elems[q]);
        acc.push_back({a, b});
        enumerate(rest, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Matching> perfect_matchings(int m) {
    if (m % 2 != 0 || m < 0) throw std::invalid_argument("perfect_matchings: need even size");
    std::vector<int> elems(m);
    std::iota(elems.begin(), elems.end(), 1);
    std::vector<std::pair<int, int>> acc;
    std::vector<Matching> out;
    enumerate(elems, acc, out);
    return out;
}

PfGuards& pf_guards() {
    static PfGuards g;
    return g;
}

int& pf_threads() {
    static int t = 1;
    return t;
}

namespace {

void require_alternating_even(const OpMatrix& x, const char* who, int guard) {
    if (x.dim() % 2 != 0) throw std::invalid_argument(std::string(who) + ": odd dimension");
    if (!is_alternating(x)) throw std::domain_error(std::string(who) + ": matrix is not alternating");
    if (x.dim() > guard)
        throw std::invalid_argument(std::string(who) + ": dimension exceeds guard; use pf_restricted or the forms backend");
}

// Symmetrized product over one matching. Entries that commute with every
// other entry are pulled out; only the clashing subset is averaged over its
// orderings.
WeylElement matching_term(const OpMatrix& x, const Matching& mt, bool fuse) {
    const int n = x.at(1, 1).n();
    std::vector<const WeylElement*> entries;
    entries.reserve(mt.pairs.size());
    for (const auto& [a, b] : mt.pairs) {
        const WeylElement& e = x.at(a, b);
        if (e.is_zero()) return WeylElement::zero(n);
        entries.push_back(&e);
    }

    std::vector<std::size_t> clash;
    if (fuse) {
        for (std::size_t k = 0; k < entries.size(); ++k) {
            bool bad = false;
            for (std::size_t l = 0; l < entries.size() && !bad; ++l)
                if (l != k && !entries[k]->commutes_with(*entries[l])) bad = true;
            if (bad) clash.push_back(k);
        }
    } else {
        clash.resize(entries.size());
        std::iota(clash.begin(), clash.end(), 0);
    }

    WeylElement fixed = WeylElement::one(n);
    for (std::size_t k = 0; k < entries.size(); ++k)
        if (!std::count(clash.begin(), clash.end(), k)) fixed = weyl_mul(fixed, *entries[k]);

    if (clash.empty()) return fixed.scale(Rational(mt.sign));

    std::vector<std::size_t> order = clash;
    WeylElement sym = WeylElement::zero(n);
    Rational count(0);
    std::sort(order.begin(), order.end());
    do {
        WeylElement prod = fixed;
        for (std::size_t k : order) prod = weyl_mul(prod, *entries[k]);
        sym += prod;
        count += Rational(1);
    } while (std::next_permutation(order.begin(), order.end()));
    return sym.scale(Rational(mt.sign) / count);
}

WeylElement sum_over_matchings(const OpMatrix& x, const std::vector<Matching>& mts, bool fuse) {
    const int n = x.at(1, 1).n();
    const int threads = std::max(1, pf_threads());
    if (threads == 1 || mts.size() < 64) {
        WeylElement acc = WeylElement::zero(n);
        for (const Matching& mt : mts) acc += matching_term(x, mt, fuse);
        return acc;
    }
    std::vector<WeylElement> partial(threads, WeylElement::zero(n));
    std::vector<std::thread> pool;
    const std::size_t chunk = (mts.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            const std::size_t lo = t * chunk;
            const std::size_t hi = std::min(mts.size(), lo + chunk);
            for (std::size_t k = lo; k < hi; ++k) partial[t] += matching_term(x, mts[k], fuse);
        });
    }
    for (auto& th : pool) th.join();
    WeylElement acc = WeylElement::zero(n);
    for (const WeylElement& p : partial) acc += p;
    return acc;
}

}  // namespace

WeylElement pf_full(const OpMatrix& x) {
    require_alternating_even(x, "pf_full", pf_guards().full_max);
    const int dim = x.dim();
    const int n = x.at(1, 1).n();
    const int half = dim / 2;
    std::vector<int> perm(dim);
    std::iota(perm.begin(), perm.end(), 1);
    WeylElement acc = WeylElement::zero(n);
    do {
        WeylElement prod = WeylElement::one(n);
        bool dead = false;
        for (int k = 0; k < half; ++k) {
            const WeylElement& e = x.at(perm[2 * k], perm[2 * k + 1]);
            if (e.is_zero()) {
                dead = true;
                break;
            }
            prod = weyl_mul(prod, e);
        }
        if (dead) continue;
        acc += prod.scale(Rational(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Rational norm = Rational(1) / (Rational(2).pow(half) * Rational::factorial(half));
    return acc.scale(norm);
}

WeylElement pf_restricted(const OpMatrix& x, bool fuse) {
    require_alternating_even(x, "pf_restricted", pf_guards().restricted_max);
    return sum_over_matchings(x, perfect_matchings(x.dim()), fuse);
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    struct Rec {
        int n, k;
        std::vector<std::vector<int>>& out;
        void run(std::vector<int>& cur, int next) {
            if (static_cast<int>(cur.size()) == k) {
                out.push_back(cur);
                return;
            }
            for (int v = next; v <= n; ++v) {
                cur.push_back(v);
                run(cur, v + 1);
                cur.pop_back();
            }
        }
    } rec{n, k, out};
    rec.run(cur, 1);
    return out;
}

WeylElement generator_submatrix_pfaffian(int n, const std::vector<int>& idx, GenKind kind) {
    if (idx.empty()) return WeylElement::one(n);
    OpMatrix sub(static_cast<int>(idx.size()), WeylElement::zero(n));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
            if (a != b)
                sub.at(static_cast<int>(a + 1), static_cast<int>(b + 1)) =
                    signed_generator(n, idx[a], idx[b], kind);
    return pf_commutative(sub, WeylElement::zero(n));
}

WeylElement pfaffian_alternating(const OpMatrix& x, PfBackend backend) {
    switch (backend) {
        case PfBackend::Full:
            return pf_full(x);
        case PfBackend::Restricted:
            return pf_restricted(x);
        case PfBackend::Forms: {
            const int n = x.at(1, 1).n();
            if (!is_alternating(x)) throw std::domain_error("pfaffian: matrix is not alternating");
            // The forms backend consumes anti-alternating input; X J is
            // anti-alternating exactly when X is alternating.
            return pf_via_forms(op_matmul(x, op_from_scalar(j_matrix(x.dim()), n)));
        }
        case PfBackend::Commutative:
            return pf_commutative(x, WeylElement::zero(x.at(1, 1).n()));
    }
    throw std::logic_error("pfaffian: unknown backend");
}

WeylElement pf_anti(const OpMatrix& x, PfBackend backend) {
    if (!is_anti_alternating(x)) throw std::domain_error("pf_anti: matrix is not anti-alternating");
    if (backend == PfBackend::Forms) return pf_via_forms(x);
    const int n = x.at(1, 1).n();
    const OpMatrix alt = op_matmul(x, op_from_scalar(j_matrix(x.dim()), n));
    return pfaffian_alternating(alt, backend);
}

bool pf_equivariance_check(const ScalarMatrix& g, const OpMatrix& x) {
    const WeylElement lhs = pf_anti(scalar_conj(g, x));
    const WeylElement rhs = pf_anti(x).scale(det(g));
    return lhs == rhs;
}

}  // namespace skewcap
