#pragma once

#include "skewcap/opmatrix.hpp"

#include <utility>
#include <vector>

namespace skewcap {

// One perfect matching of [2n]: disjoint ordered pairs (a_k, b_k), a_k < b_k,
// listed with a_1 < a_2 < ..., covering [2n]. sign is the parity of the
// flattened sequence as a permutation of (1, ..., 2n).
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int sign;
};

// Parity (+1/-1) of a sequence that permutes 1..m, by inversion count.
int permutation_sign(const std::vector<int>& seq);

std::vector<Matching> perfect_matchings(int m);

// Dimension guards; configuration, adjustable from the CLI.
struct PfGuards {
    int full_max = 8;
    int restricted_max = 12;
};
PfGuards& pf_guards();

// Worker threads for matching enumeration (1 = serial).
int& pf_threads();

enum class PfBackend { Full, Restricted, Forms, Commutative };

// (1/(2^n n!)) sum over all of S_2n, noncommutative ordered products.
// Requires an alternating matrix of even dimension within the guard.
WeylElement pf_full(const OpMatrix& x);

// (1/n!) sum over increasing-pair permutations; per matching the n!
// pair orderings are fused down to the subset whose entries fail the
// support-disjointness test. `fuse = false` keeps the plain n!-fold
// enumeration as the correctness path.
WeylElement pf_restricted(const OpMatrix& x, bool fuse = true);

// One term per matching, for pairwise-commuting entries.
template <typename T>
T pf_commutative(const SquareMatrix<T>& x, const T& zero) {
    if (x.dim() % 2 != 0) throw std::invalid_argument("pf_commutative: odd dimension");
    T acc = zero;
    for (const Matching& mt : perfect_matchings(x.dim())) {
        T prod = zero;
        bool first = true;
        bool dead = false;
        for (const auto& [a, b] : mt.pairs) {
            const T& e = x.at(a, b);
            if (e == zero) {
                dead = true;
                break;
            }
            prod = first ? e : prod * e;
            first = false;
        }
        if (dead) continue;
        if (mt.sign < 0) acc = acc - prod;
        else acc = acc + prod;
    }
    return acc;
}

// Recursive first-row expansion, same contract as pf_commutative.
template <typename T>
T pf_expansion(const SquareMatrix<T>& x, const T& zero) {
    if (x.dim() % 2 != 0) throw std::invalid_argument("pf_expansion: odd dimension");
    if (x.dim() == 0) return zero;
    std::vector<int> live(x.dim());
    for (int i = 0; i < x.dim(); ++i) live[i] = i + 1;
    struct Rec {
        const SquareMatrix<T>& m;
        const T& zero;
        T run(std::vector<int>& idx) {
            if (idx.empty()) return zero;  // resolved by caller for the empty product
            T acc = zero;
            const int a = idx[0];
            for (std::size_t p = 1; p < idx.size(); ++p) {
                const int b = idx[p];
                if (m.at(a, b) == zero) continue;
                std::vector<int> rest;
                rest.reserve(idx.size() - 2);
                for (std::size_t q = 1; q < idx.size(); ++q)
                    if (q != p) rest.push_back(idx[q]);
                T sub = rest.empty() ? zero : run(rest);
                T term = rest.empty() ? m.at(a, b) : m.at(a, b) * sub;
                if (p % 2 == 1) acc = acc + term;
                else acc = acc - term;
            }
            return acc;
        }
    } rec{x, zero};
    return rec.run(live);
}

// All k-subsets of [n], each ascending, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

// Pf of the idx-indexed generator submatrix (x_I or d_I); entries commute.
// The empty index set gives 1.
WeylElement generator_submatrix_pfaffian(int n, const std::vector<int>& idx, GenKind kind);

// Pf of an anti-alternating matrix: Pf(X J) under the chosen backend.
WeylElement pf_anti(const OpMatrix& x, PfBackend backend = PfBackend::Restricted);

// Dispatch on an alternating matrix.
WeylElement pfaffian_alternating(const OpMatrix& x, PfBackend backend);

// Pf(g X g-hat) == det(g) Pf(X) for anti-alternating X.
bool pf_equivariance_check(const ScalarMatrix& g, const OpMatrix& x);

}  // namespace skewcap
