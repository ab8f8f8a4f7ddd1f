#pragma once

#include "skewcap/matrix.hpp"
#include "skewcap/weyl.hpp"

namespace skewcap {

using OpMatrix = SquareMatrix<WeylElement>;

// dim x dim zero matrix over PD(Alt_n).
OpMatrix op_zero(int dim, int n);
OpMatrix op_identity(int dim, int n);
OpMatrix op_from_scalar(const ScalarMatrix& s, int n);

inline OpMatrix op_matmul(const OpMatrix& a, const OpMatrix& b) {
    return matmul(a, b, WeylElement::zero(a.at(1, 1).n()));
}

// The alternating generator matrices M = (x_{i,j}) and D = (d_{i,j}).
OpMatrix build_m(int n);
OpMatrix build_d(int n);

// The 2n x 2n operator matrix with M upper-left, u J_n / -u J_n off-diagonal
// blocks, and the anti-transposed derivation block lower-right:
// entry (n+r, n+c) = d_{n+1-c, n+1-r}.
OpMatrix build_phi_tilde(int n);

// Phi(u) := PhiTilde(u) J_{2n}, anti-alternating.
OpMatrix build_phi(int n);

// Negative-index convention: -i stands for dim+1-i.
inline int neg_index(int i, int dim) { return dim + 1 - i; }

bool is_alternating(const OpMatrix& x);
// X_{i,j} = -X_{-j,-i} for all i,j.
bool is_anti_alternating(const OpMatrix& x);

// Block-diagonal embedding diag(g, J_n t(g^{-1}) J_n) into SO_{2n}.
ScalarMatrix iota(const ScalarMatrix& g);

// g-hat := J t(g) J.
ScalarMatrix check_hat(const ScalarMatrix& g);

// g X g-hat with scalar entries acting centrally.
OpMatrix scalar_conj(const ScalarMatrix& g, const OpMatrix& x);

// Entrywise pi(g) X_{i,j} pi(g)^{-1}. Entries must be affine in the
// generators (scalars plus linear combinations of x's and d's); anything
// else throws std::invalid_argument.
OpMatrix ad_matrix(const ScalarMatrix& g, const OpMatrix& x);

// Aligned grid rendering, one row per line.
std::string to_grid_string(const OpMatrix& x);

}  // namespace skewcap
