#pragma once

#include "skewcap/rational.hpp"

#include <stdexcept>
#include <vector>

namespace skewcap {

// Dense square matrix; 1-based accessors throughout, matching the index
// conventions used everywhere else.
template <typename T>
class SquareMatrix {
  public:
    SquareMatrix(int dim, const T& fill) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim, fill) {
        if (dim < 1) throw std::invalid_argument("SquareMatrix: dim must be >= 1");
    }

    int dim() const { return dim_; }
    T& at(int i, int j) { return e_[idx(i, j)]; }
    const T& at(int i, int j) const { return e_[idx(i, j)]; }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }

  private:
    std::size_t idx(int i, int j) const {
        if (i < 1 || i > dim_ || j < 1 || j > dim_) throw std::out_of_range("SquareMatrix: index");
        return static_cast<std::size_t>(i - 1) * dim_ + (j - 1);
    }

    int dim_;
    std::vector<T> e_;
};

template <typename T>
SquareMatrix<T> matmul(const SquareMatrix<T>& a, const SquareMatrix<T>& b, const T& zero) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matmul: dimension mismatch");
    SquareMatrix<T> r(a.dim(), zero);
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = 1; j <= a.dim(); ++j) {
            T acc = zero;
            for (int k = 1; k <= a.dim(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

using ScalarMatrix = SquareMatrix<Rational>;

ScalarMatrix scalar_identity(int dim);
// J_m: 1's on the anti-diagonal, 0's elsewhere.
ScalarMatrix j_matrix(int dim);
ScalarMatrix transpose(const ScalarMatrix& a);
Rational det(const ScalarMatrix& a);
// Throws std::domain_error on a singular input.
ScalarMatrix inverse(const ScalarMatrix& a);

inline ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b) {
    return matmul(a, b, Rational(0));
}

// 2x2 minor: rows {r1,r2}, columns {c1,c2}.
Rational minor2(const ScalarMatrix& g, int r1, int r2, int c1, int c2);

}  // namespace skewcap
