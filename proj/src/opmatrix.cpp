#include "skewcap/opmatrix.hpp"

#include "skewcap/action.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace skewcap {

ScalarMatrix scalar_identity(int dim) {
    ScalarMatrix m(dim, Rational(0));
    for (int i = 1; i <= dim; ++i) m.at(i, i) = Rational(1);
    return m;
}

ScalarMatrix j_matrix(int dim) {
    ScalarMatrix m(dim, Rational(0));
    for (int i = 1; i <= dim; ++i) m.at(i, dim + 1 - i) = Rational(1);
    return m;
}

ScalarMatrix transpose(const ScalarMatrix& a) {
    ScalarMatrix r(a.dim(), Rational(0));
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = 1; j <= a.dim(); ++j) r.at(j, i) = a.at(i, j);
    return r;
}

Rational minor2(const ScalarMatrix& g, int r1, int r2, int c1, int c2) {
    return g.at(r1, c1) * g.at(r2, c2) - g.at(r1, c2) * g.at(r2, c1);
}

namespace {

// Fraction-free enough at desk scale: plain Gaussian elimination over Q.
// Returns (det, inverse) with inverse meaningful only when det != 0.
std::pair<Rational, ScalarMatrix> gauss(const ScalarMatrix& a, bool want_inverse) {
    const int n = a.dim();
    ScalarMatrix w = a;
    ScalarMatrix inv = scalar_identity(n);
    Rational d(1);
    for (int col = 1; col <= n; ++col) {
        int pivot = 0;
        for (int r = col; r <= n; ++r)
            if (!w.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == 0) return {Rational(0), inv};
        if (pivot != col) {
            for (int c = 1; c <= n; ++c) {
                std::swap(w.at(pivot, c), w.at(col, c));
                if (want_inverse) std::swap(inv.at(pivot, c), inv.at(col, c));
            }
            d = -d;
        }
        const Rational p = w.at(col, col);
        d *= p;
        const Rational pinv = p.inverse();
        for (int c = 1; c <= n; ++c) {
            w.at(col, c) *= pinv;
            if (want_inverse) inv.at(col, c) *= pinv;
        }
        for (int r = 1; r <= n; ++r) {
            if (r == col || w.at(r, col).is_zero()) continue;
            const Rational f = w.at(r, col);
            for (int c = 1; c <= n; ++c) {
                w.at(r, c) -= f * w.at(col, c);
                if (want_inverse) inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return {d, inv};
}

}  // namespace

Rational det(const ScalarMatrix& a) { return gauss(a, false).first; }

ScalarMatrix inverse(const ScalarMatrix& a) {
    auto [d, inv] = gauss(a, true);
    if (d.is_zero()) throw std::domain_error("inverse: singular matrix");
    return inv;
}

OpMatrix op_zero(int dim, int n) { return OpMatrix(dim, WeylElement::zero(n)); }

OpMatrix op_identity(int dim, int n) {
    OpMatrix m = op_zero(dim, n);
    for (int i = 1; i <= dim; ++i) m.at(i, i) = WeylElement::one(n);
    return m;
}

OpMatrix op_from_scalar(const ScalarMatrix& s, int n) {
    OpMatrix m = op_zero(s.dim(), n);
    for (int i = 1; i <= s.dim(); ++i)
        for (int j = 1; j <= s.dim(); ++j)
            if (!s.at(i, j).is_zero()) m.at(i, j) = WeylElement::scalar(n, UPoly(s.at(i, j)));
    return m;
}

OpMatrix build_m(int n) {
    OpMatrix m = op_zero(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) m.at(i, j) = signed_generator(n, i, j, GenKind::Mult);
    return m;
}

OpMatrix build_d(int n) {
    OpMatrix m = op_zero(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) m.at(i, j) = signed_generator(n, i, j, GenKind::Deriv);
    return m;
}

OpMatrix build_phi_tilde(int n) {
    if (n < 1) throw std::invalid_argument("build_phi_tilde: n must be >= 1");
    OpMatrix m = op_zero(2 * n, n);
    const UPoly u = UPoly::u();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) m.at(i, j) = signed_generator(n, i, j, GenKind::Mult);
    for (int i = 1; i <= n; ++i) m.at(i, 2 * n + 1 - i) = WeylElement::scalar(n, u);
    for (int r = 1; r <= n; ++r) m.at(n + r, n + 1 - r) = WeylElement::scalar(n, -u);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (r != c) m.at(n + r, n + c) = signed_generator(n, n + 1 - c, n + 1 - r, GenKind::Deriv);
    return m;
}

OpMatrix build_phi(int n) {
    const OpMatrix pt = build_phi_tilde(n);
    return op_matmul(pt, op_from_scalar(j_matrix(2 * n), n));
}

bool is_alternating(const OpMatrix& x) {
    for (int i = 1; i <= x.dim(); ++i)
        for (int j = i; j <= x.dim(); ++j)
            if (!(x.at(i, j) == -x.at(j, i))) return false;
    return true;
}

bool is_anti_alternating(const OpMatrix& x) {
    const int d = x.dim();
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            if (!(x.at(i, j) == -x.at(neg_index(j, d), neg_index(i, d)))) return false;
    return true;
}

ScalarMatrix iota(const ScalarMatrix& g) {
    const int n = g.dim();
    const ScalarMatrix jn = j_matrix(n);
    const ScalarMatrix block = matmul(matmul(jn, transpose(inverse(g))), jn);
    ScalarMatrix out(2 * n, Rational(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            out.at(i, j) = g.at(i, j);
            out.at(n + i, n + j) = block.at(i, j);
        }
    return out;
}

ScalarMatrix check_hat(const ScalarMatrix& g) {
    const ScalarMatrix j = j_matrix(g.dim());
    return matmul(matmul(j, transpose(g)), j);
}

OpMatrix scalar_conj(const ScalarMatrix& g, const OpMatrix& x) {
    if (g.dim() != x.dim()) throw std::invalid_argument("scalar_conj: dimension mismatch");
    const int n = x.at(1, 1).n();
    return op_matmul(op_matmul(op_from_scalar(g, n), x), op_from_scalar(check_hat(g), n));
}

OpMatrix ad_matrix(const ScalarMatrix& g, const OpMatrix& x) {
    const int n = x.at(1, 1).n();
    if (g.dim() != n) throw std::invalid_argument("ad_matrix: group matrix must be n x n");
    OpMatrix out = op_zero(x.dim(), n);
    for (int i = 1; i <= x.dim(); ++i)
        for (int j = 1; j <= x.dim(); ++j) {
            WeylElement e(n);
            for (const auto& [m, c] : x.at(i, j).terms()) {
                if (m.is_one()) {
                    e += WeylElement::scalar(n, c);
                } else if (m.degree() == 1 && m.xexp.size() == 1) {
                    const VarIndex v = m.xexp.begin()->first;
                    e += conjugate_multiplication(g, v.i, v.j).scale(c);
                } else if (m.degree() == 1 && m.dexp.size() == 1) {
                    const VarIndex v = m.dexp.begin()->first;
                    e += conjugate_derivation(g, v.i, v.j).scale(c);
                } else {
                    throw std::invalid_argument("ad_matrix: entry is not affine in the generators");
                }
            }
            out.at(i, j) = e;
        }
    return out;
}

std::string to_grid_string(const OpMatrix& x) {
    const int d = x.dim();
    std::vector<std::string> cells(static_cast<std::size_t>(d) * d);
    std::vector<std::size_t> width(d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::string& c = cells[static_cast<std::size_t>(i) * d + j];
            c = x.at(i + 1, j + 1).to_string();
            width[j] = std::max(width[j], c.size());
        }
    std::ostringstream os;
    for (int i = 0; i < d; ++i) {
        os << "[ ";
        for (int j = 0; j < d; ++j) {
            const std::string& c = cells[static_cast<std::size_t>(i) * d + j];
            os << c << std::string(width[j] - c.size(), ' ') << (j + 1 < d ? "  " : " ");
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace skewcap
