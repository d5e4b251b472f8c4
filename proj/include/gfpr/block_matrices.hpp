#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfpr/complex_matrix.hpp"
#include "gfpr/index_tuples.hpp"

namespace gfpr {

/// Square matrix polynomial sum_j lambda^j C_j; coeff j holds the lambda^j term.
class PolynomialMatrix {
public:
    PolynomialMatrix() = default;

    explicit PolynomialMatrix(std::vector<ComplexMatrix> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("PolynomialMatrix: no coefficients");
        const int n = coeffs_.front().rows();
        for (const auto& c : coeffs_)
            if (c.rows() != n || c.cols() != n)
                throw std::invalid_argument("PolynomialMatrix: coefficients must be square of equal size");
    }

    int size() const { return coeffs_.front().rows(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const ComplexMatrix& coeff(int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
    const std::vector<ComplexMatrix>& coeffs() const { return coeffs_; }

    ComplexMatrix eval(cplx lambda) const {
        ComplexMatrix v = coeffs_.back();
        for (int j = degree() - 1; j >= 0; --j) v = v * lambda + coeffs_[static_cast<std::size_t>(j)];
        return v;
    }

private:
    std::vector<ComplexMatrix> coeffs_;
};

/// Elementary block matrix M_i(P) on a deg x deg grid of bsize blocks.
/// The same map yields the N_i(P) family with (deg, bsize) = (k, r).
inline ComplexMatrix elementary(int i, const ComplexMatrix& P, int deg, int bsize) {
    if (deg < 1) throw std::invalid_argument("elementary: degree must be >= 1");
    if (P.rows() != bsize || P.cols() != bsize)
        throw std::invalid_argument("elementary: payload must be " + std::to_string(bsize) + "x" +
                                    std::to_string(bsize));
    if (i < -deg || i > deg - 1)
        throw std::invalid_argument("elementary: index " + std::to_string(i) + " outside [-" +
                                    std::to_string(deg) + "," + std::to_string(deg - 1) + "]");
    ComplexMatrix m = ComplexMatrix::identity(deg * bsize);
    const ComplexMatrix id = ComplexMatrix::identity(bsize);
    const ComplexMatrix zero = ComplexMatrix::zero(bsize, bsize);
    auto at = [&](int bi, int bj, const ComplexMatrix& blk) {  // 0-based block indices
        m.set_block(bi * bsize, bj * bsize, blk);
    };
    if (i == 0) {
        at(deg - 1, deg - 1, P);
    } else if (i == -deg) {
        at(0, 0, P);
    } else if (i > 0) {
        const int a = deg - i - 1;  // active pair occupies block rows/cols a, a+1
        at(a, a, P);
        at(a, a + 1, id);
        at(a + 1, a, id);
        at(a + 1, a + 1, zero);
    } else {
        const int a = deg + i - 1;  // i in [-deg+1, -1]
        at(a, a, zero);
        at(a, a + 1, id);
        at(a + 1, a, id);
        at(a + 1, a + 1, P);
    }
    return m;
}

/// Fiedler matrix of a polynomial: M_i(-C_i) for i >= 0, M_i(C_{-i}) for i < 0.
inline ComplexMatrix fiedler(int i, const PolynomialMatrix& A) {
    if (i >= 0) return elementary(i, -A.coeff(i), A.degree(), A.size());
    return elementary(i, A.coeff(-i), A.degree(), A.size());
}

/// Product of Fiedler matrices over an index tuple; empty tuple -> identity.
inline ComplexMatrix fiedler_product(const IndexTuple& t, const PolynomialMatrix& A) {
    ComplexMatrix m = ComplexMatrix::identity(A.degree() * A.size());
    for (int i : t.entries()) m = m * fiedler(i, A);
    return m;
}

/// Matrices substituted into the elementary positions of an index tuple.
/// The trivial assignment uses the Fiedler matrices of the family polynomial.
class MatrixAssignment {
public:
    MatrixAssignment() : trivial_(true) {}

    static MatrixAssignment trivial(IndexTuple t) {
        MatrixAssignment a;
        a.tuple_ = std::move(t);
        a.trivial_ = true;
        return a;
    }

    MatrixAssignment(IndexTuple t, std::vector<ComplexMatrix> ms)
        : tuple_(std::move(t)), matrices_(std::move(ms)), trivial_(false) {
        if (matrices_.size() != tuple_.size())
            throw std::invalid_argument("MatrixAssignment: " + std::to_string(matrices_.size()) +
                                        " matrices for tuple " + tuple_.to_string());
    }

    const IndexTuple& tuple() const { return tuple_; }
    const std::vector<ComplexMatrix>& matrices() const { return matrices_; }
    bool is_trivial() const { return trivial_; }
    bool empty() const { return tuple_.empty(); }

    MatrixAssignment reversed() const {
        if (trivial_) return trivial(tuple_reverse(tuple_));
        std::vector<ComplexMatrix> ms(matrices_.rbegin(), matrices_.rend());
        return MatrixAssignment(tuple_reverse(tuple_), std::move(ms));
    }

private:
    IndexTuple tuple_;
    std::vector<ComplexMatrix> matrices_;
    bool trivial_ = false;
};

/// M_p(P) = M_{p1}(P1) ... M_{pk}(Pk) over the family of the given polynomial.
inline ComplexMatrix assignment_product(const MatrixAssignment& asg, const PolynomialMatrix& family) {
    if (asg.is_trivial()) return fiedler_product(asg.tuple(), family);
    ComplexMatrix m = ComplexMatrix::identity(family.degree() * family.size());
    for (std::size_t j = 0; j < asg.tuple().size(); ++j)
        m = m * elementary(asg.tuple()[j], asg.matrices()[j], family.degree(), family.size());
    return m;
}

/// Nonsingular assignment: every matrix at a position holding 0 or -deg is
/// nonsingular (|det| above tol relative to the matrix scale).
inline bool assignment_nonsingular(const MatrixAssignment& asg, const PolynomialMatrix& family,
                                   double tol = 1e-10) {
    const int deg = family.degree();
    auto singular = [&](const ComplexMatrix& m) {
        const double scale = std::max(1.0, m.max_abs());
        double s = 1.0;
        for (int i = 0; i < m.rows(); ++i) s *= scale;
        return std::abs(determinant(m)) <= tol * s;
    };
    for (std::size_t j = 0; j < asg.tuple().size(); ++j) {
        const int idx = asg.tuple()[j];
        if (idx != 0 && idx != -deg) continue;
        const ComplexMatrix& m = asg.is_trivial()
                                     ? (idx == 0 ? -family.coeff(0) : family.coeff(deg))
                                     : asg.matrices()[j];
        if (singular(m)) return false;
    }
    return true;
}

/// e_row e_col^T (x) payload on a (count x size) block grid; 1-based block indices.
inline ComplexMatrix corner_block(int row_blk, int col_blk, const ComplexMatrix& payload,
                                  std::pair<int, int> row_part, std::pair<int, int> col_part) {
    const auto [row_count, row_size] = row_part;
    const auto [col_count, col_size] = col_part;
    if (row_blk < 1 || row_blk > row_count || col_blk < 1 || col_blk > col_count)
        throw std::invalid_argument("corner_block: block (" + std::to_string(row_blk) + "," +
                                    std::to_string(col_blk) + ") outside " + std::to_string(row_count) +
                                    "x" + std::to_string(col_count) + " grid");
    if (payload.rows() != row_size || payload.cols() != col_size)
        throw std::invalid_argument("corner_block: payload shape mismatch");
    ComplexMatrix m(row_count * row_size, col_count * col_size);
    m.set_block((row_blk - 1) * row_size, (col_blk - 1) * col_size, payload);
    return m;
}

}  // namespace gfpr
