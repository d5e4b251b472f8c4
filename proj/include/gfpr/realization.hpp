#pragma once

#include <stdexcept>
#include <string>

#include "gfpr/block_matrices.hpp"
#include "gfpr/complex_matrix.hpp"

namespace gfpr {

enum class Structure { none, symmetric, t_even, t_odd, skew_symmetric };

inline std::string structure_name(Structure s) {
    switch (s) {
        case Structure::none: return "none";
        case Structure::symmetric: return "symmetric";
        case Structure::t_even: return "t_even";
        case Structure::t_odd: return "t_odd";
        case Structure::skew_symmetric: return "skew";
    }
    return "?";
}

inline Structure structure_from_name(const std::string& s) {
    if (s == "none") return Structure::none;
    if (s == "symmetric") return Structure::symmetric;
    if (s == "t_even") return Structure::t_even;
    if (s == "t_odd") return Structure::t_odd;
    if (s == "skew" || s == "skew_symmetric") return Structure::skew_symmetric;
    throw std::invalid_argument("unknown structure '" + s + "'");
}

/// Sign placed on B inside the system matrix: [[A, -B],[C, D]] or [[A, B],[C, D]].
enum class SignConvention { minus_b, plus_b };

inline std::string convention_name(SignConvention c) {
    return c == SignConvention::minus_b ? "minus_b" : "plus_b";
}

inline SignConvention convention_from_name(const std::string& s) {
    if (s == "minus_b") return SignConvention::minus_b;
    if (s == "plus_b") return SignConvention::plus_b;
    throw std::invalid_argument("unknown convention '" + s + "'");
}

/// Rational matrix G(lambda) = C A(lambda)^{-1} B + D(lambda) in realization form.
struct Realization {
    PolynomialMatrix A;  // n x n, degree m >= 1, regular
    PolynomialMatrix D;  // r x r, degree k >= 1
    ComplexMatrix B;     // n x r
    ComplexMatrix C;     // r x n
    Structure declared = Structure::none;

    int n() const { return A.size(); }
    int m() const { return A.degree(); }
    int r() const { return D.size(); }
    int k() const { return D.degree(); }
};

namespace detail {

// max |M^T - sign*M| over entries
inline double transpose_deviation(const ComplexMatrix& M, double sign) {
    double dev = 0.0;
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) dev = std::max(dev, std::abs(M(j, i) - sign * M(i, j)));
    return dev;
}

}  // namespace detail

/// Checks dimensions and, for a declared structure, the coefficient-level
/// conditions (entrywise, relative tolerance tol * scale). Throws on violation.
inline void validate_realization(const Realization& rz, double tol = 1e-12) {
    if (rz.A.degree() < 1) throw std::invalid_argument("realization: deg A must be >= 1");
    if (rz.D.degree() < 1) throw std::invalid_argument("realization: deg D must be >= 1");
    if (rz.B.rows() != rz.n() || rz.B.cols() != rz.r())
        throw std::invalid_argument("realization: B must be n x r");
    if (rz.C.rows() != rz.r() || rz.C.cols() != rz.n())
        throw std::invalid_argument("realization: C must be r x n");
    if (rz.declared == Structure::none) return;

    const double scale = [&] {
        double s = std::max(rz.B.max_abs(), rz.C.max_abs());
        for (const auto& c : rz.A.coeffs()) s = std::max(s, c.max_abs());
        for (const auto& c : rz.D.coeffs()) s = std::max(s, c.max_abs());
        return std::max(1.0, s);
    }();
    const double atol = tol * scale;

    auto coeff_sign = [&](int j) -> double {
        switch (rz.declared) {
            case Structure::symmetric: return 1.0;
            case Structure::t_even: return (j % 2 == 0) ? 1.0 : -1.0;
            case Structure::t_odd: return (j % 2 == 0) ? -1.0 : 1.0;
            case Structure::skew_symmetric: return -1.0;
            default: return 1.0;
        }
    };
    for (int j = 0; j <= rz.m(); ++j)
        if (detail::transpose_deviation(rz.A.coeff(j), coeff_sign(j)) > atol)
            throw std::invalid_argument("realization: A_" + std::to_string(j) +
                                        " violates the declared " + structure_name(rz.declared) +
                                        " structure");
    for (int j = 0; j <= rz.k(); ++j)
        if (detail::transpose_deviation(rz.D.coeff(j), coeff_sign(j)) > atol)
            throw std::invalid_argument("realization: D_" + std::to_string(j) +
                                        " violates the declared " + structure_name(rz.declared) +
                                        " structure");

    const double c_sign = (rz.declared == Structure::t_odd) ? -1.0 : 1.0;
    const ComplexMatrix want_c = c_sign * rz.B.transpose();
    if (max_abs_diff(rz.C, want_c) > atol)
        throw std::invalid_argument("realization: C must equal " +
                                    std::string(c_sign < 0 ? "-B^T" : "B^T") + " for the declared " +
                                    structure_name(rz.declared) + " structure");
}

/// S(lambda) = [[A(lambda), -B],[C, D(lambda)]] (minus_b) or with +B (plus_b).
inline ComplexMatrix eval_system(const Realization& rz, cplx lambda, SignConvention conv) {
    const int n = rz.n(), r = rz.r();
    ComplexMatrix s(n + r, n + r);
    s.set_block(0, 0, rz.A.eval(lambda));
    s.set_block(0, n, conv == SignConvention::minus_b ? -rz.B : rz.B);
    s.set_block(n, 0, rz.C);
    s.set_block(n, n, rz.D.eval(lambda));
    return s;
}

struct SystemMatrix {
    const Realization* rz;
    SignConvention conv;
    ComplexMatrix eval(cplx lambda) const { return eval_system(*rz, lambda, conv); }
};

}  // namespace gfpr
