#pragma once

#include <string>
#include <vector>

#include "gfpr/block_matrices.hpp"
#include "gfpr/complex_matrix.hpp"
#include "gfpr/index_tuples.hpp"
#include "gfpr/realization.hpp"

namespace gfpr {

/// Payload sitting at 1-based block (row_blk, col_blk) of an off-diagonal
/// coupling block; corners are constant, so they live in Y.
struct CornerRecord {
    int row_blk = 0;
    int col_blk = 0;
    ComplexMatrix payload;
};

/// L(lambda) = lambda*X + Y over the block partition (m blocks of n) + (k blocks of r).
struct BlockPencil {
    ComplexMatrix X;
    ComplexMatrix Y;
    int m = 0, n = 0, k = 0, r = 0;
    CornerRecord upper;  // lives in rows 1..m, columns 1..k of the coupling grid
    CornerRecord lower;  // rows 1..k, columns 1..m

    int size() const { return m * n + k * r; }
};

inline ComplexMatrix eval_pencil(const BlockPencil& p, cplx lambda) { return p.X * lambda + p.Y; }

/// Q = eps_1 I + ... + eps_p I (direct sum), eps_i in {+1,-1}.
struct QuasiIdentity {
    std::vector<int> signs;
    int block_size = 1;

    int blocks() const { return static_cast<int>(signs.size()); }

    ComplexMatrix matrix() const {
        const int total = blocks() * block_size;
        ComplexMatrix q(total, total);
        for (int b = 0; b < blocks(); ++b)
            for (int i = 0; i < block_size; ++i)
                q(b * block_size + i, b * block_size + i) = static_cast<double>(signs[static_cast<std::size_t>(b)]);
        return q;
    }

    static QuasiIdentity all_plus(int blocks, int block_size) {
        return QuasiIdentity{std::vector<int>(static_cast<std::size_t>(blocks), 1), block_size};
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < signs.size(); ++i) {
            if (i) s += ",";
            s += signs[i] > 0 ? "+" : "-";
        }
        return s + ")";
    }
};

/// Entrywise deviation of L = lambda*X + Y from the coefficient conditions of
/// the structure: symmetric X^T=X, Y^T=Y; T-even X^T=-X, Y^T=Y;
/// T-odd X^T=X, Y^T=-Y; skew X^T=-X, Y^T=-Y.
inline double structure_deviation(const BlockPencil& p, Structure kind) {
    double x_sign, y_sign;
    switch (kind) {
        case Structure::symmetric: x_sign = 1; y_sign = 1; break;
        case Structure::t_even: x_sign = -1; y_sign = 1; break;
        case Structure::t_odd: x_sign = 1; y_sign = -1; break;
        case Structure::skew_symmetric: x_sign = -1; y_sign = -1; break;
        default: return 0.0;
    }
    return std::max(detail::transpose_deviation(p.X, x_sign),
                    detail::transpose_deviation(p.Y, y_sign));
}

inline bool structure_check(const BlockPencil& p, Structure kind, double tol = 1e-12) {
    const double scale = std::max(1.0, std::max(p.X.max_abs(), p.Y.max_abs()));
    return structure_deviation(p, kind) <= tol * scale;
}

/// Parameters actually used by a structured build, kept for inspection.
struct StructuredParams {
    int h = 0, l = 0;
    IndexTuple w, v, z_h, z_l;
    IndexTuple c_w, c_v, c_zh, c_zl;
    IndexTuple t_w, t_v, t_zh, t_zl;
    SignConvention convention = SignConvention::plus_b;  // the one the build pairs with
    int qa_solutions = 0, qd_solutions = 0;              // candidate counts from the sign search
    int applied_sign_d = 1;  // global sign put on Q_D so the pencil matches `convention`
};

struct StructuredPencil {
    BlockPencil pencil;
    QuasiIdentity qa, qd;  // as recovered by the search (leading sign +1)
    Structure kind = Structure::none;
    StructuredParams params;
    std::vector<std::string> warnings;
};

}  // namespace gfpr
