#pragma once

#include <random>
#include <vector>

#include "gfpr/block_matrices.hpp"
#include "gfpr/complex_matrix.hpp"
#include "gfpr/index_tuples.hpp"
#include "gfpr/pencil_builder.hpp"
#include "gfpr/realization.hpp"

namespace gfpr {

/// Deterministic RNG; avoids std distributions so streams are identical
/// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    cplx unit_disk() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

    /// Gaussian-integer entries in [-bound, bound]^2; exact in doubles.
    cplx gaussian_int(int bound) {
        return {double(uniform_int(-bound, bound)), double(uniform_int(-bound, bound))};
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform_int(0, static_cast<int>(v.size()) - 1))];
    }

private:
    std::mt19937_64 eng_;
};

namespace gen {

inline ComplexMatrix random_matrix(Rng& rng, int rows, int cols) {
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.unit_disk();
    return m;
}

inline ComplexMatrix random_int_matrix(Rng& rng, int rows, int cols, int bound = 2) {
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.gaussian_int(bound);
    return m;
}

inline ComplexMatrix random_nonsingular(Rng& rng, int n, double min_det = 1e-2) {
    for (;;) {
        ComplexMatrix m = random_matrix(rng, n, n);
        if (std::abs(determinant(m)) > min_det) return m;
    }
}

/// Integer matrix with the given transpose sign (+1 symmetric, -1 skew),
/// nonsingular when requested and possible (odd-size skew matrices are always
/// singular). Gaussian-integer determinants are either zero or at least 1 in
/// modulus, so the test is exact.
inline ComplexMatrix random_structured_matrix(Rng& rng, int n, double sign,
                                              bool need_nonsingular = false) {
    const bool can_be_nonsingular = !(sign < 0 && n % 2 == 1);
    for (int tries = 0; tries < 2000; ++tries) {
        ComplexMatrix t = random_int_matrix(rng, n, n);
        ComplexMatrix m = t + sign * t.transpose();
        if (sign < 0)
            for (int i = 0; i < n; ++i) m(i, i) = 0.0;
        if (!need_nonsingular || !can_be_nonsingular || std::abs(determinant(m)) > 0.5) return m;
    }
    throw std::runtime_error("random_structured_matrix: could not hit a nonsingular draw");
}

/// Random realization with exactly structured integer coefficients. When the
/// structure forces a skew coefficient at the leading position, the caller
/// must pass an even size for that side.
inline Realization random_structured_realization(Rng& rng, Structure s, int n, int r, int m,
                                                 int k) {
    auto coeff_sign = [&](int j) -> double {
        switch (s) {
            case Structure::symmetric: return 1.0;
            case Structure::t_even: return (j % 2 == 0) ? 1.0 : -1.0;
            case Structure::t_odd: return (j % 2 == 0) ? -1.0 : 1.0;
            case Structure::skew_symmetric: return -1.0;
            default: return 0.0;
        }
    };
    Realization rz;
    rz.declared = s;
    std::vector<ComplexMatrix> a, d;
    for (int j = 0; j <= m; ++j)
        a.push_back(s == Structure::none ? random_int_matrix(rng, n, n)
                                         : random_structured_matrix(rng, n, coeff_sign(j), j == m));
    for (int j = 0; j <= k; ++j)
        d.push_back(s == Structure::none ? random_int_matrix(rng, r, r)
                                         : random_structured_matrix(rng, r, coeff_sign(j), j == k));
    if (s == Structure::none) {
        while (std::abs(determinant(a.back())) < 0.5) a.back() = random_int_matrix(rng, n, n);
        while (std::abs(determinant(d.back())) < 0.5) d.back() = random_int_matrix(rng, r, r);
    }
    rz.A = PolynomialMatrix(std::move(a));
    rz.D = PolynomialMatrix(std::move(d));
    rz.B = random_int_matrix(rng, n, r);
    switch (s) {
        case Structure::t_odd: rz.C = -rz.B.transpose(); break;
        case Structure::none: rz.C = random_int_matrix(rng, r, n); break;
        default: rz.C = rz.B.transpose(); break;
    }
    return rz;
}

inline IndexTuple random_permutation(Rng& rng, int lo, int hi) {
    std::vector<int> e;
    for (int v = lo; v <= hi; ++v) e.push_back(v);
    for (int i = static_cast<int>(e.size()) - 1; i > 0; --i)
        std::swap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(rng.uniform_int(0, i))]);
    return IndexTuple(std::move(e), lo, hi);
}

/// Short side tuple over {lo..hi} such that (before, core, after-candidate)
/// keeps the SIP; empty when the range is empty.
inline IndexTuple random_sip_side(Rng& rng, int lo, int hi, const IndexTuple& before,
                                  const IndexTuple& core, bool side_is_prefix) {
    if (lo > hi) return IndexTuple();
    for (int tries = 0; tries < 50; ++tries) {
        const int len = rng.uniform_int(0, 2);
        std::vector<int> e;
        for (int i = 0; i < len; ++i) e.push_back(rng.uniform_int(lo, hi));
        IndexTuple cand(std::move(e), lo, hi);
        const IndexTuple whole = side_is_prefix ? tuple_concat(cand, tuple_concat(before, core))
                                                : tuple_concat(tuple_concat(before, core), cand);
        if (is_sip(whole)) return cand;
    }
    return IndexTuple();
}

/// Valid random GFPR parameters with nonsingular explicit assignments.
inline GfprParams random_gfpr_params(Rng& rng, const Realization& rz) {
    const int m = rz.m(), k = rz.k();
    GfprParams p;
    p.h = rng.uniform_int(0, m - 1);
    p.l = rng.uniform_int(0, k - 1);
    p.sigma = random_permutation(rng, 0, p.h);
    p.tau = random_permutation(rng, -m, -p.h - 1);
    p.gamma = random_permutation(rng, 0, p.l);
    p.delta = random_permutation(rng, -k, -p.l - 1);
    p.sigma1 = random_sip_side(rng, 0, p.h - 1, IndexTuple(), p.sigma, true);
    p.sigma2 = random_sip_side(rng, 0, p.h - 1, p.sigma1, p.sigma, false);
    p.tau1 = random_sip_side(rng, -m, -p.h - 2, IndexTuple(), p.tau, true);
    p.tau2 = random_sip_side(rng, -m, -p.h - 2, p.tau1, p.tau, false);
    p.gamma1 = random_sip_side(rng, 0, p.l - 1, IndexTuple(), p.gamma, true);
    p.gamma2 = random_sip_side(rng, 0, p.l - 1, p.gamma1, p.gamma, false);
    p.delta1 = random_sip_side(rng, -k, -p.l - 2, IndexTuple(), p.delta, true);
    p.delta2 = random_sip_side(rng, -k, -p.l - 2, p.delta1, p.delta, false);

    auto assign = [&](const IndexTuple& t, int bsize) {
        std::vector<ComplexMatrix> ms;
        for (std::size_t i = 0; i < t.size(); ++i) ms.push_back(random_nonsingular(rng, bsize));
        return MatrixAssignment(t, std::move(ms));
    };
    p.x1a = assign(p.sigma1, rz.n());
    p.x2a = assign(p.sigma2, rz.n());
    p.y1a = assign(p.tau1, rz.n());
    p.y2a = assign(p.tau2, rz.n());
    p.x1d = assign(p.gamma1, rz.r());
    p.x2d = assign(p.gamma2, rz.r());
    p.y1d = assign(p.delta1, rz.r());
    p.y2d = assign(p.delta2, rz.r());
    return p;
}

inline int random_even_in(Rng& rng, int lo, int hi) {  // even value in [lo,hi]
    const int count = (hi - lo) / 2 + 1;
    return lo + 2 * rng.uniform_int(0, count - 1);
}

/// Admissible tuple of {0..top} with random feasible index, shifted by -shift.
inline IndexTuple random_admissible_shifted(Rng& rng, int top, int shift) {
    const int q = top % 2 + 2 * rng.uniform_int(0, (top - top % 2) / 2);
    return tuple_shift(admissible_tuple(top, q).tuple, -shift);
}

/// Random type-1 tuple relative to rev(base): a short walk picking a fresh
/// type-1 right index of the running z_r at each step.
inline IndexTuple random_type1_tuple(Rng& rng, const IndexTuple& base_reversed, int max_len = 2) {
    std::vector<int> picks;
    IndexTuple cur = base_reversed;
    const int len = rng.uniform_int(0, max_len);
    for (int step = 0; step < len; ++step) {
        std::vector<int> options;
        for (int s = 0; s < static_cast<int>(cur.size()); ++s)
            if (is_type1_right_index(cur, s)) options.push_back(s);
        if (options.empty()) break;
        const int s = rng.pick(options);
        picks.push_back(s);
        cur = zr_simple_tuple(cur, s);
    }
    return IndexTuple(std::move(picks));
}

}  // namespace gen
}  // namespace gfpr
