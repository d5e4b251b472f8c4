#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfpr/complex_matrix.hpp"
#include "gfpr/pencil.hpp"
#include "gfpr/realization.hpp"

namespace gfpr {

struct VerifyOptions {
    int num_samples = 0;      // 0: use mn + rk + 5
    double radius = 1.7;      // sample circle; off 1.0 to dodge symmetric spectra
    double rel_tol = 1e-8;
    double floor = 1e-12;     // samples with |det S| below this are rejected
};

struct VerificationReport {
    bool passed = false;
    bool inconclusive = false;  // every sample rejected: no verdict either way
    cplx ratio_estimate{};
    double max_relative_deviation = 0.0;
    int samples_used = 0;
    int samples_rejected = 0;
    std::string notes;
};

namespace detail {

inline double median_of(std::vector<double> v) {
    const std::size_t n = v.size();
    std::nth_element(v.begin(), v.begin() + n / 2, v.end());
    double hi = v[n / 2];
    if (n % 2 == 1) return hi;
    std::nth_element(v.begin(), v.begin() + n / 2 - 1, v.end());
    return 0.5 * (v[n / 2 - 1] + hi);
}

inline cplx median_ratio(const std::vector<cplx>& ratios) {
    std::vector<double> re, im;
    re.reserve(ratios.size());
    im.reserve(ratios.size());
    for (cplx r : ratios) {
        re.push_back(r.real());
        im.push_back(r.imag());
    }
    return {median_of(std::move(re)), median_of(std::move(im))};
}

}  // namespace detail

/// Determinant-ratio certificate: det L(s) / det S(s) must be one nonzero
/// constant over sample points on a circle. Unimodular equivalence to
/// diag(I, S, I) makes the ratio constant for genuine linearizations.
inline VerificationReport verify_linearization(const BlockPencil& p, const Realization& rz,
                                               SignConvention conv, VerifyOptions opts = {}) {
    if (p.size() != rz.m() * rz.n() + rz.k() * rz.r())
        throw std::invalid_argument("verify_linearization: pencil/realization size mismatch");
    const int count = opts.num_samples > 0 ? opts.num_samples : p.size() + 5;
    VerificationReport rep;
    std::vector<cplx> ratios;
    ratios.reserve(static_cast<std::size_t>(count));
    for (int s = 0; s < count; ++s) {
        const double angle = 2.0 * std::numbers::pi * (s + 0.5) / count;
        const cplx lambda = opts.radius * cplx(std::cos(angle), std::sin(angle));
        const cplx det_s = determinant(eval_system(rz, lambda, conv));
        if (std::abs(det_s) < opts.floor) {
            ++rep.samples_rejected;
            continue;
        }
        ratios.push_back(determinant(eval_pencil(p, lambda)) / det_s);
    }
    rep.samples_used = static_cast<int>(ratios.size());
    if (ratios.empty()) {
        rep.inconclusive = true;
        rep.notes = "all samples rejected (|det S| < floor everywhere on the circle)";
        return rep;
    }
    const cplx c = detail::median_ratio(ratios);
    rep.ratio_estimate = c;
    if (std::abs(c) == 0.0) {
        rep.notes = "ratio estimate is zero (det L vanishes on the sample circle)";
        return rep;
    }
    double dev = 0.0;
    for (cplx r : ratios) dev = std::max(dev, std::abs(r - c));
    rep.max_relative_deviation = dev / std::abs(c);
    rep.passed = rep.max_relative_deviation <= opts.rel_tol;
    if (!rep.passed)
        rep.notes = "ratio deviation " + std::to_string(rep.max_relative_deviation) +
                    " exceeds tolerance";
    return rep;
}

/// Coefficients of det(M(lambda)) recovered from evaluations at scaled roots
/// of unity by an inverse DFT; trailing coefficients below 1e-10 * max are cut.
inline std::vector<cplx> detpoly(const std::function<ComplexMatrix(cplx)>& evaluator,
                                 int degree_bound, double radius = 1.0) {
    if (degree_bound < 0) throw std::invalid_argument("detpoly: negative degree bound");
    const int count = degree_bound + 1;
    std::vector<cplx> values(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / count;
        values[static_cast<std::size_t>(j)] =
            determinant(evaluator(radius * cplx(std::cos(angle), std::sin(angle))));
    }
    std::vector<cplx> coeffs(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        cplx acc = 0.0;
        for (int j = 0; j < count; ++j) {
            const double angle = -2.0 * std::numbers::pi * j * t / count;
            acc += values[static_cast<std::size_t>(j)] * cplx(std::cos(angle), std::sin(angle));
        }
        coeffs[static_cast<std::size_t>(t)] = acc / (double(count) * std::pow(radius, t));
    }
    double maxc = 0.0;
    for (cplx c : coeffs) maxc = std::max(maxc, std::abs(c));
    while (!coeffs.empty() && std::abs(coeffs.back()) < 1e-10 * maxc) coeffs.pop_back();
    return coeffs;
}

/// Durand-Kerner iteration; initial guesses on a perturbed circle.
inline std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
    std::vector<cplx> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.empty()) throw std::invalid_argument("poly_roots: zero polynomial");
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg == 0) return {};
    const cplx lead = c.back();
    for (cplx& v : c) v /= lead;
    auto eval = [&](cplx z) {
        cplx acc = c.back();
        for (int j = deg - 1; j >= 0; --j) acc = acc * z + c[static_cast<std::size_t>(j)];
        return acc;
    };
    std::vector<cplx> z(static_cast<std::size_t>(deg));
    const cplx seed(0.4, 0.9);
    cplx p = 1.0;
    for (int i = 0; i < deg; ++i) {
        p *= seed;
        z[static_cast<std::size_t>(i)] = p;
    }
    const int max_iter = 500;
    for (int it = 0; it < max_iter; ++it) {
        double step = 0.0, scale = 1.0;
        for (int i = 0; i < deg; ++i) {
            cplx denom = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            if (std::abs(denom) == 0.0) {
                denom = 1e-30;  // coincident iterates; nudge apart
                z[static_cast<std::size_t>(i)] += cplx(1e-8, 1e-8);
            }
            const cplx dz = eval(z[static_cast<std::size_t>(i)]) / denom;
            z[static_cast<std::size_t>(i)] -= dz;
            step = std::max(step, std::abs(dz));
            scale = std::max(scale, std::abs(z[static_cast<std::size_t>(i)]));
        }
        if (step < 1e-12 * scale) return z;
    }
    double resid = 0.0;
    for (cplx zi : z) resid = std::max(resid, std::abs(eval(zi)));
    throw std::runtime_error("poly_roots: Durand-Kerner did not converge in " +
                             std::to_string(max_iter) + " iterations (max residual " +
                             std::to_string(resid) + ")");
}

struct SpectraReport {
    bool passed = false;
    std::vector<cplx> pencil_roots;
    std::vector<cplx> system_roots;
    std::vector<std::pair<int, int>> matching;  // (pencil index, system index)
    double max_pair_distance = 0.0;
    bool cardinality_mismatch = false;
    std::string notes;
};

/// Finite spectra of det L and det S, greedily paired by distance.
inline SpectraReport compare_spectra(const BlockPencil& p, const Realization& rz,
                                     SignConvention conv, double tol = 1e-6) {
    const int bound = rz.m() * rz.n() + rz.k() * rz.r();
    const SystemMatrix sys{&rz, conv};
    SpectraReport rep;
    rep.pencil_roots = poly_roots(detpoly([&](cplx l) { return eval_pencil(p, l); }, bound));
    rep.system_roots = poly_roots(detpoly([&](cplx l) { return sys.eval(l); }, bound));
    if (rep.pencil_roots.size() != rep.system_roots.size()) {
        rep.cardinality_mismatch = true;
        rep.notes = "finite root counts differ: " + std::to_string(rep.pencil_roots.size()) +
                    " (pencil) vs " + std::to_string(rep.system_roots.size()) + " (system)";
        return rep;
    }
    std::vector<bool> used_p(rep.pencil_roots.size(), false), used_s(rep.system_roots.size(), false);
    for (std::size_t round = 0; round < rep.pencil_roots.size(); ++round) {
        double best = -1.0;
        int bi = -1, bj = -1;
        for (std::size_t i = 0; i < rep.pencil_roots.size(); ++i) {
            if (used_p[i]) continue;
            for (std::size_t j = 0; j < rep.system_roots.size(); ++j) {
                if (used_s[j]) continue;
                const double d = std::abs(rep.pencil_roots[i] - rep.system_roots[j]);
                if (bi < 0 || d < best) {
                    best = d;
                    bi = static_cast<int>(i);
                    bj = static_cast<int>(j);
                }
            }
        }
        used_p[static_cast<std::size_t>(bi)] = used_s[static_cast<std::size_t>(bj)] = true;
        rep.matching.emplace_back(bi, bj);
        rep.max_pair_distance = std::max(rep.max_pair_distance, best);
    }
    rep.passed = rep.max_pair_distance <= tol;
    return rep;
}

}  // namespace gfpr
