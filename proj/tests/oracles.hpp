#pragma once

// Brute-force reference implementations used as test oracles. Everything here
// works from the raw definitions (exhaustive scans, cofactor expansion) and is
// deliberately independent of the library's algorithms.

#include <complex>
#include <vector>

#include "gfpr/index_tuples.hpp"

namespace oracle {

using gfpr::IndexTuple;

// literal quantifier scan: for every pair of equal entries there is a
// successor entry strictly between them
inline bool is_sip(const std::vector<int>& e) {
    for (std::size_t s = 0; s < e.size(); ++s)
        for (std::size_t t = s + 1; t < e.size(); ++t) {
            if (e[s] != e[t]) continue;
            bool ok = false;
            for (std::size_t r = s + 1; r < t; ++r)
                if (e[r] == e[s] + 1) ok = true;
            if (!ok) return false;
        }
    return true;
}

// subset enumeration: a embeds into b iff some positions subset of b spells a
inline bool is_subtuple(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty()) return true;
    if (b.size() > 20) throw std::invalid_argument("oracle is_subtuple: tuple too long");
    for (unsigned mask = 0; mask < (1u << b.size()); ++mask) {
        std::vector<int> picked;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (mask & (1u << i)) picked.push_back(b[i]);
        if (picked == a) return true;
    }
    return false;
}

inline int consecutions_at(const std::vector<int>& t, int r) {
    bool present = false;
    for (int e : t) present = present || e == r;
    if (!present) return -1;
    int s = 0;
    for (;; ++s) {
        std::vector<int> run;
        for (int v = r; v <= r + s + 1; ++v) run.push_back(v);
        if (!is_subtuple(run, t)) return s;
    }
}

inline int inversions_at(const std::vector<int>& t, int r) {
    bool present = false;
    for (int e : t) present = present || e == r;
    if (!present) return -1;
    int s = 0;
    for (;; ++s) {
        std::vector<int> run;
        for (int v = r + s + 1; v >= r; --v) run.push_back(v);
        if (!is_subtuple(run, t)) return s;
    }
}

// every contiguous partition is tried; a part must ascend by ones and the
// part ends must strictly increase right to left
inline bool is_csf(const std::vector<int>& e) {
    for (int v : e)
        if (v < 0) return false;
    if (e.empty()) return true;
    if (e.size() > 20) throw std::invalid_argument("oracle is_csf: tuple too long");
    const std::size_t cuts = e.size() - 1;
    for (unsigned mask = 0; mask < (1u << cuts); ++mask) {
        std::vector<std::pair<std::size_t, std::size_t>> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i < cuts; ++i)
            if (mask & (1u << i)) {
                parts.emplace_back(start, i);
                start = i + 1;
            }
        parts.emplace_back(start, e.size() - 1);
        bool ok = true;
        for (auto [lo, hi] : parts)
            for (std::size_t i = lo; i + 1 <= hi && ok; ++i)
                if (e[i + 1] != e[i] + 1) ok = false;
        for (std::size_t p = 0; p + 1 < parts.size() && ok; ++p)
            if (e[parts[p].second] <= e[parts[p + 1].second]) ok = false;
        if (ok) return true;
    }
    return false;
}

// cofactor expansion along the first row
inline std::complex<double> det_cofactor(const std::vector<std::vector<std::complex<double>>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1.0;
    if (n == 1) return m[0][0];
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<std::complex<double>>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<std::complex<double>> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sign * m[0][j] * det_cofactor(minor);
    }
    return acc;
}

// every tuple over {0..top} of the given length, for exhaustive sweeps
inline std::vector<std::vector<int>> all_tuples(int top, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(len), 0);
    for (;;) {
        out.push_back(cur);
        int pos = len - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == top) {
            cur[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return out;
        ++cur[static_cast<std::size_t>(pos)];
    }
}

}  // namespace oracle
