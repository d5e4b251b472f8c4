#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfpr {

/// Ordered integer tuple with a declared inclusive range. The empty tuple is
/// valid for any range. Ranges are metadata: equality compares entries only.
class IndexTuple {
public:
    IndexTuple() = default;

    /// Range inferred from the entries ([min,max]; empty stays rangeless).
    IndexTuple(std::vector<int> entries) : entries_(std::move(entries)) {
        if (!entries_.empty()) {
            auto [lo, hi] = std::minmax_element(entries_.begin(), entries_.end());
            lo_ = *lo;
            hi_ = *hi;
        }
    }

    IndexTuple(std::vector<int> entries, int range_lo, int range_hi)
        : entries_(std::move(entries)), lo_(range_lo), hi_(range_hi) {
        if (range_lo > range_hi && !entries_.empty())
            throw std::invalid_argument("IndexTuple: empty range with nonempty entries");
        for (int e : entries_)
            if (e < range_lo || e > range_hi)
                throw std::invalid_argument("IndexTuple: entry " + std::to_string(e) +
                                            " outside declared range [" + std::to_string(range_lo) +
                                            "," + std::to_string(range_hi) + "]");
    }

    const std::vector<int>& entries() const { return entries_; }
    int range_lo() const { return lo_; }
    int range_hi() const { return hi_; }
    bool has_range() const { return lo_ <= hi_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    bool contains(int v) const {
        return std::find(entries_.begin(), entries_.end(), v) != entries_.end();
    }

    friend bool operator==(const IndexTuple& a, const IndexTuple& b) {
        return a.entries_ == b.entries_;
    }

    std::string to_string() const {
        if (entries_.empty()) return "()";
        std::string s = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> entries_;
    int lo_ = 0;
    int hi_ = -1;  // lo > hi marks "no declared range" (empty tuple)
};

inline IndexTuple tuple_negate(const IndexTuple& t) {
    std::vector<int> e(t.entries());
    for (int& v : e) v = -v;
    if (!t.has_range()) return IndexTuple(std::move(e));
    return IndexTuple(std::move(e), -t.range_hi(), -t.range_lo());
}

inline IndexTuple tuple_reverse(const IndexTuple& t) {
    std::vector<int> e(t.entries().rbegin(), t.entries().rend());
    if (!t.has_range()) return IndexTuple(std::move(e));
    return IndexTuple(std::move(e), t.range_lo(), t.range_hi());
}

inline IndexTuple tuple_shift(const IndexTuple& t, int c) {
    std::vector<int> e(t.entries());
    for (int& v : e) v += c;
    if (!t.has_range()) return IndexTuple(std::move(e));
    return IndexTuple(std::move(e), t.range_lo() + c, t.range_hi() + c);
}

inline IndexTuple tuple_concat(const IndexTuple& a, const IndexTuple& b) {
    std::vector<int> e(a.entries());
    e.insert(e.end(), b.entries().begin(), b.entries().end());
    if (!a.has_range() && !b.has_range()) return IndexTuple(std::move(e));
    if (!a.has_range()) return IndexTuple(std::move(e), b.range_lo(), b.range_hi());
    if (!b.has_range()) return IndexTuple(std::move(e), a.range_lo(), a.range_hi());
    return IndexTuple(std::move(e), std::min(a.range_lo(), b.range_lo()),
                      std::max(a.range_hi(), b.range_hi()));
}

inline IndexTuple tuple_concat(const IndexTuple& a, const IndexTuple& b, const IndexTuple& c) {
    return tuple_concat(tuple_concat(a, b), c);
}

/// True iff the entries are exactly a permutation of {lo,...,hi}.
inline bool is_permutation_of(const IndexTuple& t, int lo, int hi) {
    const int count = hi - lo + 1;
    if (static_cast<int>(t.size()) != count) return false;
    std::vector<bool> seen(static_cast<std::size_t>(count), false);
    for (int e : t.entries()) {
        if (e < lo || e > hi) return false;
        if (seen[static_cast<std::size_t>(e - lo)]) return false;
        seen[static_cast<std::size_t>(e - lo)] = true;
    }
    return true;
}

namespace detail {

// Shifts an all-negative tuple into {0..h} using h = -range_lo; nonnegative
// tuples pass through. Returns false for mixed signs.
inline bool normalize_sign(const IndexTuple& t, std::vector<int>& out) {
    bool has_neg = false, has_nonneg = false;
    for (int e : t.entries()) (e < 0 ? has_neg : has_nonneg) = true;
    if (has_neg && has_nonneg) return false;
    out = t.entries();
    if (has_neg) {
        const int h = -t.range_lo();
        for (int& v : out) v += h;
    }
    return true;
}

// Maximal ascending-by-1 runs, left to right, as [first,last] value pairs.
inline std::vector<std::pair<int, int>> maximal_runs(const std::vector<int>& e) {
    std::vector<std::pair<int, int>> runs;
    std::size_t i = 0;
    while (i < e.size()) {
        std::size_t j = i;
        while (j + 1 < e.size() && e[j + 1] == e[j] + 1) ++j;
        runs.emplace_back(e[i], e[j]);
        i = j + 1;
    }
    return runs;
}

}  // namespace detail

/// Successor infix property: between any two equal entries lies their successor.
/// All-negative tuples are tested after shifting by h = -range_lo.
inline bool is_sip(const IndexTuple& t) {
    std::vector<int> e;
    if (!detail::normalize_sign(t, e))
        throw std::invalid_argument("is_sip: mixed-sign tuple " + t.to_string());
    // Scan consecutive occurrences of each value; equivalent to the all-pairs form.
    for (std::size_t s = 0; s < e.size(); ++s) {
        for (std::size_t u = s + 1; u < e.size(); ++u) {
            if (e[u] != e[s]) continue;
            bool found = false;
            for (std::size_t r = s + 1; r < u && !found; ++r)
                if (e[r] == e[s] + 1) found = true;
            if (!found) return false;
            break;  // later occurrences are covered starting from u
        }
    }
    return true;
}

/// Column standard form: ascending-by-1 strings whose ends strictly decrease
/// left to right. All-negative tuples are tested after shifting by -range_lo.
inline bool is_csf(const IndexTuple& t) {
    std::vector<int> e;
    if (!detail::normalize_sign(t, e)) return false;
    for (int v : e)
        if (v < 0) return false;  // shift did not reach {0..h}
    const auto runs = detail::maximal_runs(e);
    for (std::size_t i = 0; i + 1 < runs.size(); ++i)
        if (runs[i].second <= runs[i + 1].second) return false;
    return true;
}

/// Order-preserving embedding of a into b.
inline bool is_subtuple(const IndexTuple& a, const IndexTuple& b) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < b.size() && i < a.size(); ++j)
        if (b[j] == a[i]) ++i;
    return i == a.size();
}

namespace detail {

inline bool run_is_subtuple(const std::vector<int>& t, int first, int last, int step) {
    // step +1: (first, first+1, ..., last); step -1: (first, first-1, ..., last)
    std::size_t j = 0;
    for (int v = first;; v += step) {
        while (j < t.size() && t[j] != v) ++j;
        if (j == t.size()) return false;
        ++j;
        if (v == last) return true;
    }
}

}  // namespace detail

/// c_r(t): largest s with (r, r+1, ..., r+s) a subtuple of t; -1 if r absent.
inline int consecutions_at(const IndexTuple& t, int r) {
    if (!t.contains(r)) return -1;
    int s = 0;
    while (detail::run_is_subtuple(t.entries(), r, r + s + 1, +1)) ++s;
    return s;
}

/// i_r(t): largest s with (r+s, ..., r+1, r) a subtuple of t; -1 if r absent.
inline int inversions_at(const IndexTuple& t, int r) {
    if (!t.contains(r)) return -1;
    int s = 0;
    while (detail::run_is_subtuple(t.entries(), r + s + 1, r, -1)) ++s;
    return s;
}

/// Permutation of {0..r} in column standard form (r-1:r, r-3:r-2, ..., q+1, 0:q).
struct AdmissibleTuple {
    IndexTuple tuple;
    int top = 0;    // r: the base set is {0..top}
    int index = 0;  // q = Ind
};

inline AdmissibleTuple admissible_tuple(int r, int q) {
    if (r < 0 || q < 0 || q > r || (r - q) % 2 != 0)
        throw std::invalid_argument("admissible_tuple: infeasible (r,q)=(" + std::to_string(r) +
                                    "," + std::to_string(q) + "); need 0<=q<=r with r-q even");
    std::vector<int> e;
    for (int x = r - 1; x >= q + 1; x -= 2) {
        e.push_back(x);
        e.push_back(x + 1);
    }
    for (int v = 0; v <= q; ++v) e.push_back(v);
    return AdmissibleTuple{IndexTuple(std::move(e), 0, r), r, q};
}

/// Index 0 for even r, index 1 for odd r.
inline AdmissibleTuple simple_admissible(int r) { return admissible_tuple(r, r % 2); }

inline IndexTuple symmetric_complement(const AdmissibleTuple& a) {
    const int r = a.top, q = a.index;
    if (r == 0) return IndexTuple();
    std::vector<int> e;
    for (int x = r - 1; x >= q + 1; x -= 2) e.push_back(x);
    if (q >= 1) {
        // (0:q)rev_c = (0:q-1, 0:q-2, ..., 0:1, 0)
        for (int len = q - 1; len >= 0; --len)
            for (int v = 0; v <= len; ++v) e.push_back(v);
    }
    if (e.empty()) return IndexTuple();
    return IndexTuple(std::move(e), 0, r);
}

/// Canonical form for r: exactly floor(r/2) strings, the j-th ending at r-2j.
/// For r in {0,1} only the empty tuple qualifies.
inline bool is_canonical_form(const IndexTuple& t, int r) {
    if (r < 0) throw std::invalid_argument("is_canonical_form: negative r");
    if (r <= 1) return t.empty();
    std::vector<int> e;
    if (!detail::normalize_sign(t, e)) return false;
    for (int v : e)
        if (v < 0) return false;
    const auto runs = detail::maximal_runs(e);
    const int p = r / 2;
    if (static_cast<int>(runs.size()) != p) return false;
    for (int j = 1; j <= p; ++j) {
        const auto [s, end] = runs[static_cast<std::size_t>(j - 1)];
        if (end != r - 2 * j || s < 0) return false;
    }
    return true;
}

namespace detail {

// Interval decomposition of a permutation of {0..r}: the blocks of its csf
// equivalent. v ends a block exactly when v+1 occurs before v (the relative
// order of v and v+1 is invariant under the allowed commutations).
inline std::vector<std::pair<int, int>> csf_blocks(const IndexTuple& t) {
    const int r = static_cast<int>(t.size()) - 1;
    if (!is_permutation_of(t, 0, r))
        throw std::invalid_argument("csf_blocks: not a permutation of {0..r}: " + t.to_string());
    std::vector<int> pos(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) pos[static_cast<std::size_t>(t[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> blocks;  // ascending [start,end]
    int start = 0;
    for (int v = 0; v <= r; ++v) {
        const bool ends = (v == r) || (pos[static_cast<std::size_t>(v + 1)] < pos[static_cast<std::size_t>(v)]);
        if (ends) {
            blocks.emplace_back(start, v);
            start = v + 1;
        }
    }
    return blocks;
}

inline IndexTuple expand_blocks(const std::vector<std::pair<int, int>>& blocks, int r) {
    std::vector<int> e;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        for (int v = it->first; v <= it->second; ++v) e.push_back(v);
    return IndexTuple(std::move(e), 0, r);
}

}  // namespace detail

/// True iff s starts a csf string (s:t) of alpha with s < t.
inline bool is_type1_right_index(const IndexTuple& alpha, int s) {
    for (const auto& [first, last] : detail::csf_blocks(alpha))
        if (first == s) return last > s;
    return false;
}

/// The simple tuple z_r(alpha, s): splits the csf string starting at s.
inline IndexTuple zr_simple_tuple(const IndexTuple& alpha, int s) {
    const int r = static_cast<int>(alpha.size()) - 1;
    auto blocks = detail::csf_blocks(alpha);
    for (std::size_t h = 0; h < blocks.size(); ++h) {
        if (blocks[h].first != s) continue;
        if (blocks[h].second <= s)
            throw std::invalid_argument("zr_simple_tuple: " + std::to_string(s) +
                                        " is not a type-1 right index of " + alpha.to_string());
        if (s == 0) {
            // (0:a1) -> (1:a1), (0)
            blocks[h].first = 1;
            blocks.insert(blocks.begin(), {0, 0});
        } else {
            // move s from block h down to block h-1
            blocks[h].first = s + 1;
            blocks[h - 1].second = s;
        }
        return detail::expand_blocks(blocks, r);
    }
    throw std::invalid_argument("zr_simple_tuple: " + std::to_string(s) +
                                " is not a type-1 right index of " + alpha.to_string());
}

/// Iterated z_r over a tuple of right indices.
inline IndexTuple zr_simple_tuple(const IndexTuple& alpha, const IndexTuple& s_seq) {
    IndexTuple cur = alpha;
    for (int s : s_seq.entries()) cur = zr_simple_tuple(cur, s);
    return cur;
}

/// beta is of type 1 relative to alpha: each s_i is a type-1 right index of
/// the iterated z_r of the preceding ones.
inline bool is_type1_tuple(const IndexTuple& alpha, const IndexTuple& beta) {
    IndexTuple cur = alpha;
    for (int s : beta.entries()) {
        if (!is_type1_right_index(cur, s)) return false;
        cur = zr_simple_tuple(cur, s);
    }
    return true;
}

}  // namespace gfpr
