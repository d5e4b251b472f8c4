#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfpr/generators.hpp"
#include "gfpr/pencil_builder.hpp"
#include "gfpr/realization.hpp"
#include "gfpr/verification.hpp"

namespace gfpr {

using json = nlohmann::ordered_json;

/// One self-contained experiment document: realization, builder selection,
/// tuple parameters, optional explicit assignments, verification options.
struct ProblemSpec {
    Realization rz;
    std::string builder = "fiedler";  // fiedler|gfpr|symmetric|t_even|t_odd|skew
    int h = 0, l = 0;
    IndexTuple sigma, tau, sigma1, sigma2, tau1, tau2;
    IndexTuple gamma, delta, gamma1, gamma2, delta1, delta2;
    IndexTuple z_h, z_l, t_w, t_v, t_zh, t_zl, t_wl, t_vl;
    std::map<std::string, std::vector<ComplexMatrix>> assignments;
    VerifyOptions verify;
    std::optional<SignConvention> convention;  // overrides the builder default

    friend bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
        auto key = [](const ProblemSpec& s) {
            return std::tie(s.builder, s.h, s.l, s.sigma, s.tau, s.sigma1, s.sigma2, s.tau1,
                            s.tau2, s.gamma, s.delta, s.gamma1, s.gamma2, s.delta1, s.delta2,
                            s.z_h, s.z_l, s.t_w, s.t_v, s.t_zh, s.t_zl, s.t_wl, s.t_vl);
        };
        return key(a) == key(b) && a.rz.A.coeffs() == b.rz.A.coeffs() &&
               a.rz.D.coeffs() == b.rz.D.coeffs() && a.rz.B == b.rz.B && a.rz.C == b.rz.C &&
               a.rz.declared == b.rz.declared && a.assignments == b.assignments &&
               a.verify.num_samples == b.verify.num_samples && a.verify.radius == b.verify.radius &&
               a.verify.rel_tol == b.verify.rel_tol && a.verify.floor == b.verify.floor &&
               a.convention == b.convention;
    }
};

namespace io_detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument(path + ": " + what);
}

inline const json& member(const json& j, const std::string& path, const std::string& key) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "/" + key, "missing");
    return *it;
}

inline int as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

inline int as_positive_int(const json& j, const std::string& path) {
    const int v = as_int(j, path);
    if (v < 1) fail(path, "expected a positive integer");
    return v;
}

inline double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

inline cplx as_complex(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected a [re, im] pair");
    return {as_number(j[0], path + "/0"), as_number(j[1], path + "/1")};
}

inline ComplexMatrix as_matrix(const json& j, const std::string& path, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        fail(path, "expected " + std::to_string(rows) + " rows");
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        const std::string rpath = path + "/" + std::to_string(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            fail(rpath, "expected " + std::to_string(cols) + " columns");
        for (int c = 0; c < cols; ++c)
            m(i, c) = as_complex(row[static_cast<std::size_t>(c)],
                                 rpath + "/" + std::to_string(c));
    }
    return m;
}

inline IndexTuple as_tuple(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an integer array");
    std::vector<int> e;
    for (std::size_t i = 0; i < j.size(); ++i)
        e.push_back(as_int(j[i], path + "/" + std::to_string(i)));
    return IndexTuple(std::move(e));
}

inline json tuple_to_json(const IndexTuple& t) {
    json a = json::array();
    for (int e : t.entries()) a.push_back(e);
    return a;
}

inline json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline const std::vector<std::string>& builder_names() {
    static const std::vector<std::string> names = {"fiedler", "gfpr",  "symmetric",
                                                   "t_even",  "t_odd", "skew"};
    return names;
}

}  // namespace io_detail

/// Canonical-form tuple for r made of singleton strings (r-2, r-4, ...).
inline IndexTuple default_canonical(int r) {
    std::vector<int> e;
    for (int j = 1; j <= r / 2; ++j) e.push_back(r - 2 * j);
    if (e.empty()) return IndexTuple();
    return IndexTuple(std::move(e), 0, r - 2);
}

inline ProblemSpec parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("problem document is not valid JSON: ") + e.what());
    }
    using namespace io_detail;
    ProblemSpec s;
    const json& dims = member(j, "", "dims");
    const int n = as_positive_int(member(dims, "/dims", "n"), "/dims/n");
    const int r = as_positive_int(member(dims, "/dims", "r"), "/dims/r");
    const int m = as_positive_int(member(dims, "/dims", "m"), "/dims/m");
    const int k = as_positive_int(member(dims, "/dims", "k"), "/dims/k");
    if (m > 16 || k > 16 || n > 32 || r > 32) fail("/dims", "dimension beyond supported range");

    const json& ac = member(j, "", "a_coeffs");
    if (!ac.is_array() || static_cast<int>(ac.size()) != m + 1)
        fail("/a_coeffs", "expected m+1 = " + std::to_string(m + 1) + " coefficient matrices");
    std::vector<ComplexMatrix> a;
    for (int t = 0; t <= m; ++t)
        a.push_back(as_matrix(ac[static_cast<std::size_t>(t)],
                              "/a_coeffs/" + std::to_string(t), n, n));
    const json& dc = member(j, "", "d_coeffs");
    if (!dc.is_array() || static_cast<int>(dc.size()) != k + 1)
        fail("/d_coeffs", "expected k+1 = " + std::to_string(k + 1) + " coefficient matrices");
    std::vector<ComplexMatrix> d;
    for (int t = 0; t <= k; ++t)
        d.push_back(as_matrix(dc[static_cast<std::size_t>(t)],
                              "/d_coeffs/" + std::to_string(t), r, r));
    s.rz.A = PolynomialMatrix(std::move(a));
    s.rz.D = PolynomialMatrix(std::move(d));
    s.rz.B = as_matrix(member(j, "", "b"), "/b", n, r);
    s.rz.C = as_matrix(member(j, "", "c"), "/c", r, n);
    try {
        s.rz.declared = structure_from_name(member(j, "", "structure").get<std::string>());
    } catch (const std::exception& e) {
        fail("/structure", e.what());
    }

    s.builder = member(j, "", "builder").get<std::string>();
    bool known = false;
    for (const auto& name : builder_names()) known = known || name == s.builder;
    if (!known) fail("/builder", "unknown builder '" + s.builder + "'");

    if (j.contains("tuples")) {
        const json& t = j["tuples"];
        if (!t.is_object()) fail("/tuples", "expected an object");
        auto tup = [&](const char* key) {
            return t.contains(key) ? as_tuple(t[key], std::string("/tuples/") + key) : IndexTuple();
        };
        if (t.contains("h")) s.h = as_int(t["h"], "/tuples/h");
        if (t.contains("l")) s.l = as_int(t["l"], "/tuples/l");
        s.sigma = tup("sigma");   s.tau = tup("tau");
        s.sigma1 = tup("sigma1"); s.sigma2 = tup("sigma2");
        s.tau1 = tup("tau1");     s.tau2 = tup("tau2");
        s.gamma = tup("gamma");   s.delta = tup("delta");
        s.gamma1 = tup("gamma1"); s.gamma2 = tup("gamma2");
        s.delta1 = tup("delta1"); s.delta2 = tup("delta2");
        s.z_h = tup("z_h");       s.z_l = tup("z_l");
        s.t_w = tup("t_w");       s.t_v = tup("t_v");
        s.t_zh = tup("t_zh");     s.t_zl = tup("t_zl");
        s.t_wl = tup("t_wl");     s.t_vl = tup("t_vl");
    }

    if (j.contains("assignments")) {
        const json& asg = j["assignments"];
        if (!asg.is_object()) fail("/assignments", "expected an object");
        static const std::vector<std::string> known = {"x1a", "x2a", "y1a", "y2a", "x1d", "x2d",
                                                       "y1d", "y2d", "xa",  "ya",  "xd",  "yd"};
        for (auto it = asg.begin(); it != asg.end(); ++it) {
            const std::string path = "/assignments/" + it.key();
            bool ok = false;
            for (const auto& name : known) ok = ok || name == it.key();
            if (!ok) fail(path, "unknown assignment slot");
            if (!it.value().is_array()) fail(path, "expected an array of matrices");
            const bool a_side = it.key().back() == 'a';
            const int bsize = a_side ? n : r;
            std::vector<ComplexMatrix> ms;
            for (std::size_t i = 0; i < it.value().size(); ++i)
                ms.push_back(as_matrix(it.value()[i], path + "/" + std::to_string(i), bsize, bsize));
            s.assignments[it.key()] = std::move(ms);
        }
    }

    if (j.contains("verify")) {
        const json& v = j["verify"];
        if (!v.is_object()) fail("/verify", "expected an object");
        if (v.contains("samples")) s.verify.num_samples = as_int(v["samples"], "/verify/samples");
        if (v.contains("radius")) s.verify.radius = as_number(v["radius"], "/verify/radius");
        if (v.contains("rel_tol")) s.verify.rel_tol = as_number(v["rel_tol"], "/verify/rel_tol");
        if (v.contains("floor")) s.verify.floor = as_number(v["floor"], "/verify/floor");
    }
    if (j.contains("convention"))
        s.convention = convention_from_name(j["convention"].get<std::string>());

    // invariant checks; SIP comes first so a repeated-entry core is reported
    // against the full concatenation it invalidates
    try {
        validate_realization(s.rz);
        if (s.builder == "gfpr") {
            if (!is_sip(tuple_concat(s.sigma1, s.sigma, s.sigma2)))
                throw std::invalid_argument("(sigma1,sigma,sigma2) violates the SIP");
            if (!is_sip(tuple_concat(s.tau1, s.tau, s.tau2)))
                throw std::invalid_argument("(tau1,tau,tau2) violates the SIP");
            if (!is_sip(tuple_concat(s.gamma1, s.gamma, s.gamma2)))
                throw std::invalid_argument("(gamma1,gamma,gamma2) violates the SIP");
            if (!is_sip(tuple_concat(s.delta1, s.delta, s.delta2)))
                throw std::invalid_argument("(delta1,delta,delta2) violates the SIP");
        }
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("problem document invalid: " + std::string(e.what()));
    }
    return s;
}

inline std::string emit_problem(const ProblemSpec& s) {
    using namespace io_detail;
    json j;
    j["dims"] = {{"n", s.rz.n()}, {"r", s.rz.r()}, {"m", s.rz.m()}, {"k", s.rz.k()}};
    json ac = json::array();
    for (const auto& c : s.rz.A.coeffs()) ac.push_back(matrix_to_json(c));
    j["a_coeffs"] = std::move(ac);
    json dc = json::array();
    for (const auto& c : s.rz.D.coeffs()) dc.push_back(matrix_to_json(c));
    j["d_coeffs"] = std::move(dc);
    j["b"] = matrix_to_json(s.rz.B);
    j["c"] = matrix_to_json(s.rz.C);
    j["structure"] = structure_name(s.rz.declared);
    j["builder"] = s.builder;
    json t;
    t["h"] = s.h;
    t["l"] = s.l;
    t["sigma"] = tuple_to_json(s.sigma);   t["tau"] = tuple_to_json(s.tau);
    t["sigma1"] = tuple_to_json(s.sigma1); t["sigma2"] = tuple_to_json(s.sigma2);
    t["tau1"] = tuple_to_json(s.tau1);     t["tau2"] = tuple_to_json(s.tau2);
    t["gamma"] = tuple_to_json(s.gamma);   t["delta"] = tuple_to_json(s.delta);
    t["gamma1"] = tuple_to_json(s.gamma1); t["gamma2"] = tuple_to_json(s.gamma2);
    t["delta1"] = tuple_to_json(s.delta1); t["delta2"] = tuple_to_json(s.delta2);
    t["z_h"] = tuple_to_json(s.z_h);       t["z_l"] = tuple_to_json(s.z_l);
    t["t_w"] = tuple_to_json(s.t_w);       t["t_v"] = tuple_to_json(s.t_v);
    t["t_zh"] = tuple_to_json(s.t_zh);     t["t_zl"] = tuple_to_json(s.t_zl);
    t["t_wl"] = tuple_to_json(s.t_wl);     t["t_vl"] = tuple_to_json(s.t_vl);
    j["tuples"] = std::move(t);
    if (!s.assignments.empty()) {
        json asg;
        for (const auto& [key, ms] : s.assignments) {
            json arr = json::array();
            for (const auto& mm : ms) arr.push_back(matrix_to_json(mm));
            asg[key] = std::move(arr);
        }
        j["assignments"] = std::move(asg);
    }
    j["verify"] = {{"samples", s.verify.num_samples},
                   {"radius", s.verify.radius},
                   {"rel_tol", s.verify.rel_tol},
                   {"floor", s.verify.floor}};
    if (s.convention) j["convention"] = convention_name(*s.convention);
    return j.dump(2) + "\n";
}

struct BuildResult {
    BlockPencil pencil;
    std::optional<StructuredPencil> structured;
    SignConvention convention = SignConvention::minus_b;
};

/// Dispatches the selected builder. Missing tuples take the natural defaults
/// (simple admissible z tuples, singleton canonical-form tuples, empty type-1
/// tuples); missing assignments default to identity matrices.
inline BuildResult run_builder(const ProblemSpec& s) {
    const int m = s.rz.m(), k = s.rz.k(), n = s.rz.n(), r = s.rz.r();
    BuildResult out;
    auto explicit_assignment = [&](const std::string& key, const IndexTuple& t,
                                   int bsize) -> MatrixAssignment {
        auto it = s.assignments.find(key);
        if (it == s.assignments.end()) {
            std::vector<ComplexMatrix> ms(t.size(), ComplexMatrix::identity(bsize));
            return MatrixAssignment(t, std::move(ms));
        }
        if (it->second.size() != t.size())
            throw std::invalid_argument("assignment '" + key + "' has " +
                                        std::to_string(it->second.size()) + " matrices for tuple " +
                                        t.to_string());
        return MatrixAssignment(t, it->second);
    };

    if (s.builder == "fiedler") {
        // sigma and gamma carry the two permutations here
        out.pencil = build_fiedler_pencil(s.rz, s.sigma, s.gamma);
        out.convention = SignConvention::minus_b;
    } else if (s.builder == "gfpr") {
        GfprParams p;
        p.h = s.h; p.l = s.l;
        p.sigma = s.sigma;   p.tau = s.tau;
        p.sigma1 = s.sigma1; p.sigma2 = s.sigma2;
        p.tau1 = s.tau1;     p.tau2 = s.tau2;
        p.gamma = s.gamma;   p.delta = s.delta;
        p.gamma1 = s.gamma1; p.gamma2 = s.gamma2;
        p.delta1 = s.delta1; p.delta2 = s.delta2;
        auto slot = [&](const std::string& key, const IndexTuple& t, int bsize) {
            if (s.assignments.count(key)) return explicit_assignment(key, t, bsize);
            return MatrixAssignment::trivial(t);  // Fiedler matrices at those positions
        };
        p.x1a = slot("x1a", s.sigma1, n); p.x2a = slot("x2a", s.sigma2, n);
        p.y1a = slot("y1a", s.tau1, n);   p.y2a = slot("y2a", s.tau2, n);
        p.x1d = slot("x1d", s.gamma1, r); p.x2d = slot("x2d", s.gamma2, r);
        p.y1d = slot("y1d", s.delta1, r); p.y2d = slot("y2d", s.delta2, r);
        out.pencil = build_gfpr(s.rz, p);
        out.convention = SignConvention::minus_b;
    } else if (s.builder == "symmetric") {
        const IndexTuple tw = s.t_w.empty() ? default_canonical(s.h) : s.t_w;
        const IndexTuple tv =
            s.t_v.empty() ? tuple_shift(default_canonical(m - s.h - 1), -m) : s.t_v;
        const IndexTuple twl = s.t_wl.empty() ? default_canonical(s.l) : s.t_wl;
        const IndexTuple tvl =
            s.t_vl.empty() ? tuple_shift(default_canonical(k - s.l - 1), -k) : s.t_vl;
        auto sp = build_block_symmetric(s.rz, s.h, s.l, explicit_assignment("xa", tw, n),
                                        explicit_assignment("ya", tv, n),
                                        explicit_assignment("xd", twl, r),
                                        explicit_assignment("yd", tvl, r));
        out.pencil = sp.pencil;
        out.convention = sp.params.convention;
        out.structured = std::move(sp);
    } else {
        const IndexTuple zh =
            s.z_h.empty() ? tuple_shift(simple_admissible(m - s.h - 1).tuple, -m) : s.z_h;
        const IndexTuple zl =
            s.z_l.empty() ? tuple_shift(simple_admissible(k - s.l - 1).tuple, -k) : s.z_l;
        StructuredPencil sp;
        if (s.builder == "t_even") {
            sp = build_t_even(s.rz, s.h, s.l, zh, zl);
        } else if (s.builder == "t_odd") {
            sp = build_t_odd(s.rz, s.h, s.l, zh, zl);
        } else {
            sp = build_skew_symmetric(s.rz, s.h, s.l, zh, zl, s.t_w, s.t_v, s.t_zh, s.t_zl);
        }
        out.pencil = sp.pencil;
        out.convention = sp.params.convention;
        out.structured = std::move(sp);
    }
    if (s.convention) out.convention = *s.convention;
    return out;
}

// ---------------------------------------------------------------------------
// matrix and pencil dumps

/// Header "rows cols", then one line per row of "re im" pairs with 17
/// significant digits; round-trips doubles exactly.
inline std::string write_matrix_dump(const ComplexMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    char buf[64];
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g %.17g", m(i, j).real(), m(i, j).imag());
            if (j) out += " ";
            out += buf;
        }
        out += "\n";
    }
    return out;
}

inline ComplexMatrix read_matrix_dump(std::istream& in) {
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dump: bad header");
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            double re, im;
            if (!(in >> re >> im)) throw std::invalid_argument("matrix dump: truncated data");
            m(i, j) = {re, im};
        }
    return m;
}

inline ComplexMatrix read_matrix_dump(const std::string& text) {
    std::istringstream in(text);
    return read_matrix_dump(in);
}

inline std::string write_pencil_dump(const BlockPencil& p) {
    std::string out = "gfpr pencil\n";
    out += "blocks " + std::to_string(p.m) + " " + std::to_string(p.n) + " " +
           std::to_string(p.k) + " " + std::to_string(p.r) + "\n";
    out += "upper " + std::to_string(p.upper.row_blk) + " " + std::to_string(p.upper.col_blk) + "\n";
    out += write_matrix_dump(p.upper.payload);
    out += "lower " + std::to_string(p.lower.row_blk) + " " + std::to_string(p.lower.col_blk) + "\n";
    out += write_matrix_dump(p.lower.payload);
    out += "X\n" + write_matrix_dump(p.X);
    out += "Y\n" + write_matrix_dump(p.Y);
    return out;
}

/// Block-annotated rendering of lambda*X + Y, one "y + x L" cell per entry.
inline std::string pretty_pencil(const BlockPencil& p) {
    auto fmt_num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v);
        return std::string(buf);
    };
    auto fmt_cplx = [&](cplx v) {
        if (v.imag() == 0.0) return fmt_num(v.real());
        return fmt_num(v.real()) + (v.imag() < 0 ? "-" : "+") + fmt_num(std::abs(v.imag())) + "i";
    };
    auto fmt_cell = [&](cplx x, cplx y) -> std::string {
        if (x == cplx{} && y == cplx{}) return ".";
        std::string s;
        if (y != cplx{}) s += fmt_cplx(y);
        if (x != cplx{}) {
            std::string xs = x == cplx(1.0)    ? "L"
                             : x == cplx(-1.0) ? "-L"
                                               : fmt_cplx(x) + "*L";
            if (!s.empty() && xs.front() != '-') s += "+";
            s += xs;
        }
        return s;
    };
    const int total = p.size();
    std::vector<std::string> cells(static_cast<std::size_t>(total) * total);
    std::size_t width = 1;
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) {
            std::string c = fmt_cell(p.X(i, j), p.Y(i, j));
            width = std::max(width, c.size());
            cells[static_cast<std::size_t>(i) * total + j] = std::move(c);
        }
    std::string out;
    const int split = p.m * p.n;
    auto block_row_edge = [&](int i) { return i < split ? (i % p.n == 0) : ((i - split) % p.r == 0); };
    auto block_col_edge = [&](int j) { return j < split ? (j % p.n == 0) : ((j - split) % p.r == 0); };
    for (int i = 0; i < total; ++i) {
        if (i > 0 && block_row_edge(i)) {
            out += (i == split) ? std::string((width + 3) * static_cast<std::size_t>(total), '=')
                                : std::string((width + 3) * static_cast<std::size_t>(total), '-');
            out += "\n";
        }
        for (int j = 0; j < total; ++j) {
            if (j > 0 && block_col_edge(j)) out += (j == split) ? "|| " : "| ";
            std::string& c = cells[static_cast<std::size_t>(i) * total + j];
            out += c + std::string(width + 1 - c.size(), ' ');
        }
        out += "\n";
    }
    return out;
}

/// Random problem document; deterministic for a fixed seed.
inline ProblemSpec random_problem(std::uint64_t seed, Structure structure, int n, int r, int m,
                                  int k) {
    if (structure == Structure::skew_symmetric && (n % 2 != 0 || r % 2 != 0))
        throw std::invalid_argument("random_problem: skew problems need even n and r");
    if (structure == Structure::t_odd && ((m % 2 == 0 && n % 2 != 0) || (k % 2 == 0 && r % 2 != 0)))
        throw std::invalid_argument(
            "random_problem: a T-odd leading coefficient of even degree is skew; use even size "
            "or odd degree");
    Rng rng(seed);
    ProblemSpec s;
    s.rz = gen::random_structured_realization(rng, structure, n, r, m, k);
    auto matrices_of = [](const MatrixAssignment& a) { return a.matrices(); };
    switch (structure) {
        case Structure::none: {
            s.builder = "gfpr";
            GfprParams p = gen::random_gfpr_params(rng, s.rz);
            s.h = p.h; s.l = p.l;
            s.sigma = p.sigma;   s.tau = p.tau;
            s.sigma1 = p.sigma1; s.sigma2 = p.sigma2;
            s.tau1 = p.tau1;     s.tau2 = p.tau2;
            s.gamma = p.gamma;   s.delta = p.delta;
            s.gamma1 = p.gamma1; s.gamma2 = p.gamma2;
            s.delta1 = p.delta1; s.delta2 = p.delta2;
            s.assignments["x1a"] = matrices_of(p.x1a);
            s.assignments["x2a"] = matrices_of(p.x2a);
            s.assignments["y1a"] = matrices_of(p.y1a);
            s.assignments["y2a"] = matrices_of(p.y2a);
            s.assignments["x1d"] = matrices_of(p.x1d);
            s.assignments["x2d"] = matrices_of(p.x2d);
            s.assignments["y1d"] = matrices_of(p.y1d);
            s.assignments["y2d"] = matrices_of(p.y2d);
            break;
        }
        case Structure::symmetric: {
            s.builder = "symmetric";
            s.h = gen::random_even_in(rng, 0, m - 1);
            s.l = gen::random_even_in(rng, 0, k - 1);
            s.t_w = default_canonical(s.h);
            s.t_v = tuple_shift(default_canonical(m - s.h - 1), -m);
            s.t_wl = default_canonical(s.l);
            s.t_vl = tuple_shift(default_canonical(k - s.l - 1), -k);
            auto sym_matrices = [&](const IndexTuple& t, int bsize) {
                std::vector<ComplexMatrix> ms;
                for (std::size_t i = 0; i < t.size(); ++i)
                    ms.push_back(gen::random_structured_matrix(rng, bsize, 1.0, true));
                return ms;
            };
            s.assignments["xa"] = sym_matrices(s.t_w, n);
            s.assignments["ya"] = sym_matrices(s.t_v, n);
            s.assignments["xd"] = sym_matrices(s.t_wl, r);
            s.assignments["yd"] = sym_matrices(s.t_vl, r);
            break;
        }
        default: {
            s.builder = structure == Structure::t_even  ? "t_even"
                        : structure == Structure::t_odd ? "t_odd"
                                                        : "skew";
            s.h = gen::random_even_in(rng, 0, m - 1);
            s.l = gen::random_even_in(rng, 0, k - 1);
            // a singular leading coefficient demands Ind(z + deg) = 0
            const bool a_lead_singular = std::abs(determinant(s.rz.A.coeff(m))) < 0.5;
            const bool d_lead_singular = std::abs(determinant(s.rz.D.coeff(k))) < 0.5;
            s.z_h = a_lead_singular ? tuple_shift(admissible_tuple(m - s.h - 1, 0).tuple, -m)
                                    : gen::random_admissible_shifted(rng, m - s.h - 1, m);
            s.z_l = d_lead_singular ? tuple_shift(admissible_tuple(k - s.l - 1, 0).tuple, -k)
                                    : gen::random_admissible_shifted(rng, k - s.l - 1, k);
            if (structure == Structure::skew_symmetric) {
                const AdmissibleTuple wa = simple_admissible(s.h);
                const AdmissibleTuple wd = simple_admissible(s.l);
                s.t_w = gen::random_type1_tuple(rng, tuple_reverse(wa.tuple));
                s.t_v = gen::random_type1_tuple(rng, tuple_reverse(wd.tuple));
                s.t_zh = tuple_shift(
                    gen::random_type1_tuple(rng, tuple_reverse(tuple_shift(s.z_h, m))), -m);
                s.t_zl = tuple_shift(
                    gen::random_type1_tuple(rng, tuple_reverse(tuple_shift(s.z_l, k))), -k);
            }
            break;
        }
    }
    return s;
}

}  // namespace gfpr
