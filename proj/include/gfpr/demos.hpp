#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "gfpr/problem_io.hpp"

namespace gfpr {

namespace demo_detail {

inline ComplexMatrix mat2(std::initializer_list<std::initializer_list<double>> rows) {
    ComplexMatrix m(static_cast<int>(rows.size()),
                    static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline ComplexMatrix skew2(double a) { return mat2({{0, a}, {-a, 0}}); }

}  // namespace demo_detail

inline const std::vector<std::string>& demo_names() {
    static const std::vector<std::string> names = {"gfpr_ex", "sym_ex", "teven_ex", "todd_ex",
                                                   "skew_ex"};
    return names;
}

/// The five worked example pencils, with small integer data so every block is
/// exactly representable.
inline ProblemSpec demo_problem(const std::string& name) {
    using demo_detail::mat2;
    using demo_detail::skew2;
    ProblemSpec s;
    if (name == "gfpr_ex") {
        s.builder = "gfpr";
        s.rz.A = PolynomialMatrix({mat2({{1, 2}, {0, 1}}), mat2({{2, 1}, {1, 0}}),
                                   mat2({{0, 1}, {1, 1}}), mat2({{1, 0}, {2, 1}}),
                                   mat2({{1, 1}, {0, 2}}), mat2({{2, 0}, {1, 1}})});
        s.rz.D = PolynomialMatrix({mat2({{1, 0}, {1, 1}}), mat2({{0, 1}, {2, 0}}),
                                   mat2({{1, 1}, {1, 0}}), mat2({{2, 1}, {0, 1}}),
                                   mat2({{1, 0}, {0, 2}})});
        s.rz.B = mat2({{1, 2}, {3, 4}});
        s.rz.C = mat2({{1, 0}, {2, 1}});
        s.h = 2;
        s.sigma = IndexTuple({1, 0, 2});
        s.tau = IndexTuple({-3, -4, -5});
        s.sigma1 = IndexTuple({0});
        s.sigma2 = IndexTuple({1});
        s.tau1 = IndexTuple({-5});
        s.l = 3;
        s.gamma = IndexTuple({1, 2, 3, 0});
        s.delta = IndexTuple({-4});
        s.gamma2 = IndexTuple({2, 1});
        s.assignments["x1a"] = {mat2({{2, 1}, {1, 1}})};
        s.assignments["x2a"] = {mat2({{1, 1}, {0, 1}})};
        s.assignments["y1a"] = {mat2({{1, 1}, {1, 2}})};
        s.assignments["x2d"] = {mat2({{1, 2}, {0, 1}}), mat2({{1, 0}, {3, 1}})};
        return s;
    }
    if (name == "sym_ex") {
        s.builder = "symmetric";
        s.rz.declared = Structure::symmetric;
        s.rz.A = PolynomialMatrix({mat2({{1, 2}, {2, 1}}), mat2({{0, 1}, {1, 1}}),
                                   mat2({{1, 0}, {0, 3}}), mat2({{2, 1}, {1, 2}})});
        s.rz.D = PolynomialMatrix({mat2({{2, 1}, {1, 1}}), mat2({{1, 1}, {1, 3}}),
                                   mat2({{0, 1}, {1, 2}}), mat2({{2, 0}, {0, 1}}),
                                   mat2({{1, 1}, {1, 0}}), mat2({{3, 1}, {1, 2}})});
        s.rz.B = mat2({{1, 2}, {3, 1}});
        s.rz.C = s.rz.B.transpose();
        s.h = 2;
        s.l = 2;
        s.t_w = IndexTuple({0});
        s.t_wl = IndexTuple({0});
        s.t_vl = IndexTuple({-5});
        s.assignments["xa"] = {mat2({{2, 1}, {1, 1}})};
        s.assignments["ya"] = {};
        s.assignments["xd"] = {mat2({{1, 1}, {1, 2}})};
        s.assignments["yd"] = {mat2({{3, 1}, {1, 1}})};
        return s;
    }
    if (name == "teven_ex") {
        s.builder = "t_even";
        s.rz.declared = Structure::t_even;
        s.rz.A = PolynomialMatrix({mat2({{1, 1}, {1, 2}}), skew2(1), mat2({{2, 0}, {0, 1}}),
                                   skew2(3), mat2({{1, 1}, {1, 3}}), skew2(2)});
        s.rz.D = PolynomialMatrix({mat2({{1, 0}, {0, 2}}), skew2(2), mat2({{1, 1}, {1, 2}}),
                                   skew2(1), mat2({{2, 1}, {1, 2}})});
        s.rz.B = mat2({{1, 2}, {0, 1}});
        s.rz.C = s.rz.B.transpose();
        s.h = 2;
        s.l = 0;
        s.z_h = IndexTuple({-4, -3, -5});
        s.z_l = IndexTuple({-4, -3, -2, -1});
        return s;
    }
    if (name == "todd_ex") {
        s.builder = "t_odd";
        s.rz.declared = Structure::t_odd;
        s.rz.A = PolynomialMatrix({skew2(1), mat2({{1, 1}, {1, 2}}), skew2(2),
                                   mat2({{2, 1}, {1, 1}}), skew2(1), mat2({{1, 0}, {0, 2}})});
        s.rz.D = PolynomialMatrix({skew2(1), mat2({{1, 1}, {1, 3}}), skew2(1),
                                   mat2({{1, 0}, {0, 1}}), skew2(2)});
        s.rz.B = mat2({{1, 1}, {2, 1}});
        s.rz.C = -s.rz.B.transpose();
        s.h = 2;
        s.l = 0;
        s.z_h = IndexTuple({-4, -3, -5});
        s.z_l = IndexTuple({-4, -3, -2, -1});
        return s;
    }
    if (name == "skew_ex") {
        s.builder = "skew";
        s.rz.declared = Structure::skew_symmetric;
        s.rz.A = PolynomialMatrix({skew2(1), skew2(2), skew2(1), skew2(3), skew2(2)});
        s.rz.D = PolynomialMatrix({skew2(2), skew2(1), skew2(3), skew2(1), skew2(1), skew2(2)});
        s.rz.B = mat2({{1, 2}, {3, 1}});
        s.rz.C = s.rz.B.transpose();
        s.h = 2;
        s.l = 2;
        s.z_h = IndexTuple({-4, -3});
        s.z_l = IndexTuple({-4, -3, -5});
        return s;
    }
    throw std::invalid_argument("unknown demo '" + name + "' (try gfpr_ex, sym_ex, teven_ex, "
                                "todd_ex, skew_ex)");
}

/// Known typographical slips in commonly printed renderings of these worked
/// examples; the demos encode the matrices the defining formulas produce.
inline std::vector<std::string> demo_notes(const std::string& name) {
    if (name == "gfpr_ex")
        return {
            "derived from the defining formulas; identity blocks inside the D part are r x r",
            "block (3,3) of the D part is D_0; renderings printing A_0 there are typographical "
            "errors",
            "block (5,4) of the A part is lambda*X_1; renderings printing lambda*I there drop "
            "the left assignment factor",
        };
    if (name == "sym_ex")
        return {
            "block (2,2) of the A part is A_0 - lambda*A_1; renderings printing "
            "lambda*A_1 + A_0 there break the determinant equivalence",
        };
    if (name == "teven_ex")
        return {
            "block (3,3) of the A part is -lambda*A_3 - A_2; renderings printing "
            "-lambda*A_3 - A_3 there are typographical errors",
        };
    if (name == "todd_ex")
        return {
            "the upper coupling payload is B at block (4,4); renderings printing a bare 1 "
            "there are typographical errors",
        };
    if (name == "skew_ex")
        return {
            "block (3,4) of the A part is +lambda*I; the skew structure forces it to be the "
            "negative transpose of block (4,3)",
            "the lower coupling payload is -B^T; a +B^T payload contradicts skew symmetry of "
            "the pencil",
        };
    throw std::invalid_argument("unknown demo '" + name + "'");
}

}  // namespace gfpr
