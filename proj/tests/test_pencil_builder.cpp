#include <catch2/catch_amalgamated.hpp>

#include "gfpr/demos.hpp"
#include "gfpr/generators.hpp"
#include "gfpr/pencil_builder.hpp"
#include "gfpr/problem_io.hpp"
#include "gfpr/verification.hpp"

using namespace gfpr;

namespace {

// 1-based block of the A-part (i,j <= m), D-part (offset by m*n), or coupling
ComplexMatrix ablock(const ComplexMatrix& m, const BlockPencil& p, int i, int j) {
    return m.block((i - 1) * p.n, (j - 1) * p.n, p.n, p.n);
}
ComplexMatrix dblock(const ComplexMatrix& m, const BlockPencil& p, int i, int j) {
    return m.block(p.m * p.n + (i - 1) * p.r, p.m * p.n + (j - 1) * p.r, p.r, p.r);
}

Realization scalar_fixture() {
    // A = lambda - 2, D = lambda, B = C = 1
    Realization rz;
    ComplexMatrix a0(1, 1), a1(1, 1), d0(1, 1), d1(1, 1), b(1, 1), c(1, 1);
    a0(0, 0) = -2.0; a1(0, 0) = 1.0;
    d0(0, 0) = 0.0;  d1(0, 0) = 1.0;
    b(0, 0) = 1.0;   c(0, 0) = 1.0;
    rz.A = PolynomialMatrix({a0, a1});
    rz.D = PolynomialMatrix({d0, d1});
    rz.B = b;
    rz.C = c;
    return rz;
}

}  // namespace

TEST_CASE("degree-one fiedler pencil is the system matrix") {
    const Realization rz = scalar_fixture();
    const BlockPencil p = build_fiedler_pencil(rz, IndexTuple({0}), IndexTuple({0}));
    for (cplx l : {cplx(0.7, 0.2), cplx(-1.0, 0.0), cplx(0.0, 2.0)})
        CHECK(max_abs_diff(eval_pencil(p, l), eval_system(rz, l, SignConvention::minus_b)) == 0.0);
    CHECK(p.upper.row_blk == 1);
    CHECK(p.upper.col_blk == 1);
}

TEST_CASE("fiedler corner indices come from consecutions and inversions") {
    Rng rng(3);
    const Realization rz = gen::random_structured_realization(rng, Structure::none, 2, 2, 3, 2);
    // alpha = (0,1,2): c0 = 2, i0 = 0 -> corner column m - c0 = 1, row m
    const BlockPencil p = build_fiedler_pencil(rz, IndexTuple({0, 1, 2}), IndexTuple({1, 0}));
    CHECK(p.upper.row_blk == 3);
    CHECK(p.lower.col_blk == 1);
    // beta = (1,0): i0(beta) = 1, c0(beta) = 0
    CHECK(p.upper.col_blk == 2);   // k - c0 = 2
    CHECK(p.lower.row_blk == 1);   // k - i0 = 1
    CHECK_THROWS_AS(build_fiedler_pencil(rz, IndexTuple({0, 1}), IndexTuple({1, 0})),
                    std::invalid_argument);
}

TEST_CASE("gfpr worked example: corner placement and factors") {
    const ProblemSpec s = demo_problem("gfpr_ex");
    const BuildResult br = run_builder(s);
    const BlockPencil& p = br.pencil;
    CHECK(p.upper.row_blk == 4);
    CHECK(p.upper.col_blk == 3);
    CHECK(p.lower.row_blk == 3);
    CHECK(p.lower.col_blk == 4);
    CHECK(max_abs_diff(p.upper.payload, -s.rz.B) == 0.0);
    CHECK(max_abs_diff(p.lower.payload, s.rz.C) == 0.0);

    SECTION("-B and C sit exactly at their blocks in Y") {
        const ComplexMatrix up = p.Y.block(0, p.m * p.n, p.m * p.n, p.k * p.r);
        for (int bi = 1; bi <= p.m; ++bi)
            for (int bj = 1; bj <= p.k; ++bj) {
                const ComplexMatrix blk =
                    up.block((bi - 1) * p.n, (bj - 1) * p.r, p.n, p.r);
                if (bi == 4 && bj == 3)
                    CHECK(max_abs_diff(blk, -s.rz.B) == 0.0);
                else
                    CHECK(blk.max_abs() == 0.0);
            }
    }

    SECTION("X has no coupling entries") {
        CHECK(p.X.block(0, p.m * p.n, p.m * p.n, p.k * p.r).max_abs() == 0.0);
        CHECK(p.X.block(p.m * p.n, 0, p.k * p.r, p.m * p.n).max_abs() == 0.0);
    }

    SECTION("diagonal parts factor through the left and right assignments") {
        // L_A = M_{-5}(Y1) M_0(X1) (lambda M_tau - M_sigma) M_1(X2)
        const ComplexMatrix lf = elementary(-5, s.assignments.at("y1a")[0], 5, 2) *
                                 elementary(0, s.assignments.at("x1a")[0], 5, 2);
        const ComplexMatrix rf = elementary(1, s.assignments.at("x2a")[0], 5, 2);
        const ComplexMatrix xa = p.X.block(0, 0, 10, 10);
        const ComplexMatrix ya = p.Y.block(0, 0, 10, 10);
        CHECK(max_abs_diff(xa, lf * fiedler_product(s.tau, s.rz.A) * rf) == 0.0);
        CHECK(max_abs_diff(ya, -(lf * fiedler_product(s.sigma, s.rz.A) * rf)) == 0.0);
    }
}

TEST_CASE("gfpr with empty side tuples factors through a fiedler pencil") {
    Rng rng(5);
    const Realization rz = gen::random_structured_realization(rng, Structure::none, 2, 2, 4, 3);
    GfprParams gp;
    gp.h = 1;
    gp.sigma = IndexTuple({1, 0});
    gp.tau = IndexTuple({-3, -4, -2});  // phi = (-3), psi = (-2) around -m = -4
    gp.l = 0;
    gp.gamma = IndexTuple({0});
    gp.delta = IndexTuple({-1, -2, -3});
    const BlockPencil gl = build_gfpr(rz, gp);

    // tau = (phi, -m, psi) gives alpha = (-rev(phi), sigma, -rev(psi))
    const IndexTuple alpha({3, 1, 0, 2});
    const IndexTuple beta({2, 1, 0});  // delta = (mu, -k, omega) with mu = (-1,-2)
    const BlockPencil tl = build_fiedler_pencil(rz, alpha, beta);

    const ComplexMatrix phi = fiedler_product(IndexTuple({-3}), rz.A);
    const ComplexMatrix psi = fiedler_product(IndexTuple({-2}), rz.A);
    CHECK(max_abs_diff(gl.X.block(0, 0, 8, 8), phi * tl.X.block(0, 0, 8, 8) * psi) == 0.0);
    CHECK(max_abs_diff(gl.Y.block(0, 0, 8, 8), phi * tl.Y.block(0, 0, 8, 8) * psi) == 0.0);
    const ComplexMatrix mu = fiedler_product(IndexTuple({-1, -2}), rz.D);
    CHECK(max_abs_diff(gl.X.block(8, 8, 6, 6), mu * tl.X.block(8, 8, 6, 6)) == 0.0);

    // both are linearizations of the same system matrix
    CHECK(verify_linearization(gl, rz, SignConvention::minus_b).passed);
    CHECK(verify_linearization(tl, rz, SignConvention::minus_b).passed);
}

TEST_CASE("gfpr rejects invalid parameters") {
    Rng rng(9);
    const Realization rz = gen::random_structured_realization(rng, Structure::none, 2, 2, 3, 2);
    GfprParams gp;
    gp.h = 1;
    gp.sigma = IndexTuple({1, 0});
    gp.tau = IndexTuple({-2, -3});
    gp.gamma = IndexTuple({0});
    gp.delta = IndexTuple({-1, -2});

    SECTION("SIP violations") {
        GfprParams bad = gp;
        bad.sigma = IndexTuple({0, 0});
        CHECK_THROWS_WITH(build_gfpr(rz, bad),
                          Catch::Matchers::ContainsSubstring("(sigma1,sigma,sigma2)"));
        bad = gp;
        bad.sigma2 = IndexTuple({0, 0});
        CHECK_THROWS_WITH(build_gfpr(rz, bad),
                          Catch::Matchers::ContainsSubstring("(sigma1,sigma,sigma2)"));
    }

    SECTION("range violations") {
        GfprParams bad = gp;
        bad.sigma1 = IndexTuple({1});  // must lie in {0..h-1} = {0}
        CHECK_THROWS_AS(build_gfpr(rz, bad), std::invalid_argument);
        bad = gp;
        bad.tau = IndexTuple({-1, -3});  // not a permutation of {-3,-2}
        CHECK_THROWS_AS(build_gfpr(rz, bad), std::invalid_argument);
    }

    SECTION("assignment length mismatch") {
        GfprParams bad = gp;
        bad.sigma1 = IndexTuple({0});
        bad.x1a = MatrixAssignment(IndexTuple({0, 0}), {ComplexMatrix::identity(2),
                                                        ComplexMatrix::identity(2)});
        CHECK_THROWS_AS(build_gfpr(rz, bad), std::invalid_argument);
    }

    SECTION("valid parameters build") {
        CHECK_NOTHROW(build_gfpr(rz, gp));
    }
}

TEST_CASE("block-symmetric worked example") {
    const ProblemSpec s = demo_problem("sym_ex");
    const BuildResult br = run_builder(s);
    REQUIRE(br.structured.has_value());
    const BlockPencil& p = br.pencil;
    const ComplexMatrix xa = s.assignments.at("xa")[0];
    const ComplexMatrix xd = s.assignments.at("xd")[0];
    const ComplexMatrix yd = s.assignments.at("yd")[0];
    const auto& A = s.rz.A;
    const auto& D = s.rz.D;

    SECTION("corners B at (2,4) and B^T at (4,2)") {
        CHECK(p.upper.row_blk == 2);
        CHECK(p.upper.col_blk == 4);
        CHECK(p.lower.row_blk == 4);
        CHECK(p.lower.col_blk == 2);
        CHECK(max_abs_diff(p.upper.payload, s.rz.B) == 0.0);
        CHECK(max_abs_diff(p.lower.payload, s.rz.B.transpose()) == 0.0);
    }

    SECTION("A part matches the derived block pattern") {
        // lambda-part rows: (A3,0,0), (0,-A1,XA), (0,XA,0)
        CHECK(max_abs_diff(ablock(p.X, p, 1, 1), A.coeff(3)) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 2, 2), -A.coeff(1)) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 2, 3), xa) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 3, 2), xa) == 0.0);
        CHECK(ablock(p.X, p, 1, 2).max_abs() == 0.0);
        // constant rows: (A2,A1,-XA), (A1,A0,0), (-XA,0,0)
        CHECK(max_abs_diff(ablock(p.Y, p, 1, 1), A.coeff(2)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 1, 2), A.coeff(1)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 1, 3), -xa) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 2, 2), A.coeff(0)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 3, 1), -xa) == 0.0);
        CHECK(ablock(p.Y, p, 3, 3).max_abs() == 0.0);
    }

    SECTION("D part matches the derived block pattern") {
        CHECK(max_abs_diff(dblock(p.Y, p, 1, 2), -yd) == 0.0);
        CHECK(max_abs_diff(dblock(p.X, p, 1, 3), yd) == 0.0);
        CHECK(max_abs_diff(dblock(p.X, p, 2, 2), D.coeff(5)) == 0.0);
        CHECK(max_abs_diff(dblock(p.Y, p, 2, 2), -D.coeff(4)) == 0.0);
        CHECK(max_abs_diff(dblock(p.X, p, 3, 3), D.coeff(3)) == 0.0);
        CHECK(max_abs_diff(dblock(p.Y, p, 3, 3), D.coeff(2)) == 0.0);
        CHECK(max_abs_diff(dblock(p.Y, p, 4, 3), D.coeff(1)) == 0.0);
        CHECK(max_abs_diff(dblock(p.X, p, 4, 4), -D.coeff(1)) == 0.0);
        CHECK(max_abs_diff(dblock(p.Y, p, 4, 4), D.coeff(0)) == 0.0);
        CHECK(max_abs_diff(dblock(p.Y, p, 5, 3), -xd) == 0.0);
        CHECK(max_abs_diff(dblock(p.X, p, 5, 4), xd) == 0.0);
    }

    SECTION("exactly symmetric") {
        CHECK(structure_deviation(p, Structure::symmetric) == 0.0);
    }
}

TEST_CASE("degree-one gfpr with empty side tuples is the system matrix") {
    Rng rng(19);
    const Realization rz = gen::random_structured_realization(rng, Structure::none, 2, 2, 1, 1);
    GfprParams gp;
    gp.sigma = IndexTuple({0});
    gp.tau = IndexTuple({-1});
    gp.gamma = IndexTuple({0});
    gp.delta = IndexTuple({-1});
    const BlockPencil p = build_gfpr(rz, gp);
    for (cplx l : {cplx(0.4, 0.1), cplx(-2.0, 1.0)})
        CHECK(max_abs_diff(eval_pencil(p, l), eval_system(rz, l, SignConvention::minus_b)) == 0.0);
}

TEST_CASE("block-symmetric output is block symmetric, corners included") {
    const ProblemSpec s = random_problem(271, Structure::symmetric, 2, 2, 5, 3);
    const BuildResult br = run_builder(s);
    const BlockPencil& p = br.pencil;
    // same block at (i,j) and (j,i) within each diagonal part, blocks untransposed
    for (const ComplexMatrix* mat : {&p.X, &p.Y}) {
        for (int i = 1; i <= p.m; ++i)
            for (int j = 1; j <= p.m; ++j)
                CHECK(max_abs_diff(ablock(*mat, p, i, j), ablock(*mat, p, j, i)) == 0.0);
        for (int i = 1; i <= p.k; ++i)
            for (int j = 1; j <= p.k; ++j)
                CHECK(max_abs_diff(dblock(*mat, p, i, j), dblock(*mat, p, j, i)) == 0.0);
    }
    // the corner position vectors coincide after swapping sides
    CHECK(p.upper.row_blk == p.lower.col_blk);
    CHECK(p.upper.col_blk == p.lower.row_blk);
}

TEST_CASE("degree-one block-symmetric pencil is the plus-convention system matrix") {
    Rng rng(53);
    const Realization rz =
        gen::random_structured_realization(rng, Structure::symmetric, 2, 2, 1, 1);
    const MatrixAssignment empty;
    const StructuredPencil sp = build_block_symmetric(rz, 0, 0, empty, empty, empty, empty);
    for (cplx l : {cplx(0.9, -0.3), cplx(1.5, 0.0)})
        CHECK(max_abs_diff(eval_pencil(sp.pencil, l), eval_system(rz, l, SignConvention::plus_b)) ==
              0.0);
    CHECK(structure_deviation(sp.pencil, Structure::symmetric) == 0.0);
}

TEST_CASE("degree-one skew pencil is forced") {
    Rng rng(59);
    const Realization rz =
        gen::random_structured_realization(rng, Structure::skew_symmetric, 2, 2, 1, 1);
    const StructuredPencil sp =
        build_skew_symmetric(rz, 0, 0, IndexTuple({-1}, -1, -1), IndexTuple({-1}, -1, -1),
                             IndexTuple(), IndexTuple(), IndexTuple(), IndexTuple());
    CHECK(structure_deviation(sp.pencil, Structure::skew_symmetric) == 0.0);
    CHECK(verify_linearization(sp.pencil, rz, sp.params.convention).passed);
}

TEST_CASE("block-symmetric rejects bad inputs") {
    Rng rng(21);
    const Realization rz =
        gen::random_structured_realization(rng, Structure::symmetric, 2, 2, 3, 3);
    auto ident = [](const IndexTuple& t) {
        return MatrixAssignment(t, std::vector<ComplexMatrix>(t.size(),
                                                              ComplexMatrix::identity(2)));
    };
    const MatrixAssignment xa = ident(IndexTuple({0}));
    const MatrixAssignment empty = ident(IndexTuple());

    CHECK_THROWS_AS(build_block_symmetric(rz, 1, 0, empty, empty, empty, empty),
                    std::invalid_argument);  // odd h
    CHECK_THROWS_AS(build_block_symmetric(rz, 2, 1, xa, empty, empty, empty),
                    std::invalid_argument);  // odd l
    CHECK_THROWS_AS(build_block_symmetric(rz, 2, 0, empty, empty, empty, empty),
                    std::invalid_argument);  // xa not canonical for h = 2

    ComplexMatrix nonsym = ComplexMatrix::identity(2);
    nonsym(0, 1) = 1.0;
    CHECK_THROWS_AS(build_block_symmetric(rz, 2, 0, MatrixAssignment(IndexTuple({0}), {nonsym}),
                                          empty, empty, empty),
                    std::invalid_argument);

    Realization plain = rz;
    plain.declared = Structure::none;
    CHECK_THROWS_AS(build_block_symmetric(plain, 2, 0, xa, empty, empty, empty),
                    std::invalid_argument);
}

TEST_CASE("t-even worked example") {
    const ProblemSpec s = demo_problem("teven_ex");
    const BuildResult br = run_builder(s);
    REQUIRE(br.structured.has_value());
    const StructuredPencil& sp = *br.structured;
    const BlockPencil& p = sp.pencil;
    const auto& A = s.rz.A;
    const auto& D = s.rz.D;

    CHECK(sp.qa.signs == std::vector<int>{1, 1, -1, 1, -1});
    CHECK(sp.qd.signs == std::vector<int>{1, -1, 1, -1});
    CHECK(sp.params.qa_solutions == 2);
    CHECK(sp.params.qd_solutions == 2);
    CHECK(sp.params.applied_sign_d == 1);
    CHECK(p.upper.row_blk == 4);
    CHECK(p.upper.col_blk == 4);
    CHECK(max_abs_diff(p.upper.payload, s.rz.B) == 0.0);
    CHECK(max_abs_diff(p.lower.payload, s.rz.B.transpose()) == 0.0);
    CHECK(structure_deviation(p, Structure::t_even) == 0.0);
    CHECK(sp.params.convention == SignConvention::minus_b);

    SECTION("A part matches the derived block pattern") {
        const ComplexMatrix id = ComplexMatrix::identity(2);
        CHECK(max_abs_diff(ablock(p.Y, p, 1, 2), -id) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 1, 3), id) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 2, 1), -id) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 2, 2), A.coeff(5)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 2, 2), -A.coeff(4)) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 3, 1), -id) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 3, 3), -A.coeff(3)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 3, 3), -A.coeff(2)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 3, 4), -A.coeff(1)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 3, 5), id) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 4, 4), -A.coeff(1)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 4, 4), A.coeff(0)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 5, 3), id) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 5, 4), -id) == 0.0);
    }

    SECTION("D part matches the derived block pattern") {
        CHECK(max_abs_diff(dblock(p.Y, p, 1, 3), -D.coeff(4)) == 0.0);
        CHECK(max_abs_diff(dblock(p.X, p, 1, 4), D.coeff(4)) == 0.0);
        CHECK(max_abs_diff(dblock(p.Y, p, 2, 2), D.coeff(4)) == 0.0);
        CHECK(max_abs_diff(dblock(p.X, p, 2, 3), -D.coeff(4)) == 0.0);
        CHECK(max_abs_diff(dblock(p.Y, p, 2, 3), D.coeff(3)) == 0.0);
        CHECK(max_abs_diff(dblock(p.Y, p, 3, 1), -D.coeff(4)) == 0.0);
        CHECK(max_abs_diff(dblock(p.X, p, 4, 4), -D.coeff(1)) == 0.0);
        CHECK(max_abs_diff(dblock(p.Y, p, 4, 4), -D.coeff(0)) == 0.0);
    }
}

TEST_CASE("t-odd worked example") {
    const ProblemSpec s = demo_problem("todd_ex");
    const BuildResult br = run_builder(s);
    REQUIRE(br.structured.has_value());
    const StructuredPencil& sp = *br.structured;

    CHECK(sp.qa.signs == std::vector<int>{1, -1, 1, -1, -1});
    CHECK(sp.qd.signs == std::vector<int>{1, -1, 1, -1});
    CHECK(sp.params.applied_sign_d == 1);
    CHECK(structure_deviation(sp.pencil, Structure::t_odd) == 0.0);
    CHECK(max_abs_diff(sp.pencil.upper.payload, s.rz.B) == 0.0);
    CHECK(max_abs_diff(sp.pencil.lower.payload, -s.rz.B.transpose()) == 0.0);
    CHECK(sp.params.convention == SignConvention::plus_b);
}

TEST_CASE("degree-one t-even pencil carries plus-or-minus identity signs") {
    Rng rng(61);
    const Realization rz = gen::random_structured_realization(rng, Structure::t_even, 2, 2, 1, 1);
    const StructuredPencil sp =
        build_t_even(rz, 0, 0, IndexTuple({-1}, -1, -1), IndexTuple({-1}, -1, -1));
    CHECK(sp.qa.signs == std::vector<int>{1});
    CHECK(sp.qd.signs == std::vector<int>{1});
    CHECK(structure_deviation(sp.pencil, Structure::t_even) == 0.0);
    // the A diagonal block is lambda*A1 + A0 itself; the D block may carry -1
    CHECK(max_abs_diff(sp.pencil.X.block(0, 0, 2, 2), rz.A.coeff(1)) == 0.0);
    CHECK(max_abs_diff(sp.pencil.Y.block(0, 0, 2, 2), rz.A.coeff(0)) == 0.0);
    CHECK(verify_linearization(sp.pencil, rz, sp.params.convention).passed);
}

TEST_CASE("violated singularity hypotheses surface as warnings") {
    // T-even with a rank-deficient leading D coefficient and a z_l of nonzero
    // index: the structure still builds, the guarantee is flagged
    Rng rng(67);
    Realization rz = gen::random_structured_realization(rng, Structure::t_even, 2, 2, 2, 2);
    std::vector<ComplexMatrix> d = rz.D.coeffs();
    ComplexMatrix rank1(2, 2);
    rank1(0, 0) = rank1(0, 1) = rank1(1, 0) = rank1(1, 1) = 1.0;
    d.back() = rank1;
    rz.D = PolynomialMatrix(d);
    // k - l - 1 = 1: the only admissible tuple of {0..1} is (0,1) with index 1
    const StructuredPencil sp = build_t_even(rz, 0, 0, tuple_shift(IndexTuple({0, 1}), -2),
                                             tuple_shift(IndexTuple({0, 1}), -2));
    CHECK(structure_deviation(sp.pencil, Structure::t_even) == 0.0);
    REQUIRE_FALSE(sp.warnings.empty());
    CHECK(sp.warnings.front().find("Ind") != std::string::npos);
}

TEST_CASE("degree-one t-odd pencil has symmetric X and skew Y") {
    Rng rng(31);
    const Realization rz = gen::random_structured_realization(rng, Structure::t_odd, 2, 2, 1, 1);
    const StructuredPencil sp =
        build_t_odd(rz, 0, 0, IndexTuple({-1}, -1, -1), IndexTuple({-1}, -1, -1));
    CHECK(structure_deviation(sp.pencil, Structure::t_odd) == 0.0);
    CHECK(detail::transpose_deviation(sp.pencil.X, 1.0) == 0.0);
    CHECK(detail::transpose_deviation(sp.pencil.Y, -1.0) == 0.0);
}

TEST_CASE("skew-symmetric worked example") {
    const ProblemSpec s = demo_problem("skew_ex");
    const BuildResult br = run_builder(s);
    REQUIRE(br.structured.has_value());
    const StructuredPencil& sp = *br.structured;
    const BlockPencil& p = sp.pencil;
    const auto& A = s.rz.A;

    CHECK(sp.qa.signs == std::vector<int>{1, 1, 1, -1});
    CHECK(sp.qd.signs == std::vector<int>{1, -1, -1, -1, 1});
    CHECK(p.upper.row_blk == 3);
    CHECK(p.upper.col_blk == 4);
    CHECK(p.lower.row_blk == 4);
    CHECK(p.lower.col_blk == 3);
    CHECK(structure_deviation(p, Structure::skew_symmetric) == 0.0);
    CHECK(max_abs_diff(p.upper.payload, s.rz.B) == 0.0);
    CHECK(max_abs_diff(p.lower.payload, -s.rz.B.transpose()) == 0.0);

    SECTION("A part matches the derived block pattern") {
        const ComplexMatrix id = ComplexMatrix::identity(2);
        CHECK(max_abs_diff(ablock(p.Y, p, 1, 1), -A.coeff(4)) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 1, 2), A.coeff(4)) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 2, 1), A.coeff(4)) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 2, 2), A.coeff(3)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 2, 2), A.coeff(2)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 2, 3), A.coeff(1)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 2, 4), -id) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 3, 3), -A.coeff(1)) == 0.0);
        CHECK(max_abs_diff(ablock(p.Y, p, 3, 3), A.coeff(0)) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 3, 4), id) == 0.0);   // +lambda*I
        CHECK(max_abs_diff(ablock(p.Y, p, 4, 2), id) == 0.0);
        CHECK(max_abs_diff(ablock(p.X, p, 4, 3), -id) == 0.0);  // -lambda*I
    }
}

TEST_CASE("skew builder validates type-1 tuples") {
    Rng rng(37);
    const Realization rz =
        gen::random_structured_realization(rng, Structure::skew_symmetric, 2, 2, 4, 3);
    const IndexTuple zh({-4, -3}, -4, -3);
    const IndexTuple zl = tuple_shift(simple_admissible(2).tuple, -3);  // k - l - 1 = 2

    // rev(w) = (0,2,1) for h = 2 has csf (2, 0:1): 0 is its only type-1 index
    CHECK_NOTHROW(build_skew_symmetric(rz, 2, 0, zh, zl, IndexTuple({0}), IndexTuple(),
                                       IndexTuple(), IndexTuple()));
    CHECK_THROWS_AS(build_skew_symmetric(rz, 2, 0, zh, zl, IndexTuple({1}), IndexTuple(),
                                         IndexTuple(), IndexTuple()),
                    std::invalid_argument);
    // z_h must be admissible after the shift
    CHECK_THROWS_AS(build_skew_symmetric(rz, 2, 0, IndexTuple({-3, -4}, -4, -3), zl,
                                         IndexTuple(), IndexTuple(), IndexTuple(), IndexTuple()),
                    std::invalid_argument);
}

TEST_CASE("structured builders reject mismatched declarations") {
    Rng rng(41);
    const Realization teven = gen::random_structured_realization(rng, Structure::t_even, 2, 2, 3, 2);
    CHECK_THROWS_AS(build_t_odd(teven, 0, 0, IndexTuple({-2, -1, -3}, -3, -1),
                                IndexTuple({-1, -2}, -2, -1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_t_even(teven, 1, 0, IndexTuple({-2, -3}, -3, -2),
                                 IndexTuple({-1, -2}, -2, -1)),
                    std::invalid_argument);  // odd h
}

TEST_CASE("quasi-identity search") {
    Rng rng(43);

    SECTION("single block: plus whenever the pencil already fits") {
        const ComplexMatrix x = gen::random_structured_matrix(rng, 2, -1.0);
        const ComplexMatrix y = gen::random_structured_matrix(rng, 2, 1.0);
        const QuasiIdentity q = quasi_identity_search(x, y, 1, 2, Structure::t_even);
        CHECK(q.signs == std::vector<int>{1});
    }

    SECTION("failure reports the candidate count") {
        const ComplexMatrix z(4, 4);  // zero pencil satisfies everything
        CHECK_THROWS_WITH(quasi_identity_search(z, z, 2, 2, Structure::t_even),
                          Catch::Matchers::ContainsSubstring("4 sign vectors"));
        // a generic dense pencil satisfies nothing
        const ComplexMatrix g = gen::random_matrix(rng, 4, 4);
        CHECK_THROWS_WITH(quasi_identity_search(g, g, 2, 2, Structure::t_even),
                          Catch::Matchers::ContainsSubstring("0 sign vectors"));
    }

    SECTION("structured builds always find exactly two") {
        const ProblemSpec s = random_problem(99, Structure::t_even, 2, 2, 4, 3);
        const BuildResult br = run_builder(s);
        CHECK(br.structured->params.qa_solutions == 2);
        CHECK(br.structured->params.qd_solutions == 2);
    }
}

TEST_CASE("structured pencils keep coupling blocks out of X") {
    for (auto name : {"sym_ex", "teven_ex", "todd_ex", "skew_ex"}) {
        const BuildResult br = run_builder(demo_problem(name));
        const BlockPencil& p = br.pencil;
        CHECK(p.X.block(0, p.m * p.n, p.m * p.n, p.k * p.r).max_abs() == 0.0);
        CHECK(p.X.block(p.m * p.n, 0, p.k * p.r, p.m * p.n).max_abs() == 0.0);
    }
}
