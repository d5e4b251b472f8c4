#include <catch2/catch_amalgamated.hpp>

#include "gfpr/block_matrices.hpp"
#include "gfpr/generators.hpp"
#include "oracles.hpp"

using namespace gfpr;

namespace {

ComplexMatrix int_matrix(Rng& rng, int n) { return gen::random_int_matrix(rng, n, n, 3); }

}  // namespace

TEST_CASE("elementary block matrix shapes") {
    Rng rng(42);
    const int bsize = 2, deg = 4;
    const ComplexMatrix p = int_matrix(rng, bsize);
    const ComplexMatrix id = ComplexMatrix::identity(bsize);

    SECTION("index 0 is diag(I, P)") {
        const ComplexMatrix m = elementary(0, p, deg, bsize);
        CHECK(m.block(0, 0, (deg - 1) * bsize, (deg - 1) * bsize) ==
              ComplexMatrix::identity((deg - 1) * bsize));
        CHECK(m.block((deg - 1) * bsize, (deg - 1) * bsize, bsize, bsize) == p);
    }

    SECTION("index -deg is diag(P, I)") {
        const ComplexMatrix m = elementary(-deg, p, deg, bsize);
        CHECK(m.block(0, 0, bsize, bsize) == p);
        CHECK(m.block(bsize, bsize, (deg - 1) * bsize, (deg - 1) * bsize) ==
              ComplexMatrix::identity((deg - 1) * bsize));
    }

    SECTION("positive index pivot block") {
        const int i = 2;
        const ComplexMatrix m = elementary(i, p, deg, bsize);
        const int a = (deg - i - 1) * bsize;
        CHECK(m.block(a, a, bsize, bsize) == p);
        CHECK(m.block(a, a + bsize, bsize, bsize) == id);
        CHECK(m.block(a + bsize, a, bsize, bsize) == id);
        CHECK(m.block(a + bsize, a + bsize, bsize, bsize) == ComplexMatrix(bsize, bsize));
    }

    SECTION("negative index pivot block") {
        const int i = -2;
        const ComplexMatrix m = elementary(i, p, deg, bsize);
        const int a = (deg + i - 1) * bsize;
        CHECK(m.block(a, a, bsize, bsize) == ComplexMatrix(bsize, bsize));
        CHECK(m.block(a + bsize, a + bsize, bsize, bsize) == p);
    }

    SECTION("degree 1 collapses index 0 to the payload itself") {
        CHECK(elementary(0, p, 1, bsize) == p);
        CHECK(elementary(-1, p, 1, bsize) == p);
    }

    CHECK_THROWS_AS(elementary(deg, p, deg, bsize), std::invalid_argument);
    CHECK_THROWS_AS(elementary(-deg - 1, p, deg, bsize), std::invalid_argument);
    CHECK_THROWS_AS(elementary(0, p, deg, bsize + 1), std::invalid_argument);
}

TEST_CASE("elementary inverses and commutation") {
    Rng rng(7);
    for (int deg = 2; deg <= 6; ++deg) {
        const int bsize = 2;
        for (int i = 1; i <= deg - 1; ++i) {
            const ComplexMatrix p = int_matrix(rng, bsize);
            CHECK(elementary(i, p, deg, bsize) * elementary(-i, -p, deg, bsize) ==
                  ComplexMatrix::identity(deg * bsize));
        }
        for (int i = -deg; i <= deg - 1; ++i)
            for (int j = -deg; j <= deg - 1; ++j) {
                if (std::abs(std::abs(i) - std::abs(j)) <= 1) continue;
                const ComplexMatrix p = int_matrix(rng, bsize);
                const ComplexMatrix q = int_matrix(rng, bsize);
                CHECK(elementary(i, p, deg, bsize) * elementary(j, q, deg, bsize) ==
                      elementary(j, q, deg, bsize) * elementary(i, p, deg, bsize));
            }
    }
}

TEST_CASE("fiedler matrices") {
    Rng rng(11);
    std::vector<ComplexMatrix> coeffs;
    for (int j = 0; j <= 3; ++j) coeffs.push_back(int_matrix(rng, 2));
    const PolynomialMatrix a(coeffs);

    CHECK(fiedler(0, a) == elementary(0, -a.coeff(0), 3, 2));
    CHECK(fiedler(2, a) == elementary(2, -a.coeff(2), 3, 2));
    CHECK(fiedler(-3, a) == elementary(-3, a.coeff(3), 3, 2));
    CHECK(fiedler(-1, a) == elementary(-1, a.coeff(1), 3, 2));

    SECTION("degree-1 polynomial gives the pencil itself") {
        const PolynomialMatrix lin({coeffs[0], coeffs[1]});
        const cplx l(0.3, -1.2);
        const ComplexMatrix direct = lin.eval(l);
        const ComplexMatrix via = fiedler(-1, lin) * l - fiedler(0, lin);
        CHECK(max_abs_diff(direct, via) == 0.0);
    }
}

TEST_CASE("assignment products") {
    Rng rng(13);
    std::vector<ComplexMatrix> coeffs;
    for (int j = 0; j <= 4; ++j) coeffs.push_back(int_matrix(rng, 2));
    const PolynomialMatrix a(coeffs);

    SECTION("empty tuple gives the identity") {
        CHECK(assignment_product(MatrixAssignment::trivial(IndexTuple()), a) ==
              ComplexMatrix::identity(8));
    }

    SECTION("products over concatenated tuples factor") {
        const IndexTuple t1({1, 0}), t2({-4, 2});
        const ComplexMatrix lhs =
            assignment_product(MatrixAssignment::trivial(tuple_concat(t1, t2)), a);
        const ComplexMatrix rhs = assignment_product(MatrixAssignment::trivial(t1), a) *
                                  assignment_product(MatrixAssignment::trivial(t2), a);
        CHECK(lhs == rhs);
    }

    SECTION("commuting trivial factors") {
        CHECK(fiedler_product(IndexTuple({0, 2}), a) == fiedler_product(IndexTuple({2, 0}), a));
        CHECK(fiedler_product(IndexTuple({-4, 1}), a) == fiedler_product(IndexTuple({1, -4}), a));
    }

    SECTION("explicit matrices multiply in tuple order") {
        const ComplexMatrix y1 = int_matrix(rng, 2), x1 = int_matrix(rng, 2);
        const MatrixAssignment asg(IndexTuple({-4, 0}), {y1, x1});
        CHECK(assignment_product(asg, a) ==
              elementary(-4, y1, 4, 2) * elementary(0, x1, 4, 2));
    }

    SECTION("reversal flips tuple and matrices together") {
        const ComplexMatrix p = int_matrix(rng, 2), q = int_matrix(rng, 2);
        const MatrixAssignment asg(IndexTuple({2, 1}), {p, q});
        const MatrixAssignment rev = asg.reversed();
        CHECK(rev.tuple() == IndexTuple({1, 2}));
        CHECK(rev.matrices()[0] == q);
        CHECK(rev.matrices()[1] == p);
    }
}

TEST_CASE("assignment nonsingularity checks the 0 and -deg positions") {
    Rng rng(17);
    std::vector<ComplexMatrix> coeffs;
    for (int j = 0; j <= 3; ++j) coeffs.push_back(int_matrix(rng, 2));
    const PolynomialMatrix a(coeffs);
    const ComplexMatrix sing = ComplexMatrix(2, 2);  // zero matrix
    const ComplexMatrix inv = ComplexMatrix::identity(2);

    CHECK(assignment_nonsingular(MatrixAssignment(IndexTuple({1}), {sing}), a));
    CHECK_FALSE(assignment_nonsingular(MatrixAssignment(IndexTuple({0}), {sing}), a));
    CHECK_FALSE(assignment_nonsingular(MatrixAssignment(IndexTuple({-3}), {sing}), a));
    CHECK(assignment_nonsingular(MatrixAssignment(IndexTuple({0, -3}), {inv, inv}), a));
}

TEST_CASE("corner blocks") {
    ComplexMatrix payload(2, 3);
    payload(0, 0) = 1.0;
    payload(1, 2) = cplx(0.0, -2.0);

    SECTION("1x1 grid returns the payload") {
        CHECK(corner_block(1, 1, payload, {1, 2}, {1, 3}) == payload);
    }

    SECTION("payload lands at its block and nowhere else") {
        const ComplexMatrix m = corner_block(3, 2, payload, {4, 2}, {3, 3});
        REQUIRE(m.rows() == 8);
        REQUIRE(m.cols() == 9);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                const bool inside = i >= 4 && i < 6 && j >= 3 && j < 6;
                CHECK(m(i, j) == (inside ? payload(i - 4, j - 3) : cplx{}));
            }
    }

    CHECK_THROWS_AS(corner_block(5, 1, payload, {4, 2}, {3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(corner_block(0, 1, payload, {4, 2}, {3, 3}), std::invalid_argument);
}

TEST_CASE("elementary determinants") {
    Rng rng(29);
    const int deg = 4, bsize = 2;
    const ComplexMatrix p = int_matrix(rng, bsize);
    // middle indices are unimodular for any payload
    for (int i = 1; i <= deg - 1; ++i) {
        CHECK(std::abs(std::abs(determinant(elementary(i, p, deg, bsize))) - 1.0) < 1e-12);
        CHECK(std::abs(std::abs(determinant(elementary(-i, p, deg, bsize))) - 1.0) < 1e-12);
    }
    // the end indices inherit the payload determinant
    CHECK(std::abs(determinant(elementary(0, p, deg, bsize)) - determinant(p)) < 1e-12);
    CHECK(std::abs(determinant(elementary(-deg, p, deg, bsize)) - determinant(p)) < 1e-12);
}

TEST_CASE("determinant matches cofactor expansion") {
    Rng rng(23);
    for (int n = 1; n <= 5; ++n) {
        ComplexMatrix m(n, n);
        std::vector<std::vector<cplx>> raw(static_cast<std::size_t>(n),
                                           std::vector<cplx>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const cplx v = rng.unit_disk();
                m(i, j) = v;
                raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            }
        const cplx lib = determinant(m);
        const cplx ref = oracle::det_cofactor(raw);
        CHECK(std::abs(lib - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
    CHECK(determinant(ComplexMatrix::identity(4)) == cplx(1.0));
    ComplexMatrix d(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = cplx(0.0, 3.0);
    CHECK(determinant(d) == cplx(0.0, 6.0));
}
