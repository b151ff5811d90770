#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bettipair/matrix.hpp"
#include "bettipair/poly.hpp"
#include "bettipair/rng.hpp"

using namespace bettipair;

namespace {

MatrixFp random_matrix(const PrimeField& F, Rng& rng, int rows, int cols, int zero_bias = 3) {
    MatrixFp m(rows, cols, F);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng.below(zero_bias) == 0)
                m.at(r, c) = static_cast<i64>(rng.below(static_cast<std::uint64_t>(F.p())));
    return m;
}

Polynomial random_poly(const PrimeField& F, Rng& rng, int degree, int terms) {
    Polynomial f;
    f.nvars = 4;
    auto monos = monomials_of_degree(4, degree);
    for (int t = 0; t < terms; ++t) {
        const Monomial& m = monos[rng.below(monos.size())];
        i64 c = 1 + static_cast<i64>(rng.below(static_cast<std::uint64_t>(F.p() - 1)));
        f = poly_add(F, f, poly_from_monomial(m, c));
    }
    return f;
}

} // namespace

TEST_CASE("prime field basics") {
    PrimeField F(32003);
    CHECK(F.mul(F.inv(17), 17) == 1);
    CHECK(F.reduce(-1) == 32002);
    CHECK_THROWS(PrimeField(32001)); // 3 * 10667
}

TEST_CASE("rank fixtures") {
    PrimeField F(32003);
    MatrixFp id(5, 5, F);
    for (int i = 0; i < 5; ++i) id.at(i, i) = 1;
    CHECK(mat_rank(id) == 5);
    CHECK(mat_rank(MatrixFp(4, 7, F)) == 0);

    // Vandermonde on distinct scalars: determinant = prod (x_j - x_i) != 0
    std::vector<i64> xs{2, 5, 11, 19};
    MatrixFp v(4, 4, F);
    i64 det = 1;
    for (int r = 0; r < 4; ++r) {
        i64 p = 1;
        for (int c = 0; c < 4; ++c) {
            v.at(r, c) = p;
            p = F.mul(p, xs[r]);
        }
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) det = F.mul(det, F.sub(xs[j], xs[i]));
    REQUIRE(det != 0);
    CHECK(mat_rank(v) == 4);
}

TEST_CASE("kernel fixtures") {
    PrimeField F(32003);
    MatrixFp id(3, 3, F);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(mat_kernel(id).rows() == 0);

    MatrixFp z(1, 3, F);
    CHECK(mat_kernel(z).rows() == 3);

    PrimeField F7(7);
    MatrixFp row(1, 3, F7);
    for (int c = 0; c < 3; ++c) row.at(0, c) = 1;
    MatrixFp k = mat_kernel(row);
    REQUIRE(k.rows() == 2);
    for (int r = 0; r < 2; ++r) {
        i64 acc = 0;
        for (int c = 0; c < 3; ++c) acc = F7.add(acc, k.at(r, c));
        CHECK(acc == 0);
    }
}

TEST_CASE("rank equals rank of transpose, kernel annihilates") {
    PrimeField F(32003);
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 1 + static_cast<int>(rng.below(20));
        int cols = 1 + static_cast<int>(rng.below(20));
        MatrixFp m = random_matrix(F, rng, rows, cols);
        int rk = mat_rank(m);
        CHECK(rk == mat_rank(m.transposed()));
        MatrixFp k = mat_kernel(m);
        CHECK(k.rows() == cols - rk);
        if (k.rows() > 0) CHECK(m.mul(k.transposed()).is_zero());
        CHECK(mat_rank(k) == k.rows());
    }
}

TEST_CASE("serial and parallel kernels agree") {
    PrimeField F(32003);
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = 40 + static_cast<int>(rng.below(120));
        int cols = 40 + static_cast<int>(rng.below(120));
        MatrixFp m = random_matrix(F, rng, rows, cols);
        CHECK(mat_rank_serial(m) == mat_rank(m));
        MatrixFp a = m, b = m;
        auto pa = rref_serial(a);
        auto pb = rref_parallel(b);
        CHECK(pa == pb);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) CHECK(a.at(r, c) == b.at(r, c));
    }
}

TEST_CASE("polynomial multiplication fixtures") {
    PrimeField F(32003);
    Polynomial one = poly_from_monomial(Monomial::with_vars(4), 1);
    Rng rng(5);
    Polynomial f = random_poly(F, rng, 3, 4);
    CHECK(poly_mul(F, f, one).terms == f.terms);

    // (x3 - x0)(x3 - 2 x0) = x3^2 - 3 x0 x3 + 2 x0^2
    Polynomial a = linear_form(F, {F.neg(1), 0, 0, 1});
    Polynomial b = linear_form(F, {F.neg(2), 0, 0, 1});
    Polynomial p = poly_mul(F, a, b);
    CHECK(p.terms.size() == 3);
    CHECK(p.terms.at(Monomial{0, 0, 0, 2}) == 1);
    CHECK(p.terms.at(Monomial{1, 0, 0, 1}) == F.neg(3));
    CHECK(p.terms.at(Monomial{2, 0, 0, 0}) == 2);

    Polynomial x1 = poly_from_monomial(Monomial{0, 1, 0, 0}, 1);
    Polynomial x2 = poly_from_monomial(Monomial{0, 0, 1, 0}, 1);
    Polynomial x1x2 = poly_mul(F, x1, x2);
    CHECK(x1x2.terms.size() == 1);
    CHECK(x1x2.terms.count(Monomial{0, 1, 1, 0}) == 1);
}

TEST_CASE("polynomial evaluation fixtures") {
    PrimeField F(32003);
    Polynomial l = linear_form(F, {7, 1, 2, 3});
    CHECK(poly_eval(F, l, {1, 0, 0, 0}) == 7);

    Polynomial sum = linear_form(F, {0, 1, 1, 0});
    CHECK(poly_eval(F, sum, {1, 1, 1, 0}) == 2);
}

TEST_CASE("evaluation is multiplicative") {
    PrimeField F(32003);
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial f = random_poly(F, rng, 1 + static_cast<int>(rng.below(3)), 3);
        Polynomial g = random_poly(F, rng, 1 + static_cast<int>(rng.below(3)), 3);
        std::array<i64, 4> P{1, static_cast<i64>(rng.below(100)), static_cast<i64>(rng.below(100)),
                             static_cast<i64>(rng.below(100))};
        CHECK(poly_eval(F, poly_mul(F, f, g), P) ==
              F.mul(poly_eval(F, f, P), poly_eval(F, g, P)));
    }
}

TEST_CASE("homogeneous degree is preserved by multiplication") {
    PrimeField F(32003);
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = random_poly(F, rng, 2, 3);
        Polynomial g = random_poly(F, rng, 3, 3);
        if (f.is_zero() || g.is_zero()) continue;
        Polynomial p = poly_mul(F, f, g);
        for (const auto& [m, c] : p.terms) CHECK(m.degree() == 5);
    }
}
