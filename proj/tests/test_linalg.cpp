#include <catch2/catch.hpp>

#include <algorithm>

#include "mori/linalg.hpp"

#include "support/random_gen.hpp"

using mori::Int;
using mori::QVec;
using mori::RatMatrix;
using mori::Rational;
using mori::ZVec;

namespace {

RatMatrix int_matrix(const std::vector<std::vector<int>>& rows) {
    std::vector<QVec> q;
    for (const auto& r : rows) {
        QVec row;
        for (int x : r)
            row.emplace_back(x);
        q.push_back(std::move(row));
    }
    return RatMatrix::from_rows(q);
}

} // namespace

TEST_CASE("rank: identity and zero matrices") {
    CHECK(mori::rank(RatMatrix::identity(3)) == 3);
    CHECK(mori::rank(RatMatrix(2, 5)) == 0);
}

TEST_CASE("rank of the quadric-system gradient matrix at (1,1,1,1)") {
    // Gradients of xy, xz, xw, y^2, yz, yw, z^2, zw at (1,1,1,1), worked out
    // by hand; the expected rank of the 8x4 matrix is 4.
    RatMatrix jac = int_matrix({
        {1, 1, 0, 0},
        {1, 0, 1, 0},
        {1, 0, 0, 1},
        {0, 2, 0, 0},
        {0, 1, 1, 0},
        {0, 1, 0, 1},
        {0, 0, 2, 0},
        {0, 0, 1, 1},
    });
    CHECK(mori::rank(jac) == 4);
}

TEST_CASE("rank is invariant under permutation and transposition") {
    mori_test::Rng rng(mori_test::global_seed + 1);
    for (int i = 0; i < 50; ++i) {
        int r = rng.uniform(1, 6), c = rng.uniform(1, 6);
        RatMatrix m(r, c);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < c; ++b)
                m.at(a, b) = rng.rational(-5, 5, 3);
        int base = mori::rank(m);
        CHECK(mori::rank(m.transposed()) == base);
        // Random row and column permutation.
        std::vector<int> rp(r), cp(c);
        for (int a = 0; a < r; ++a) rp[a] = a;
        for (int b = 0; b < c; ++b) cp[b] = b;
        std::shuffle(rp.begin(), rp.end(), rng.engine());
        std::shuffle(cp.begin(), cp.end(), rng.engine());
        RatMatrix pm(r, c);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < c; ++b)
                pm.at(a, b) = m.at(rp[a], cp[b]);
        CHECK(mori::rank(pm) == base);
    }
}

TEST_CASE("solve: identity, underdetermined, inconsistent") {
    QVec b{Rational(1), Rational(2), Rational(3)};
    auto x = mori::solve(RatMatrix::identity(3), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto line = mori::solve(int_matrix({{1, 1}}), QVec{Rational(0)});
    REQUIRE(line.has_value());
    CHECK((*line)[0] + (*line)[1] == Rational(0));

    auto none = mori::solve(int_matrix({{1, 0}, {1, 0}}), QVec{Rational(0), Rational(1)});
    CHECK_FALSE(none.has_value());
}

TEST_CASE("solve returns exact solutions whenever it returns") {
    mori_test::Rng rng(mori_test::global_seed + 2);
    int consistent = 0;
    for (int i = 0; i < 80; ++i) {
        int r = rng.uniform(1, 5), c = rng.uniform(1, 5);
        RatMatrix m(r, c);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < c; ++b)
                m.at(a, b) = rng.rational(-4, 4, 3);
        QVec b = rng.rational_vec(r, -6, 6, 3);
        auto x = mori::solve(m, b);
        if (!x)
            continue;
        ++consistent;
        CHECK(m.apply(*x) == b);
    }
    CHECK(consistent > 0);
}

TEST_CASE("determinant and inverse") {
    RatMatrix d = int_matrix({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
    CHECK(mori::det(d) == Rational(1));
    auto inv = mori::inverse(d);
    REQUIRE(inv.has_value());
    CHECK(*inv * d == RatMatrix::identity(3));
    CHECK(mori::det(int_matrix({{1, 2}, {2, 4}})) == Rational(0));
    CHECK_FALSE(mori::inverse(int_matrix({{1, 2}, {2, 4}})).has_value());
    // Swap-heavy pivoting keeps the determinant sign straight.
    CHECK(mori::det(int_matrix({{0, 1}, {1, 0}})) == Rational(-1));
}

TEST_CASE("primitive representative") {
    QVec v{Rational(Int(2), Int(3)), Rational(Int(-4), Int(3)), Rational(0)};
    CHECK(mori::primitive(v) == ZVec{1, -2, 0});
    CHECK(mori::primitive(QVec{Rational(5), Rational(0), Rational(0)}) == ZVec{1, 0, 0});
    CHECK(mori::primitive(ZVec{6, -3, -2}) == ZVec{6, -3, -2});
    CHECK_THROWS_AS(mori::primitive(QVec{Rational(0), Rational(0)}), mori::DataError);
}

TEST_CASE("kernel basis is canonical and exact") {
    auto k = mori::kernel_basis({ZVec{1, 1}}, 2);
    REQUIRE(k.size() == 1);
    CHECK(mori::dot(ZVec{1, 1}, k[0]) == 0);
    // Kernel of the empty system is the standard basis.
    auto full = mori::kernel_basis({}, 3);
    REQUIRE(full.size() == 3);
    CHECK(full[0] == ZVec{1, 0, 0});
    CHECK(full[2] == ZVec{0, 0, 1});

    mori_test::Rng rng(mori_test::global_seed + 3);
    for (int i = 0; i < 40; ++i) {
        int dim = rng.uniform(1, 5);
        std::vector<ZVec> rows;
        for (int n = rng.uniform(0, 3); n > 0; --n)
            rows.push_back(rng.int_vec(dim, -4, 4));
        auto kernel = mori::kernel_basis(rows, dim);
        CHECK(static_cast<int>(kernel.size()) == dim - mori::rank(rows));
        for (const ZVec& v : kernel)
            for (const ZVec& row : rows)
                CHECK(mori::dot(row, v) == 0);
    }
}
