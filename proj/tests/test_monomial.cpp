#include <catch2/catch.hpp>

#include "mori/monomial.hpp"

#include "support/random_gen.hpp"

using mori::MonomialSystem;
using mori::QVec;
using mori::Rational;
using mori::ZVec;

namespace {

QVec q(std::vector<int> v) {
    QVec out;
    for (int x : v)
        out.emplace_back(x);
    return out;
}

const QVec kP = q({1, 0, 0, 0});
const QVec kQ = q({0, 0, 0, 1});

} // namespace

TEST_CASE("system validation") {
    CHECK_THROWS_AS(MonomialSystem(3, {{1, 1, 0, 0}, {2, 1, 0, 0}}), mori::DataError);
    CHECK_THROWS_AS(MonomialSystem(3, {{1, 1, 0, 0}, {1, 1, 0, 0}}), mori::DataError);
    CHECK_THROWS_AS(MonomialSystem(3, {{1, 1, 0}}), mori::DataError);
    CHECK_THROWS_AS(MonomialSystem(3, {{-1, 3, 0, 0}}), mori::DataError);
    CHECK_THROWS_AS(MonomialSystem(3, {}), mori::DataError);
    CHECK(mori::quadrics_through_two_points().monomials.size() == 8);
    CHECK(mori::cubics_double_at_two_points().monomials.size() == 12);
    CHECK(mori::quadrics_through_two_points().degree() == 2);
    CHECK(mori::cubics_double_at_two_points().degree() == 3);
}

TEST_CASE("evaluate: all-ones point and a generic point") {
    auto alpha = mori::quadrics_through_two_points();
    auto image = mori::evaluate(alpha, q({1, 1, 1, 1}));
    REQUIRE(image.has_value());
    CHECK(*image == ZVec(8, mori::Int(1)));

    image = mori::evaluate(alpha, q({1, 2, 3, 5}));
    REQUIRE(image.has_value());
    CHECK(*image == ZVec{2, 3, 5, 4, 6, 10, 9, 15});

    CHECK_THROWS_AS(mori::evaluate(alpha, q({0, 0, 0, 0})), mori::DataError);
    CHECK_THROWS_AS(mori::evaluate(alpha, q({1, 1})), mori::DataError);
}

TEST_CASE("base points of the two systems sit exactly at the centers") {
    auto alpha = mori::quadrics_through_two_points();
    auto beta = mori::cubics_double_at_two_points();
    const std::vector<QVec> coord_points = {q({1, 0, 0, 0}), q({0, 1, 0, 0}),
                                            q({0, 0, 1, 0}), q({0, 0, 0, 1})};
    for (const auto& sys : {alpha, beta}) {
        for (const QVec& pt : coord_points) {
            bool is_center = pt == kP || pt == kQ;
            CHECK(mori::evaluate(sys, pt).has_value() == !is_center);
        }
    }
}

TEST_CASE("image dimension at generic points") {
    auto alpha = mori::quadrics_through_two_points();
    auto beta = mori::cubics_double_at_two_points();
    CHECK(mori::image_dimension(alpha, q({1, 2, 3, 5})) == 3);
    CHECK(mori::image_dimension(beta, q({1, 2, 3, 5})) == 3);

    MonomialSystem square(1, {{2, 0}});
    CHECK(mori::image_dimension(square, q({1, 1})) == 0);

    CHECK_THROWS_AS(mori::image_dimension(alpha, kP), mori::DataError);
}

TEST_CASE("jacobian of the quadric system at (1,1,1,1) matches the hand matrix") {
    auto alpha = mori::quadrics_through_two_points();
    mori::RatMatrix j = mori::jacobian(alpha, q({1, 1, 1, 1}));
    const int expected[8][4] = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
                                {0, 2, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1},
                                {0, 0, 2, 0}, {0, 0, 1, 1}};
    REQUIRE(j.rows() == 8);
    REQUIRE(j.cols() == 4);
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(j.at(r, c) == Rational(expected[r][c]));
}

TEST_CASE("vanishing order at the centers") {
    auto alpha = mori::quadrics_through_two_points();
    auto beta = mori::cubics_double_at_two_points();
    CHECK(mori::vanishes_to_order(beta, kP, 2));
    CHECK(mori::vanishes_to_order(beta, kQ, 2));
    CHECK_FALSE(mori::vanishes_to_order(alpha, kP, 2)); // d(xy)/dy = x = 1 there
    CHECK(mori::vanishes_to_order(alpha, kP, 1));
    CHECK(mori::vanishes_to_order(alpha, kP, 0));
    CHECK(mori::vanishes_to_order(alpha, q({1, 1, 1, 1}), 0));
    CHECK_FALSE(mori::vanishes_to_order(beta, kP, 3));
}

TEST_CASE("vanishing order is monotone in k") {
    auto beta = mori::cubics_double_at_two_points();
    for (int k = 5; k >= 0; --k)
        if (mori::vanishes_to_order(beta, kP, k))
            for (int j = k; j >= 0; --j)
                CHECK(mori::vanishes_to_order(beta, kP, j));
}

TEST_CASE("evaluation is projectively well-defined") {
    mori_test::Rng rng(mori_test::global_seed + 40);
    auto alpha = mori::quadrics_through_two_points();
    auto beta = mori::cubics_double_at_two_points();
    for (int i = 0; i < 60; ++i) {
        QVec p = rng.rational_vec(4, -9, 9, 4);
        if (mori::is_zero(p))
            continue;
        Rational t = rng.rational(-7, 7, 3);
        if (t.is_zero())
            continue;
        QVec tp(4);
        for (int j = 0; j < 4; ++j)
            tp[j] = t * p[j];
        for (const auto& sys : {alpha, beta}) {
            auto a = mori::evaluate(sys, p);
            auto b = mori::evaluate(sys, tp);
            REQUIRE(a.has_value() == b.has_value());
            if (a)
                CHECK(*a == *b);
        }
    }
}

TEST_CASE("generic rank is stable across sample points") {
    mori_test::Rng rng(mori_test::global_seed + 41);
    auto alpha = mori::quadrics_through_two_points();
    auto beta = mori::cubics_double_at_two_points();
    for (int i = 0; i < 20; ++i) {
        QVec p(4);
        for (int j = 0; j < 4; ++j)
            p[j] = Rational(rng.integer(1, 100));
        CHECK(mori::image_dimension(alpha, p) == 3);
        CHECK(mori::image_dimension(beta, p) == 3);
    }
}
