#include <catch2/catch.hpp>

#include "mori/lefschetz.hpp"
#include "mori/zoo.hpp"

#include "support/fixtures.hpp"

using mori::CheckState;
using mori::EquivalenceReport;
using mori::TwinPair;
using mori::Verdict;

TEST_CASE("identity pair is a birational twin of itself") {
    mori::VarietyModel a = mori::blowup_pn_two_points(3);
    mori::VarietyModel b = mori::blowup_pn_two_points(3);
    mori::LatticeMap id(a.divisor_lattice, b.divisor_lattice,
                        mori::RatMatrix::identity(3));
    TwinPair pair(std::move(a), std::move(b), std::move(id));
    EquivalenceReport r = mori::check_birational_twins(pair);
    CHECK(r.verdict == Verdict::birational_twins);
    CHECK(r.map_is_integral);
    CHECK(r.chamber_matches.size() == 5);
}

TEST_CASE("complete collineations and quadrics are birational twins") {
    EquivalenceReport r =
        mori::check_birational_twins(mori::collineations_quadrics_pair());
    CHECK(r.eff_match == CheckState::pass);
    CHECK(r.mov_match == CheckState::pass);
    CHECK(r.nef_match == CheckState::pass);
    CHECK(r.mcd_match == CheckState::pass);
    CHECK(r.verdict == Verdict::birational_twins);
    CHECK(r.chamber_matches.size() == 7);

    EquivalenceReport d =
        mori::check_divisorial_equivalence(mori::collineations_quadrics_pair());
    CHECK(d.verdict == Verdict::divisorially_equivalent);
    CHECK(d.mcd_match == CheckState::skipped);
}

TEST_CASE("linear section twins pass; the surface section is partial") {
    EquivalenceReport r = mori::check_birational_twins(mori::linear_section_twin(4, 3));
    CHECK(r.verdict == Verdict::birational_twins);

    auto t32 = mori::linear_section_twin(3, 2);
    CHECK_THROWS_AS(mori::check_birational_twins(t32), mori::DataError);
    EquivalenceReport d = mori::check_divisorial_equivalence(t32);
    CHECK(d.eff_match == CheckState::pass);
    CHECK(d.nef_match == CheckState::pass);
    CHECK(d.mov_match == CheckState::skipped);
    CHECK(d.verdict == Verdict::partial);
}

TEST_CASE("nef-broken fixture fails exactly at the nef cone") {
    EquivalenceReport r =
        mori::check_divisorial_equivalence(mori_test::nef_broken_pair());
    CHECK(r.eff_match == CheckState::pass);
    CHECK(r.nef_match == CheckState::fail);
    CHECK(r.verdict == Verdict::fail);
}

TEST_CASE("subdividing one chamber breaks twinhood with matching detail") {
    EquivalenceReport r = mori::check_birational_twins(mori_test::subdivided_pair());
    CHECK(r.mcd_match == CheckState::fail);
    CHECK(r.verdict == Verdict::fail);
    REQUIRE(r.unmatched_ambient.size() == 1);
    CHECK(r.unmatched_ambient[0] == "<E_1,D_2,E_2>");
    CHECK(r.unmatched_sub.size() == 2);
    // Divisorial equivalence is untouched by the refinement.
    EquivalenceReport d = mori::check_divisorial_equivalence(mori_test::subdivided_pair());
    CHECK(d.verdict == Verdict::divisorially_equivalent);
}

TEST_CASE("twins imply divisorial equivalence on every fixture") {
    auto check = [](const TwinPair& pair) {
        bool twins = false;
        if (pair.ambient.mcd && pair.sub.mcd)
            twins = mori::check_birational_twins(pair).verdict == Verdict::birational_twins;
        if (twins) {
            auto d = mori::check_divisorial_equivalence(pair).verdict;
            CHECK(d == Verdict::divisorially_equivalent);
        }
    };
    check(mori::collineations_quadrics_pair());
    check(mori::linear_section_twin(4, 3));
    check(mori::linear_section_twin(5, 4));
    check(mori_test::subdivided_pair());
}

TEST_CASE("verdicts are invariant under relabeling") {
    TwinPair pair = mori::collineations_quadrics_pair();
    // Rename every chamber and shuffle the sub's chamber order.
    for (auto& ch : pair.ambient.mcd->chambers)
        ch.label = "renamed " + ch.label;
    std::reverse(pair.sub.mcd->chambers.begin(), pair.sub.mcd->chambers.end());
    EquivalenceReport r = mori::check_birational_twins(pair);
    CHECK(r.verdict == Verdict::birational_twins);
}

TEST_CASE("a passing pair passes in the inverse direction") {
    TwinPair pair = mori::collineations_quadrics_pair();
    auto inv = mori::inverse(pair.pullback.matrix);
    REQUIRE(inv.has_value());
    mori::LatticeMap back(pair.sub.divisor_lattice, pair.ambient.divisor_lattice, *inv);
    TwinPair reversed(pair.sub, pair.ambient, back);
    CHECK(mori::check_birational_twins(reversed).verdict == Verdict::birational_twins);
}

TEST_CASE("scaling pullbacks stay isomorphisms but are not integral") {
    mori::VarietyModel a = mori::complete_collineations_3();
    mori::VarietyModel b = mori::complete_quadrics_3();
    mori::RatMatrix two(3, 3);
    for (int i = 0; i < 3; ++i)
        two.at(i, i) = 2;
    mori::LatticeMap f(a.divisor_lattice, b.divisor_lattice, two);
    TwinPair pair(std::move(a), std::move(b), std::move(f));
    EquivalenceReport r = mori::check_birational_twins(pair);
    // Cones are scale-invariant, so the checks still pass.
    CHECK(r.verdict == Verdict::birational_twins);
    CHECK(r.map_is_isomorphism);
    CHECK_FALSE(r.map_is_integral);
}

TEST_CASE("singular pullbacks cannot form a pair") {
    mori::VarietyModel a = mori::complete_collineations_3();
    mori::VarietyModel b = mori::complete_quadrics_3();
    mori::RatMatrix z(3, 3);
    CHECK_THROWS_AS(TwinPair(a, b, mori::LatticeMap(a.divisor_lattice,
                                                    b.divisor_lattice, z)),
                    mori::DataError);
}
