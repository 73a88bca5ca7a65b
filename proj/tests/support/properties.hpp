#pragma once

// Property suites shared by the Catch2 tests and the acceptance binary.
// Each suite runs `cases` randomized instances from a named seed and returns
// the first failure description, or success.

#include <algorithm>
#include <string>
#include <vector>

#include "mori/chamber.hpp"
#include "mori/cone.hpp"
#include "mori/zoo.hpp"

#include "support/fm_oracle.hpp"
#include "support/random_gen.hpp"

namespace mori_test {

struct PropResult {
    bool ok = true;
    std::string detail;

    static PropResult failure(std::string d) { return {false, std::move(d)}; }
};

/// dual(dual(c)) == c for arbitrary finitely generated cones.
inline PropResult prop_biduality(std::uint64_t seed, int cases) {
    Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        mori::Cone c = rng.cone();
        if (!mori::cone_equal(c.dual().dual(), c))
            return PropResult::failure("biduality failed on case " + std::to_string(i));
    }
    return {};
}

/// dual(join(a, b)) == intersect(dual(a), dual(b)).
inline PropResult prop_dual_join_intersect(std::uint64_t seed, int cases) {
    Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        int dim = rng.uniform(1, 4);
        mori::Cone a = [&] {
            std::vector<mori::ZVec> g;
            for (int k = rng.uniform(0, 5); k > 0; --k)
                g.push_back(rng.int_vec(dim, -5, 5));
            return mori::Cone::from_int_generators(dim, std::move(g));
        }();
        mori::Cone b = [&] {
            std::vector<mori::ZVec> g;
            for (int k = rng.uniform(0, 5); k > 0; --k)
                g.push_back(rng.int_vec(dim, -5, 5));
            return mori::Cone::from_int_generators(dim, std::move(g));
        }();
        if (!mori::cone_equal(mori::join(a, b).dual(),
                              mori::intersect(a.dual(), b.dual())))
            return PropResult::failure("join/intersect duality failed on case " +
                                       std::to_string(i));
    }
    return {};
}

/// Membership decided through the H-representation agrees with the
/// Fourier-Motzkin oracle on the generator representation.
inline PropResult prop_membership_vs_fm(std::uint64_t seed, int cases) {
    Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        int dim = rng.uniform(1, 4);
        std::vector<mori::ZVec> gens;
        for (int k = rng.uniform(0, 6); k > 0; --k)
            gens.push_back(rng.int_vec(dim, -5, 5));
        mori::Cone c = mori::Cone::from_int_generators(dim, gens);
        for (int q = 0; q < 4; ++q) {
            mori::QVec x;
            if (q == 0 && !gens.empty()) {
                // Nonnegative combination of generators: must be inside.
                x.assign(dim, mori::Rational(0));
                for (const mori::ZVec& g : gens) {
                    mori::Rational w(rng.integer(0, 3));
                    for (int j = 0; j < dim; ++j)
                        x[j] += w * mori::Rational(g[j]);
                }
            } else {
                x = rng.rational_vec(dim, -5, 5, 3);
            }
            bool dd = c.contains(x).inside();
            bool fm = fm_member(gens, x);
            if (dd != fm)
                return PropResult::failure(
                    "membership mismatch on case " + std::to_string(i) + " point " +
                    mori::vec_str(x) + ": dd=" + (dd ? "in" : "out") +
                    " fm=" + (fm ? "in" : "out"));
        }
    }
    return {};
}

/// primitive(t*v) == primitive(v) for positive rational t.
inline PropResult prop_primitive_scale_invariance(std::uint64_t seed, int cases) {
    Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        int dim = rng.uniform(1, 6);
        mori::QVec v = rng.rational_vec(dim, -9, 9, 5);
        if (mori::is_zero(v))
            continue;
        mori::Rational t(rng.integer(1, 40), rng.integer(1, 40));
        mori::QVec tv(dim);
        for (int j = 0; j < dim; ++j)
            tv[j] = t * v[j];
        if (mori::primitive(v) != mori::primitive(tv))
            return PropResult::failure("primitive not scale invariant on case " +
                                       std::to_string(i));
    }
    return {};
}

/// Fan verdicts do not depend on the order of the chamber list.
inline PropResult prop_fan_permutation_invariance(std::uint64_t seed, int cases) {
    Rng rng(seed);
    std::vector<mori::ChamberFan> fans;
    fans.push_back(*mori::blowup_pn_two_points(3).mcd);
    fans.push_back(*mori::complete_collineations_3().mcd);
    {
        // Broken variant: drop one chamber.
        mori::ChamberFan broken = fans[0];
        broken.chambers.erase(broken.chambers.begin() + 4);
        fans.push_back(std::move(broken));
    }
    std::vector<bool> verdicts;
    for (const auto& fan : fans)
        verdicts.push_back(mori::verify_fan(fan).pass());
    for (int i = 0; i < cases; ++i) {
        mori::ChamberFan fan = fans[i % fans.size()];
        std::shuffle(fan.chambers.begin(), fan.chambers.end(), rng.engine());
        if (mori::verify_fan(fan).pass() != verdicts[i % fans.size()])
            return PropResult::failure("fan verdict changed under permutation, case " +
                                       std::to_string(i));
    }
    return {};
}

} // namespace mori_test
