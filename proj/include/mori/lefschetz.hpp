#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mori/lattice.hpp"
#include "mori/zoo.hpp"

namespace mori {

enum class CheckState { pass, fail, skipped };

inline const char* to_string(CheckState s) {
    switch (s) {
    case CheckState::pass: return "pass";
    case CheckState::fail: return "fail";
    default: return "skipped-missing-data";
    }
}

enum class Verdict { birational_twins, divisorially_equivalent, partial, fail };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::birational_twins: return "birational_twins";
    case Verdict::divisorially_equivalent: return "divisorially_equivalent";
    case Verdict::partial: return "partial";
    default: return "fail";
    }
}

/// Outcome of the divisorial-equivalence / birational-twin checks.
/// The pullback is required to be an isomorphism; rational invertibility and
/// integral invertibility (integer entries, determinant +-1) are reported
/// separately since lattice data only pins down the former.
struct EquivalenceReport {
    bool map_is_isomorphism = false;
    bool map_is_integral = false;
    CheckState eff_match = CheckState::skipped;
    CheckState mov_match = CheckState::skipped;
    CheckState nef_match = CheckState::skipped;
    CheckState mcd_match = CheckState::skipped;
    /// Chamber matching detail: (ambient label, sub label) pairs, plus the
    /// labels that found no partner.
    std::vector<std::pair<std::string, std::string>> chamber_matches;
    std::vector<std::string> unmatched_ambient;
    std::vector<std::string> unmatched_sub;
    Verdict verdict = Verdict::fail;
};

namespace detail {

inline bool integral_unimodular(const RatMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_integer())
                return false;
    Rational d = det(m);
    return d == Rational(1) || d == Rational(-1);
}

inline CheckState compare_cones(const LatticeMap& f, const std::optional<Cone>& amb,
                                const std::optional<Cone>& sub) {
    if (!amb || !sub)
        return CheckState::skipped;
    return cone_equal(apply_map(f, *amb), *sub) ? CheckState::pass : CheckState::fail;
}

inline Verdict settle(const EquivalenceReport& r, bool twins_mode) {
    auto failed = [](CheckState s) { return s == CheckState::fail; };
    auto skipped = [](CheckState s) { return s == CheckState::skipped; };
    if (!r.map_is_isomorphism || failed(r.eff_match) || failed(r.mov_match) ||
        failed(r.nef_match) || failed(r.mcd_match))
        return Verdict::fail;
    if (skipped(r.eff_match) || skipped(r.mov_match) || skipped(r.nef_match))
        return Verdict::partial;
    if (twins_mode && r.mcd_match == CheckState::pass)
        return Verdict::birational_twins;
    return Verdict::divisorially_equivalent;
}

} // namespace detail

/// Lefschetz divisorial equivalence: the pullback must be an isomorphism
/// carrying the ambient Eff, Mov and Nef cones onto the submodel's. Cones
/// absent on either side are reported as skipped and cap the verdict at
/// "partial". The chamber decompositions are not consulted here.
inline EquivalenceReport check_divisorial_equivalence(const TwinPair& pair) {
    const LatticeMap& f = pair.pullback;
    if (*f.source != *pair.ambient.divisor_lattice ||
        *f.target != *pair.sub.divisor_lattice)
        throw DataError("pullback lattices do not match the pair");
    EquivalenceReport r;
    r.map_is_isomorphism = !det(f.matrix).is_zero();
    r.map_is_integral = r.map_is_isomorphism && detail::integral_unimodular(f.matrix);
    if (r.map_is_isomorphism) {
        r.eff_match = detail::compare_cones(f, pair.ambient.eff, pair.sub.eff);
        r.nef_match = detail::compare_cones(f, pair.ambient.nef, pair.sub.nef);
        r.mov_match = detail::compare_cones(f, pair.ambient.mov, pair.sub.mov);
    }
    r.verdict = detail::settle(r, false);
    return r;
}

/// Birational twins: divisorial equivalence plus a bijection between the
/// chamber sets under which the pullback of each ambient chamber equals the
/// matched sub chamber. Labels are ignored; cones are compared. Both models
/// must record a chamber decomposition.
inline EquivalenceReport check_birational_twins(const TwinPair& pair) {
    if (!pair.ambient.mcd)
        throw DataError("ambient model '" + pair.ambient.name +
                        "' records no chamber decomposition");
    if (!pair.sub.mcd)
        throw DataError("sub model '" + pair.sub.name +
                        "' records no chamber decomposition");
    EquivalenceReport r = check_divisorial_equivalence(pair);
    if (!r.map_is_isomorphism) {
        r.verdict = Verdict::fail;
        return r;
    }
    const auto& amb = pair.ambient.mcd->chambers;
    const auto& sub = pair.sub.mcd->chambers;
    std::vector<char> taken(sub.size(), 0);
    bool all_matched = true;
    for (const Chamber& a : amb) {
        Cone image = apply_map(pair.pullback, a.cone);
        int found = -1;
        for (std::size_t j = 0; j < sub.size(); ++j) {
            if (taken[j])
                continue;
            if (cone_equal(image, sub[j].cone)) {
                found = static_cast<int>(j);
                break;
            }
        }
        if (found < 0) {
            all_matched = false;
            r.unmatched_ambient.push_back(a.label);
        } else {
            taken[found] = 1;
            r.chamber_matches.emplace_back(a.label, sub[found].label);
        }
    }
    for (std::size_t j = 0; j < sub.size(); ++j)
        if (!taken[j]) {
            all_matched = false;
            r.unmatched_sub.push_back(sub[j].label);
        }
    // Support of the decomposition is the effective cone, already compared.
    r.mcd_match = all_matched ? CheckState::pass : CheckState::fail;
    r.verdict = detail::settle(r, true);
    return r;
}

} // namespace mori
