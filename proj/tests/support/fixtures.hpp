#pragma once

// Hand-built negative fixtures for the equivalence checker.

#include "mori/lattice.hpp"
#include "mori/lefschetz.hpp"
#include "mori/zoo.hpp"

namespace mori_test {

/// A copy of the two-point blow-up of P^3 whose nef cone shrinks to
/// <H, H_p> while the effective and movable cones stay intact: a model of an
/// embedding that preserves Picard groups and the effective cone but not the
/// nef cone. The curve cone is dropped so no duality constraint is implied.
inline mori::VarietyModel nef_broken_blowup3() {
    mori::VarietyModel m = mori::blowup_pn_two_points(3);
    m.name = "blowup-p3-2pts-nefbroken";
    m.divisor_lattice = std::make_shared<mori::Lattice>(
        "N1(" + m.name + ")", m.divisor_lattice->basis_labels);
    m.curve_lattice.reset();
    m.pairing.reset();
    m.ne.reset();
    m.mcd.reset();
    m.named_classes.clear();
    m.nef = mori::Cone::from_int_generators(3, {{1, 0, 0}, {1, -1, 0}});
    mori::validate_model(m);
    return m;
}

/// Pairs the genuine blow-up of P^3 with the nef-broken copy along the
/// identity pullback.
inline mori::TwinPair nef_broken_pair() {
    mori::VarietyModel ambient = mori::blowup_pn_two_points(3);
    mori::VarietyModel sub = nef_broken_blowup3();
    mori::LatticeMap pullback(ambient.divisor_lattice, sub.divisor_lattice,
                              mori::RatMatrix::identity(3));
    return mori::TwinPair(std::move(ambient), std::move(sub), std::move(pullback));
}

/// The complete-quadrics model with one chamber of its decomposition
/// subdivided into two halves: a strictly finer fan with the same support.
inline mori::VarietyModel subdivided_quadrics() {
    mori::VarietyModel m = mori::complete_quadrics_3();
    m.name = "quadrics-3-subdivided";
    m.divisor_lattice = std::make_shared<mori::Lattice>(
        "N1(" + m.name + ")", m.divisor_lattice->basis_labels);
    // Rebuild classes and cones over the renamed lattice.
    auto relat = [&](const mori::ClassVector& v) {
        return mori::ClassVector(m.divisor_lattice, v.coords);
    };
    for (auto& [label, v] : m.named_classes)
        v = relat(v);
    // Split <E_1+, D_2+, E_2+> along the ray E_1+ + E_2+.
    auto& chambers = m.mcd->chambers;
    for (std::size_t i = 0; i < chambers.size(); ++i) {
        if (chambers[i].label == "<E_1+,D_2+,E_2+>") {
            mori::Chamber lowered = chambers[i];
            chambers[i].cone =
                mori::Cone::from_int_generators(3, {{0, 1, 0}, {2, -1, 0}, {0, 1, 1}});
            chambers[i].label = "<E_1+,D_2+,M+>";
            lowered.cone =
                mori::Cone::from_int_generators(3, {{0, 1, 1}, {2, -1, 0}, {0, 0, 1}});
            lowered.label = "<M+,D_2+,E_2+>";
            chambers.insert(chambers.begin() + static_cast<long>(i) + 1, lowered);
            break;
        }
    }
    mori::validate_model(m);
    return m;
}

inline mori::TwinPair subdivided_pair() {
    mori::VarietyModel ambient = mori::complete_collineations_3();
    mori::VarietyModel sub = subdivided_quadrics();
    mori::LatticeMap pullback(ambient.divisor_lattice, sub.divisor_lattice,
                              mori::RatMatrix::identity(3));
    return mori::TwinPair(std::move(ambient), std::move(sub), std::move(pullback));
}

} // namespace mori_test
