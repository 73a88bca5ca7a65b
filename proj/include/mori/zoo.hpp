#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mori/chamber.hpp"
#include "mori/lattice.hpp"

namespace mori {

/// An embedded pair: ambient model, submodel, and the pullback on divisor
/// lattices. The pullback must be invertible.
struct TwinPair {
    VarietyModel ambient;
    VarietyModel sub;
    LatticeMap pullback;

    TwinPair(VarietyModel amb, VarietyModel s, LatticeMap pb)
        : ambient(std::move(amb)), sub(std::move(s)), pullback(std::move(pb)) {
        if (*pullback.source != *ambient.divisor_lattice ||
            *pullback.target != *sub.divisor_lattice)
            throw DataError("pullback does not connect the divisor lattices of the pair");
        if (det(pullback.matrix).is_zero())
            throw DataError("pullback must be an isomorphism of divisor lattices");
    }
};

namespace detail {

inline Cone cone_from(int dim, std::vector<ZVec> gens) {
    return Cone::from_int_generators(dim, std::move(gens));
}

inline ClassVector cls(const LatticePtr& lat, ZVec coords) {
    return ClassVector(lat, to_rational(coords));
}

} // namespace detail

/// P^n: Picard rank one, every divisor cone the nonnegative ray of the
/// hyperplane class.
inline VarietyModel projective_space(int n) {
    if (n < 1)
        throw DataError("projective_space requires n >= 1");
    VarietyModel m;
    m.name = "p" + std::to_string(n);
    m.divisor_lattice = std::make_shared<Lattice>("N1(" + m.name + ")",
                                                  std::vector<std::string>{"H"});
    m.curve_lattice = std::make_shared<Lattice>("N_1(" + m.name + ")",
                                                std::vector<std::string>{"h"});
    m.pairing = Pairing(m.divisor_lattice, m.curve_lattice,
                        RatMatrix(1, 1, {Rational(1)}));
    Cone ray = detail::cone_from(1, {{Int(1)}});
    m.eff = ray;
    m.nef = ray;
    m.mov = ray;
    m.ne = ray;
    ChamberFan fan;
    fan.support = ray;
    fan.chambers.push_back({"P^" + std::to_string(n), ray, "the variety itself"});
    m.mcd = std::move(fan);
    validate_model(m);
    return m;
}

/// The blow-up of P^n at two points p, q (n >= 2).
///
/// Divisor basis (H, E_p, E_q), curve basis (h, e_p, e_q), pairing
/// diag(1, -1, -1). Strict transforms of hyperplanes through the centers are
/// recorded as named classes H_p = H - E_p, H_q = H - E_q,
/// H_pq = H - E_p - E_q, and L = h - e_p - e_q is the strict transform of
/// the line through the centers.
///
/// For n >= 3 the movable cone and the five-chamber decomposition of the
/// effective cone are recorded; for n = 2 both are omitted (hyperplanes
/// through a point on a surface have base loci of codimension one, so the
/// cone data would mean something different there).
inline VarietyModel blowup_pn_two_points(int n) {
    if (n < 2)
        throw DataError("blowup_pn_two_points requires n >= 2");
    VarietyModel m;
    m.name = "blowup-p" + std::to_string(n) + "-2pts";
    m.divisor_lattice = std::make_shared<Lattice>(
        "N1(" + m.name + ")", std::vector<std::string>{"H", "E_p", "E_q"});
    m.curve_lattice = std::make_shared<Lattice>(
        "N_1(" + m.name + ")", std::vector<std::string>{"h", "e_p", "e_q"});
    m.pairing = Pairing(m.divisor_lattice, m.curve_lattice,
                        RatMatrix(3, 3, {Rational(1), Rational(0), Rational(0),
                                         Rational(0), Rational(-1), Rational(0),
                                         Rational(0), Rational(0), Rational(-1)}));
    m.add_class("H_p", detail::cls(m.divisor_lattice, {1, -1, 0}));
    m.add_class("H_q", detail::cls(m.divisor_lattice, {1, 0, -1}));
    m.add_class("H_pq", detail::cls(m.divisor_lattice, {1, -1, -1}));
    m.add_class("L", detail::cls(m.curve_lattice, {1, -1, -1}));

    m.eff = detail::cone_from(3, {{0, 1, 0}, {0, 0, 1}, {1, -1, -1}});
    m.ne = detail::cone_from(3, {{0, 1, 0}, {0, 0, 1}, {1, -1, -1}});
    m.nef = detail::cone_from(3, {{1, 0, 0}, {1, -1, 0}, {1, 0, -1}});
    if (n >= 3) {
        m.mov = detail::cone_from(3, {{1, 0, 0}, {1, -1, 0}, {1, 0, -1}, {1, -1, -1}});
        std::string pn = "P^" + std::to_string(n);
        ChamberFan fan;
        fan.support = m.eff;
        fan.chambers.push_back(
            {"X", detail::cone_from(3, {{1, 0, 0}, {1, -1, 0}, {1, 0, -1}}),
             "the variety itself"});
        fan.chambers.push_back(
            {"X'", detail::cone_from(3, {{1, -1, 0}, {1, 0, -1}, {1, -1, -1}}),
             "small modification replacing the line through the centers"});
        fan.chambers.push_back(
            {"Bl_p " + pn, detail::cone_from(3, {{1, 0, 0}, {1, -1, 0}, {0, 0, 1}}),
             "contraction of E_q"});
        fan.chambers.push_back(
            {"Bl_q " + pn, detail::cone_from(3, {{1, 0, 0}, {1, 0, -1}, {0, 1, 0}}),
             "contraction of E_p"});
        fan.chambers.push_back(
            {pn, detail::cone_from(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
             "contraction of E_p and E_q"});
        m.mcd = std::move(fan);
    }
    validate_model(m);
    return m;
}

/// The strict transform of a linear P^k through both centers inside the
/// blow-up of P^n: the subvariety is the blow-up of P^k at two points and
/// the pullback is the identity in the shared (H, E_p, E_q) bases.
inline TwinPair linear_section_twin(int n, int k) {
    if (k <= 1 || k >= n)
        throw DataError("linear_section_twin requires n > k > 1");
    VarietyModel ambient = blowup_pn_two_points(n);
    VarietyModel sub = blowup_pn_two_points(k);
    LatticeMap pullback(ambient.divisor_lattice, sub.divisor_lattice,
                        RatMatrix::identity(3));
    return TwinPair(std::move(ambient), std::move(sub), std::move(pullback));
}

namespace detail {

/// Shared cone data of the rank-3 complete-forms models. Divisor basis
/// (H, E1, E2); E3 = 4H - 3E1 - 2E2 is the third effective boundary class,
/// D2 = 2H - E1, D3 = 3H - 2E1 - E2, DM = 6H - 3E1 - 2E2.
/// The seven maximal chambers triangulate the effective cone with vertex
/// rays {E1, E2, E3, D2, D3, H, DM}; only the two chambers inside the
/// movable cone correspond to small modifications, and no model labels are
/// recorded for any chamber.
inline VarietyModel complete_forms_rank3(const std::string& name,
                                         const std::string& suffix) {
    VarietyModel m;
    m.name = name;
    std::string H = "H" + suffix, E1 = "E_1" + suffix, E2 = "E_2" + suffix;
    m.divisor_lattice = std::make_shared<Lattice>(
        "N1(" + name + ")", std::vector<std::string>{H, E1, E2});
    m.add_class("D_2" + suffix, cls(m.divisor_lattice, {2, -1, 0}));
    m.add_class("D_3" + suffix, cls(m.divisor_lattice, {3, -2, -1}));
    m.add_class("D_M" + suffix, cls(m.divisor_lattice, {6, -3, -2}));
    m.add_class("E_3" + suffix, cls(m.divisor_lattice, {4, -3, -2}));

    m.eff = cone_from(3, {{0, 1, 0}, {0, 0, 1}, {4, -3, -2}});
    m.nef = cone_from(3, {{1, 0, 0}, {2, -1, 0}, {3, -2, -1}});
    m.mov = cone_from(3, {{1, 0, 0}, {2, -1, 0}, {3, -2, -1}, {6, -3, -2}});

    auto chamber = [&](std::vector<std::string> labels,
                       std::vector<ZVec> gens) -> Chamber {
        std::string label = "<";
        for (std::size_t i = 0; i < labels.size(); ++i)
            label += (i ? "," : "") + labels[i];
        label += ">";
        return {label, cone_from(3, std::move(gens)), ""};
    };
    ChamberFan fan;
    fan.support = m.eff;
    fan.chambers.push_back(chamber({H, "D_2" + suffix, "D_3" + suffix},
                                   {{1, 0, 0}, {2, -1, 0}, {3, -2, -1}}));
    fan.chambers.push_back(chamber({H, "D_3" + suffix, "D_M" + suffix},
                                   {{1, 0, 0}, {3, -2, -1}, {6, -3, -2}}));
    fan.chambers.push_back(chamber({E1, H, "D_M" + suffix},
                                   {{0, 1, 0}, {1, 0, 0}, {6, -3, -2}}));
    fan.chambers.push_back(chamber({"E_3" + suffix, "D_3" + suffix, "D_M" + suffix},
                                   {{4, -3, -2}, {3, -2, -1}, {6, -3, -2}}));
    fan.chambers.push_back(chamber({E1, "E_3" + suffix, "D_M" + suffix},
                                   {{0, 1, 0}, {4, -3, -2}, {6, -3, -2}}));
    fan.chambers.push_back(chamber({E1, "D_2" + suffix, E2},
                                   {{0, 1, 0}, {2, -1, 0}, {0, 0, 1}}));
    fan.chambers.push_back(chamber({E2, "D_2" + suffix, "E_3" + suffix},
                                   {{0, 0, 1}, {2, -1, 0}, {4, -3, -2}}));
    m.mcd = std::move(fan);
    validate_model(m);
    return m;
}

} // namespace detail

/// The space of complete collineations of a 4-dimensional vector space:
/// the blow-up of P^15 along the Segre threefold product and the strict
/// transform of its secant variety. Divisor-side cone data only; no curve
/// lattice or pairing is recorded.
inline VarietyModel complete_collineations_3() {
    return detail::complete_forms_rank3("collineations-3", "");
}

/// The space of complete quadric surfaces: the blow-up of P^9 along the
/// Veronese threefold and the strict transform of its secant variety. Same
/// lattice data as the collineation space in the (H+, E_1+, E_2+) basis.
inline VarietyModel complete_quadrics_3() {
    return detail::complete_forms_rank3("quadrics-3", "+");
}

/// The embedding of the space of complete quadrics into the space of
/// complete collineations; the pullback is the basis substitution
/// (H, E_1, E_2) -> (H+, E_1+, E_2+).
inline TwinPair collineations_quadrics_pair() {
    VarietyModel ambient = complete_collineations_3();
    VarietyModel sub = complete_quadrics_3();
    LatticeMap pullback(ambient.divisor_lattice, sub.divisor_lattice,
                        RatMatrix::identity(3));
    return TwinPair(std::move(ambient), std::move(sub), std::move(pullback));
}

/// Names shipped with the model zoo, in canonical listing order.
inline std::vector<std::string> zoo_model_names() {
    return {"p3",
            "blowup-p2-2pts",
            "blowup-p3-2pts",
            "blowup-p4-2pts",
            "collineations-3",
            "quadrics-3"};
}

/// Builds a zoo model from its name; understands the parametric families
/// "p<n>" and "blowup-p<n>-2pts" for any valid n.
inline std::optional<VarietyModel> make_zoo_model(const std::string& name) {
    auto parse_int = [](const std::string& s) -> std::optional<int> {
        if (s.empty() || s.size() > 6)
            return std::nullopt;
        int v = 0;
        for (char c : s) {
            if (c < '0' || c > '9')
                return std::nullopt;
            v = v * 10 + (c - '0');
        }
        return v;
    };
    if (name == "collineations-3")
        return complete_collineations_3();
    if (name == "quadrics-3")
        return complete_quadrics_3();
    if (name.rfind("blowup-p", 0) == 0 && name.size() > 13 &&
        name.compare(name.size() - 5, 5, "-2pts") == 0) {
        auto n = parse_int(name.substr(8, name.size() - 13));
        if (n && *n >= 2)
            return blowup_pn_two_points(*n);
        return std::nullopt;
    }
    if (name.size() > 1 && name[0] == 'p') {
        auto n = parse_int(name.substr(1));
        if (n && *n >= 1)
            return projective_space(*n);
    }
    return std::nullopt;
}

} // namespace mori
