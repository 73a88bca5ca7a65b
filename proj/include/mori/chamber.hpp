#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mori/cone.hpp"
#include "mori/lattice.hpp"

namespace mori {

/// Verdict of one criterion of the fan verifier, with human-readable notes
/// on failure. Notes are canonically ordered so reports are byte-stable.
struct FanCheck {
    std::string name;
    bool ok = true;
    std::vector<std::string> notes;
};

struct FanReport {
    FanCheck containment;   // every chamber pointed, full-dimensional in the
                            // support span, generators inside the support
    FanCheck disjointness;  // chamber interior samples avoid other interiors
    FanCheck wall_matching; // each internal facet has exactly one chamber on
                            // its far side
    FanCheck connectivity;  // wall-adjacency graph is connected; together
                            // with the other checks this certifies coverage
    /// Edges of the wall-adjacency graph discovered by the wall matching,
    /// as index pairs into the chamber list.
    std::vector<std::pair<int, int>> adjacency;

    bool pass() const {
        return containment.ok && disjointness.ok && wall_matching.ok && connectivity.ok;
    }
};

namespace detail {

/// Direction pointing from a facet of the chamber strictly to its far side,
/// kept inside the chamber's linear span: the projection of -f onto the span.
inline QVec crossing_direction(const Cone& chamber, const ZVec& f) {
    const std::vector<ZVec>& eqs = chamber.span_eqs();
    if (eqs.empty())
        return to_rational(negated(f));
    int k = static_cast<int>(eqs.size());
    RatMatrix gram(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            gram.at(i, j) = Rational(dot(eqs[i], eqs[j]));
    QVec rhs(k);
    for (int i = 0; i < k; ++i)
        rhs[i] = Rational(dot(eqs[i], f));
    auto y = solve(gram, rhs);
    if (!y)
        throw DataError("degenerate span equations"); // basis rows are independent
    QVec u(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        Rational s(Int(-f[j]));
        for (int i = 0; i < k; ++i)
            s += (*y)[i] * Rational(eqs[i][j]);
        u[j] = s;
    }
    return u;
}

inline QVec ray_sum(const std::vector<ZVec>& rays, std::size_t dim) {
    QVec s(dim, Rational(0));
    for (const ZVec& r : rays)
        for (std::size_t j = 0; j < dim; ++j)
            s[j] += Rational(r[j]);
    return s;
}

/// Extremal rays of the chamber tight on the given facet; they generate the
/// facet as a cone because the chamber is pointed.
inline std::vector<ZVec> facet_rays(const Cone& chamber, const ZVec& f) {
    std::vector<ZVec> out;
    for (const ZVec& r : chamber.rays())
        if (dot(f, r) == 0)
            out.push_back(r);
    return out;
}

/// True when every listed ray is tight on some single facet of the support,
/// i.e. the facet they generate lies in the support's boundary.
inline bool in_support_facet(const Cone& support, const std::vector<ZVec>& rays) {
    for (const ZVec& g : support.facets()) {
        bool all = true;
        for (const ZVec& r : rays)
            if (dot(g, r) != 0) {
                all = false;
                break;
            }
        if (all)
            return true;
    }
    return false;
}

} // namespace detail

/// Checks that the chambers form a wall-and-chamber decomposition of the
/// support cone:
///   (a) each chamber is pointed, full-dimensional within the support's span
///       and contained in the support;
///   (b) interior sample points (the sum of a chamber's extremal rays) lie
///       outside or on the boundary of every other chamber;
///   (c) every facet of every chamber either lies in a facet of the support
///       or, crossing it at a relative-interior point, lands in the interior
///       of exactly one other chamber (this form is stable under facets that
///       neighbouring chambers subdivide);
///   (d) the wall-adjacency graph from (c) is connected, which together with
///       (a)-(c) certifies that the chambers cover the support.
inline FanReport verify_fan(const ChamberFan& fan) {
    if (fan.chambers.empty())
        throw DataError("fan verification requires at least one chamber");
    if (!fan.support.is_pointed())
        throw DataError("fan support must be pointed");

    FanReport rep;
    rep.containment.name = "containment";
    rep.disjointness.name = "interior-disjointness";
    rep.wall_matching.name = "wall-matching";
    rep.connectivity.name = "coverage-connectivity";

    int n = static_cast<int>(fan.chambers.size());
    int support_dim = fan.support.cone_dim();

    for (int i = 0; i < n; ++i) {
        const Chamber& ch = fan.chambers[i];
        if (ch.cone.ambient_dim() != fan.support.ambient_dim()) {
            rep.containment.ok = false;
            rep.containment.notes.push_back("chamber '" + ch.label +
                                            "': ambient dimension mismatch");
            continue;
        }
        if (!ch.cone.is_pointed()) {
            rep.containment.ok = false;
            rep.containment.notes.push_back("chamber '" + ch.label + "': not pointed");
        }
        if (ch.cone.cone_dim() != support_dim) {
            rep.containment.ok = false;
            rep.containment.notes.push_back(
                "chamber '" + ch.label + "': not full-dimensional in the support span");
        }
        for (const ZVec& r : ch.cone.rays())
            if (!fan.support.contains(r).inside()) {
                rep.containment.ok = false;
                rep.containment.notes.push_back("chamber '" + ch.label + "': generator " +
                                                vec_str(r) + " outside the support");
            }
    }
    if (!rep.containment.ok) {
        rep.disjointness.ok = rep.wall_matching.ok = rep.connectivity.ok = false;
        rep.connectivity.notes.push_back("skipped: containment failed");
        return rep;
    }

    std::size_t dim = static_cast<std::size_t>(fan.support.ambient_dim());
    for (int i = 0; i < n; ++i) {
        QVec sample = detail::ray_sum(fan.chambers[i].cone.rays(), dim);
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            if (fan.chambers[j].cone.contains(sample).status == Membership::Status::interior) {
                rep.disjointness.ok = false;
                rep.disjointness.notes.push_back(
                    "interior sample of chamber '" + fan.chambers[i].label +
                    "' lies in the interior of chamber '" + fan.chambers[j].label + "'");
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        const Chamber& ch = fan.chambers[i];
        for (const ZVec& f : ch.cone.facets()) {
            std::vector<ZVec> fr = detail::facet_rays(ch.cone, f);
            if (detail::in_support_facet(fan.support, fr))
                continue; // external wall
            QVec base = detail::ray_sum(fr, dim);
            QVec dir = detail::crossing_direction(ch.cone, f);
            int matched = -1;
            int count = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                if (contains_limit(fan.chambers[j].cone, base, dir) ==
                    Membership::Status::interior) {
                    matched = j;
                    ++count;
                }
            }
            if (count != 1) {
                rep.wall_matching.ok = false;
                rep.wall_matching.notes.push_back(
                    "chamber '" + ch.label + "' facet " + vec_str(f) +
                    (count == 0 ? ": far side unmatched"
                                : ": far side claimed by " + std::to_string(count) +
                                      " chambers"));
            } else {
                rep.adjacency.emplace_back(std::min(i, matched), std::max(i, matched));
            }
        }
    }
    std::sort(rep.adjacency.begin(), rep.adjacency.end());
    rep.adjacency.erase(std::unique(rep.adjacency.begin(), rep.adjacency.end()),
                        rep.adjacency.end());

    std::vector<char> seen(n, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (auto [x, y] : rep.adjacency) {
            int w = x == v ? y : y == v ? x : -1;
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                queue.push(w);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i]) {
            rep.connectivity.ok = false;
            rep.connectivity.notes.push_back("chamber '" + fan.chambers[i].label +
                                             "' unreachable in the wall-adjacency graph");
        }
    if (!rep.disjointness.ok || !rep.wall_matching.ok) {
        rep.connectivity.ok = false;
        rep.connectivity.notes.push_back("coverage not certified: earlier checks failed");
    }
    std::sort(rep.disjointness.notes.begin(), rep.disjointness.notes.end());
    std::sort(rep.wall_matching.notes.begin(), rep.wall_matching.notes.end());
    return rep;
}

struct Located {
    std::string label;
    Membership membership;
};

/// Labels of all chambers containing x together with the membership status;
/// empty when x lies outside the support.
inline std::vector<Located> locate(const ChamberFan& fan, const QVec& x) {
    if (static_cast<int>(x.size()) != fan.support.ambient_dim())
        throw DataError("locate: point length does not match the fan's ambient dimension");
    std::vector<Located> out;
    if (!fan.support.contains(x).inside())
        return out;
    for (const Chamber& ch : fan.chambers) {
        Membership m = ch.cone.contains(x);
        if (m.inside())
            out.push_back({ch.label, std::move(m)});
    }
    return out;
}

inline std::vector<Located> locate(const VarietyModel& m, const ClassVector& x) {
    if (!m.mcd)
        throw DataError("model '" + m.name + "' records no chamber decomposition");
    if (*x.lattice != *m.divisor_lattice)
        throw DataError("locate: class is not in the divisor lattice of '" + m.name + "'");
    return locate(*m.mcd, x.coords);
}

struct Wall {
    Cone cone;
    std::string chamber_a;
    std::string chamber_b;
};

/// All internal codimension-one intersections of chamber pairs, canonically
/// ordered. Requires a fan that passes verification.
inline std::vector<Wall> walls(const ChamberFan& fan) {
    if (!verify_fan(fan).pass())
        throw DataError("walls: fan does not verify");
    int n = static_cast<int>(fan.chambers.size());
    int wall_dim = fan.support.cone_dim() - 1;
    std::vector<Wall> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Cone w = intersect(fan.chambers[i].cone, fan.chambers[j].cone);
            if (w.cone_dim() == wall_dim && !w.is_zero_cone())
                out.push_back({std::move(w), fan.chambers[i].label, fan.chambers[j].label});
        }
    std::sort(out.begin(), out.end(), [](const Wall& a, const Wall& b) {
        if (a.cone.rays() != b.cone.rays()) {
            return std::lexicographical_compare(a.cone.rays().begin(), a.cone.rays().end(),
                                                b.cone.rays().begin(), b.cone.rays().end(),
                                                lex_less);
        }
        return std::tie(a.chamber_a, a.chamber_b) < std::tie(b.chamber_a, b.chamber_b);
    });
    return out;
}

} // namespace mori
