#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "mori/linalg.hpp"
#include "mori/rational.hpp"

namespace mori {

/// Result of a membership query. For cones that are not full-dimensional,
/// "interior" means the relative interior within the cone's linear span.
struct Membership {
    enum class Status { interior, boundary, outside };
    Status status = Status::outside;
    /// Indices into Cone::facets() with <f, x> = 0; populated only for
    /// boundary points.
    std::vector<int> tight_facets;

    bool inside() const { return status != Status::outside; }
};

inline const char* to_string(Membership::Status s) {
    switch (s) {
    case Membership::Status::interior: return "interior";
    case Membership::Status::boundary: return "boundary";
    default: return "outside";
    }
}

/// Finitely generated convex cone over the rationals, holding both the
/// generator description and the inequality description.
///
/// Data kept in canonical form:
///  - rays: primitive extremal generators of the pointed part, reduced
///    modulo the lineality space, sorted lexicographically;
///  - lineality: reduced-echelon primitive basis of the largest linear
///    subspace contained in the cone;
///  - facets: primitive irredundant inequalities <f, x> >= 0, each strict
///    somewhere on the cone;
///  - span_eqs: reduced-echelon basis of the annihilator of the cone's
///    linear span, so the point set is exactly
///        { x : span_eqs.x = 0, <f, x> >= 0 for every facet f }.
///
/// Both descriptions are produced by the double description method, so a
/// cone constructed from any generating set (or any inequality system) comes
/// out byte-identical regardless of input order or redundancy.
class Cone {
public:
    Cone() : dim_(0) {}

    /// Builds the cone generated by the given vectors. Redundant generators
    /// are removed, extremal rays canonicalized, facets computed. An empty
    /// input yields the zero cone.
    static Cone from_generators(int dim, const std::vector<QVec>& raw) {
        std::vector<ZVec> gens;
        for (const QVec& v : raw) {
            if (static_cast<int>(v.size()) != dim)
                throw DataError("generator length does not match ambient dimension");
            if (!is_zero(v))
                gens.push_back(primitive(v));
        }
        return from_int_generators(dim, gens);
    }

    static Cone from_int_generators(int dim, std::vector<ZVec> gens) {
        for (ZVec& g : gens) {
            if (static_cast<int>(g.size()) != dim)
                throw DataError("generator length does not match ambient dimension");
            if (!is_zero(g))
                g = primitive(g);
        }
        std::erase_if(gens, [](const ZVec& g) { return is_zero(g); });
        std::sort(gens.begin(), gens.end(), lex_less);
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

        Cone c;
        c.dim_ = dim;
        // Dual side first: the extreme rays and lineality of
        // { y : <g, y> >= 0 } are exactly the facets and span equations.
        DD dual_side = dd_extreme(dim, gens, {});
        c.facets_ = std::move(dual_side.rays);
        c.span_eqs_ = std::move(dual_side.lineality);
        // Primal side: canonical rays and lineality from the H-description.
        DD primal = dd_extreme(dim, c.facets_, c.span_eqs_);
        c.rays_ = std::move(primal.rays);
        c.lineality_ = std::move(primal.lineality);
        return c;
    }

    /// Builds the cone { x : eqs.x = 0, <a, x> >= 0 for a in ineqs } and
    /// recanonicalizes both descriptions.
    static Cone from_inequalities(int dim, std::vector<ZVec> ineqs,
                                  const std::vector<ZVec>& eqs) {
        for (ZVec& a : ineqs)
            if (!is_zero(a))
                a = primitive(a);
        std::erase_if(ineqs, [](const ZVec& a) { return is_zero(a); });
        std::sort(ineqs.begin(), ineqs.end(), lex_less);
        ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
        DD v = dd_extreme(dim, ineqs, rref_basis(eqs, dim));
        std::vector<ZVec> gens = v.rays;
        for (const ZVec& l : v.lineality) {
            gens.push_back(l);
            gens.push_back(negated(l));
        }
        return from_int_generators(dim, std::move(gens));
    }

    int ambient_dim() const { return dim_; }
    const std::vector<ZVec>& rays() const { return rays_; }
    const std::vector<ZVec>& lineality() const { return lineality_; }
    const std::vector<ZVec>& facets() const { return facets_; }
    const std::vector<ZVec>& span_eqs() const { return span_eqs_; }

    bool is_pointed() const { return lineality_.empty(); }
    bool is_zero_cone() const { return rays_.empty() && lineality_.empty(); }

    /// Dimension of the cone as a subset of the ambient space.
    int cone_dim() const { return dim_ - static_cast<int>(span_eqs_.size()); }

    /// Canonical sorted primitive extremal rays of a pointed cone.
    const std::vector<ZVec>& extremal_rays() const {
        if (!lineality_.empty())
            throw DataError("extremal rays are undefined: cone has nonzero lineality");
        return rays_;
    }

    /// All generators including both directions of the lineality space;
    /// convenient for mapping the cone through a linear map.
    std::vector<ZVec> generating_set() const {
        std::vector<ZVec> g = rays_;
        for (const ZVec& l : lineality_) {
            g.push_back(l);
            g.push_back(negated(l));
        }
        return g;
    }

    /// Membership with relative-interior semantics. Exact; there are no
    /// tolerance parameters anywhere.
    Membership contains(const QVec& x) const {
        if (static_cast<int>(x.size()) != dim_)
            throw DataError("point length does not match ambient dimension");
        Membership m;
        for (const ZVec& e : span_eqs_)
            if (!dot(e, x).is_zero())
                return m;
        std::vector<int> tight;
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            Rational v = dot(facets_[i], x);
            if (v.sign() < 0)
                return m;
            if (v.is_zero())
                tight.push_back(static_cast<int>(i));
        }
        m.status = tight.empty() ? Membership::Status::interior
                                 : Membership::Status::boundary;
        m.tight_facets = std::move(tight);
        return m;
    }

    Membership contains(const ZVec& x) const { return contains(to_rational(x)); }

    /// The dual cone { y : <y, x> >= 0 for all x in this cone } under the
    /// standard inner product. Generators of the dual are the facets of this
    /// cone and vice versa.
    Cone dual() const {
        std::vector<ZVec> gens = facets_;
        for (const ZVec& e : span_eqs_) {
            gens.push_back(e);
            gens.push_back(negated(e));
        }
        return from_int_generators(dim_, std::move(gens));
    }

private:
    struct DD {
        std::vector<ZVec> rays;
        std::vector<ZVec> lineality;
    };

    /// Double description: extreme rays and lineality basis of
    /// { x : eqs.x = 0, <a, x> >= 0 for a in ineqs }.
    /// Incremental insertion; adjacency of rays decided by the rank of the
    /// common tight constraint set.
    static DD dd_extreme(int dim, const std::vector<ZVec>& ineqs,
                         const std::vector<ZVec>& eqs) {
        std::vector<ZVec> lin = kernel_basis(eqs, dim);
        std::vector<ZVec> rays;
        for (std::size_t t = 0; t < ineqs.size(); ++t) {
            const ZVec& a = ineqs[t];
            std::size_t hit = lin.size();
            for (std::size_t i = 0; i < lin.size(); ++i)
                if (dot(a, lin[i]) != 0) {
                    hit = i;
                    break;
                }
            if (hit < lin.size()) {
                // The constraint slices the lineality space: one basis vector
                // becomes the unique ray pointing into <a, x> > 0, the rest
                // of the generators are projected into the hyperplane of a.
                ZVec l0 = lin[hit];
                if (dot(a, l0) < 0)
                    l0 = negated(l0);
                Int d0 = dot(a, l0);
                std::vector<ZVec> new_lin;
                for (std::size_t i = 0; i < lin.size(); ++i) {
                    if (i == hit)
                        continue;
                    new_lin.push_back(primitive(combine(d0, lin[i], dot(a, lin[i]), l0)));
                }
                std::vector<ZVec> new_rays;
                for (const ZVec& r : rays) {
                    ZVec proj = combine(d0, r, dot(a, r), l0);
                    if (!is_zero(proj))
                        new_rays.push_back(primitive(proj));
                }
                new_rays.push_back(primitive(l0));
                lin = std::move(new_lin);
                rays = dedup(std::move(new_rays));
                continue;
            }
            std::vector<ZVec> pos, zero, neg;
            for (const ZVec& r : rays) {
                int s = sgn(dot(a, r));
                (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
            }
            if (neg.empty())
                continue;
            std::vector<ZVec> next = pos;
            next.insert(next.end(), zero.begin(), zero.end());
            for (const ZVec& p : pos)
                for (const ZVec& q : neg)
                    if (adjacent(dim, ineqs, eqs, t, static_cast<int>(lin.size()), p, q)) {
                        ZVec w = combine(dot(a, p), q, dot(a, q), p);
                        if (!is_zero(w))
                            next.push_back(primitive(w));
                    }
            rays = dedup(std::move(next));
        }
        DD out;
        out.lineality = rref_basis(lin, dim);
        for (const ZVec& r : rays) {
            ZVec red = reduce_mod(r, out.lineality);
            if (!is_zero(red))
                out.rays.push_back(primitive(red));
        }
        out.rays = dedup(std::move(out.rays));
        return out;
    }

    // c1 * v1 - c2 * v2, kept integral.
    static ZVec combine(const Int& c1, const ZVec& v1, const Int& c2, const ZVec& v2) {
        ZVec w(v1.size());
        for (std::size_t i = 0; i < v1.size(); ++i)
            w[i] = c1 * v1[i] - c2 * v2[i];
        return w;
    }

    /// Rays p, q of the cone cut out by eqs and ineqs[0..t-1] are adjacent
    /// iff the constraints tight at both span a space of rank
    /// dim - lineality - 2 (their common minimal face is two-dimensional
    /// modulo lineality).
    static bool adjacent(int dim, const std::vector<ZVec>& ineqs,
                         const std::vector<ZVec>& eqs, std::size_t t,
                         int lin_count, const ZVec& p, const ZVec& q) {
        std::vector<ZVec> tight = eqs;
        for (std::size_t k = 0; k < t; ++k)
            if (dot(ineqs[k], p) == 0 && dot(ineqs[k], q) == 0)
                tight.push_back(ineqs[k]);
        return rank(tight) == dim - lin_count - 2;
    }

    static ZVec reduce_mod(ZVec r, const std::vector<ZVec>& lin_rref) {
        for (const ZVec& l : lin_rref) {
            std::size_t pc = 0;
            while (l[pc] == 0)
                ++pc;
            if (r[pc] == 0)
                continue;
            // l[pc] > 0 by canonicalization, so the ray direction survives.
            ZVec next(r.size());
            for (std::size_t j = 0; j < r.size(); ++j)
                next[j] = l[pc] * r[j] - r[pc] * l[j];
            r = std::move(next);
        }
        return r;
    }

    static std::vector<ZVec> dedup(std::vector<ZVec> v) {
        std::sort(v.begin(), v.end(), lex_less);
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    int dim_;
    std::vector<ZVec> rays_;
    std::vector<ZVec> lineality_;
    std::vector<ZVec> facets_;
    std::vector<ZVec> span_eqs_;
};

/// Intersection: facet systems are merged and both descriptions recomputed.
inline Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DataError("cone intersection: ambient dimensions differ");
    std::vector<ZVec> ineqs = a.facets();
    ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
    std::vector<ZVec> eqs = a.span_eqs();
    eqs.insert(eqs.end(), b.span_eqs().begin(), b.span_eqs().end());
    return Cone::from_inequalities(a.ambient_dim(), std::move(ineqs), eqs);
}

/// Join A * B: the cone generated by the union of the generators.
inline Cone join(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DataError("cone join: ambient dimensions differ");
    std::vector<ZVec> gens = a.generating_set();
    std::vector<ZVec> more = b.generating_set();
    gens.insert(gens.end(), more.begin(), more.end());
    return Cone::from_int_generators(a.ambient_dim(), std::move(gens));
}

/// Point-set equality via mutual containment of generators and lineality.
inline bool cone_equal(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DataError("cone equality: ambient dimensions differ");
    auto inside = [](const Cone& c, const std::vector<ZVec>& vecs) {
        for (const ZVec& v : vecs)
            if (!c.contains(v).inside())
                return false;
        return true;
    };
    auto both_ways = [&](const Cone& from, const Cone& to) {
        if (!inside(to, from.rays()))
            return false;
        for (const ZVec& l : from.lineality())
            if (!to.contains(l).inside() || !to.contains(negated(l)).inside())
                return false;
        return true;
    };
    return both_ways(a, b) && both_ways(b, a);
}

/// The dual taken across a non-degenerate pairing p:
/// { d : d^T p c >= 0 for all c in the cone }, i.e. the standard dual of the
/// image of the cone under p.
inline Cone dual_under_pairing(const Cone& c, const RatMatrix& p) {
    if (!p.is_square() || p.rows() != c.ambient_dim())
        throw DataError("pairing matrix must be square of the ambient dimension");
    if (det(p).is_zero())
        throw DataError("pairing matrix is singular");
    // d^T p c = <d, p c>, so dualize the transformed generators.
    std::vector<QVec> transformed;
    for (const ZVec& g : c.generating_set())
        transformed.push_back(p.apply(to_rational(g)));
    return Cone::from_generators(c.ambient_dim(), transformed).dual();
}

/// Membership of the moving point x(t) = base + t*dir for all sufficiently
/// small t > 0. Used by the fan verifier to ask which chamber owns the far
/// side of a wall without manipulating explicit epsilons.
inline Membership::Status contains_limit(const Cone& c, const QVec& base,
                                         const QVec& dir) {
    for (const ZVec& e : c.span_eqs())
        if (!dot(e, base).is_zero() || !dot(e, dir).is_zero())
            return Membership::Status::outside;
    bool tight = false;
    for (const ZVec& f : c.facets()) {
        Rational vb = dot(f, base);
        if (vb.sign() < 0)
            return Membership::Status::outside;
        if (vb.is_zero()) {
            int vd = dot(f, dir).sign();
            if (vd < 0)
                return Membership::Status::outside;
            if (vd == 0)
                tight = true;
        }
    }
    return tight ? Membership::Status::boundary : Membership::Status::interior;
}

} // namespace mori
