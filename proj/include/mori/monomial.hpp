#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mori/linalg.hpp"
#include "mori/rational.hpp"

namespace mori {

/// A linear system of monomials of one common degree on a projective source
/// space: the data of a rational map P^source_dim --> P^(count-1).
struct MonomialSystem {
    int source_dim = 0;
    /// Exponent vectors, each of length source_dim + 1 with equal sum.
    std::vector<std::vector<int>> monomials;

    MonomialSystem() = default;
    MonomialSystem(int src_dim, std::vector<std::vector<int>> monos)
        : source_dim(src_dim), monomials(std::move(monos)) {
        if (source_dim < 1)
            throw DataError("monomial system needs a positive-dimensional source");
        if (monomials.empty())
            throw DataError("monomial system needs at least one monomial");
        int degree = -1;
        std::set<std::vector<int>> seen;
        for (const auto& e : monomials) {
            if (static_cast<int>(e.size()) != source_dim + 1)
                throw DataError("exponent vector length must be source_dim + 1");
            int total = 0;
            for (int k : e) {
                if (k < 0)
                    throw DataError("negative exponent in monomial system");
                total += k;
            }
            if (degree < 0)
                degree = total;
            else if (total != degree)
                throw DataError("monomials must share one total degree");
            if (!seen.insert(e).second)
                throw DataError("duplicate monomial in system");
        }
    }

    int degree() const {
        int d = 0;
        for (int k : monomials[0])
            d += k;
        return d;
    }
};

namespace detail {

inline Rational power(const Rational& base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

inline Rational eval_monomial(const std::vector<int>& expo, const QVec& p) {
    Rational v(1);
    for (std::size_t i = 0; i < expo.size(); ++i) {
        if (expo[i] == 0)
            continue;
        if (p[i].is_zero())
            return Rational(0);
        v *= power(p[i], expo[i]);
    }
    return v;
}

/// Value at p of the partial derivative of x^expo prescribed by the
/// multi-index order (order[i] differentiations in variable i).
inline Rational eval_derivative(const std::vector<int>& expo,
                                const std::vector<int>& order, const QVec& p) {
    Rational coeff(1);
    std::vector<int> rem = expo;
    for (std::size_t i = 0; i < expo.size(); ++i) {
        if (order[i] > expo[i])
            return Rational(0);
        for (int k = 0; k < order[i]; ++k)
            coeff *= Rational(Int(rem[i]));
        rem[i] -= order[i];
    }
    return coeff * eval_monomial(rem, p);
}

inline void check_point(const MonomialSystem& s, const QVec& p) {
    if (static_cast<int>(p.size()) != s.source_dim + 1)
        throw DataError("point length must be source_dim + 1");
    if (is_zero(p))
        throw DataError("the zero vector is not a projective point");
}

} // namespace detail

/// Exact image of a projective point, normalized to a canonical primitive
/// integer representative (first nonzero coordinate positive). Returns
/// std::nullopt when every monomial vanishes, i.e. at a base point.
inline std::optional<ZVec> evaluate(const MonomialSystem& s, const QVec& p) {
    detail::check_point(s, p);
    QVec image(s.monomials.size());
    for (std::size_t i = 0; i < s.monomials.size(); ++i)
        image[i] = detail::eval_monomial(s.monomials[i], p);
    if (is_zero(image))
        return std::nullopt;
    ZVec w = primitive(image);
    for (const Int& x : w) {
        if (x == 0)
            continue;
        if (x < 0)
            w = negated(w);
        break;
    }
    return w;
}

/// Jacobian of the monomial list at p, one row per monomial, computed
/// symbolically from the exponent vectors.
inline RatMatrix jacobian(const MonomialSystem& s, const QVec& p) {
    detail::check_point(s, p);
    RatMatrix j(static_cast<int>(s.monomials.size()), s.source_dim + 1);
    for (std::size_t i = 0; i < s.monomials.size(); ++i)
        for (int v = 0; v <= s.source_dim; ++v) {
            std::vector<int> order(s.source_dim + 1, 0);
            order[v] = 1;
            j.at(static_cast<int>(i), v) = detail::eval_derivative(s.monomials[i], order, p);
        }
    return j;
}

/// Projective dimension of the image near the image of p: the exact rank of
/// the Jacobian at p, minus one. Rejects base points.
inline int image_dimension(const MonomialSystem& s, const QVec& p) {
    if (!evaluate(s, p))
        throw DataError("image dimension undefined at a base point");
    return rank(jacobian(s, p)) - 1;
}

/// True when every monomial of the system vanishes at p to order at least k,
/// i.e. all partial derivatives of order < k vanish there. k = 0 is vacuous.
inline bool vanishes_to_order(const MonomialSystem& s, const QVec& p, int k) {
    detail::check_point(s, p);
    if (k <= 0)
        return true;
    // Enumerate multi-indices with |order| <= k-1.
    std::vector<int> order(s.source_dim + 1, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> bool {
        if (pos == s.source_dim + 1) {
            for (const auto& mono : s.monomials)
                if (!detail::eval_derivative(mono, order, p).is_zero())
                    return false;
            return true;
        }
        for (int take = 0; take <= remaining; ++take) {
            order[pos] = take;
            if (!self(self, pos + 1, remaining - take))
                return false;
        }
        order[pos] = 0;
        return true;
    };
    return rec(rec, 0, k - 1);
}

/// The quadrics of P^3 through the two coordinate points [1:0:0:0] and
/// [0:0:0:1]: xy, xz, xw, y^2, yz, yw, z^2, zw.
inline MonomialSystem quadrics_through_two_points() {
    return MonomialSystem(3, {
        {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
        {0, 2, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1},
        {0, 0, 2, 0}, {0, 0, 1, 1},
    });
}

/// The cubics of P^3 with at least double points at [1:0:0:0] and [0:0:0:1]:
/// xy^2, xz^2, xyz, xyw, xzw, y^3, y^2 z, y^2 w, yz^2, yzw, z^3, z^2 w.
inline MonomialSystem cubics_double_at_two_points() {
    return MonomialSystem(3, {
        {1, 2, 0, 0}, {1, 0, 2, 0}, {1, 1, 1, 0}, {1, 1, 0, 1},
        {1, 0, 1, 1}, {0, 3, 0, 0}, {0, 2, 1, 0}, {0, 2, 0, 1},
        {0, 1, 2, 0}, {0, 1, 1, 1}, {0, 0, 3, 0}, {0, 0, 2, 1},
    });
}

/// Built-in systems addressable by name from the CLI and from files.
inline std::optional<MonomialSystem> builtin_system(const std::string& name) {
    if (name == "box3.alpha" || name == "alpha")
        return quadrics_through_two_points();
    if (name == "box3.beta" || name == "beta")
        return cubics_double_at_two_points();
    return std::nullopt;
}

} // namespace mori
