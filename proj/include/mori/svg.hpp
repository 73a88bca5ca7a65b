#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "mori/chamber.hpp"
#include "mori/lattice.hpp"
#include "mori/linalg.hpp"

namespace mori {

struct PlotOptions {
    /// Affine slice functional: rays are drawn where <slice, x> = 1. Must be
    /// strictly positive on every support generator. Empty selects the
    /// functional taking value 1 on each effective extremal ray, when one
    /// exists.
    QVec slice;
    int width = 800;
    int height = 600;
};

namespace detail {

struct P2 {
    Rational x, y;
};

inline std::string fixed3(const Rational& r) {
    // round(r * 1000) half-up, printed with exactly three decimals.
    Int num = r.num() * 2000 + r.den();
    Int den = r.den() * 2;
    Int m;
    mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    bool neg = m < 0;
    Int a = abs(m);
    Int whole = a / 1000;
    Int frac = a % 1000;
    std::string f = frac.get_str();
    while (f.size() < 3)
        f = "0" + f;
    return (neg ? "-" : "") + whole.get_str() + "." + f;
}

/// Deterministic grayscale ladder for chamber fills.
inline const char* fill_shade(std::size_t i) {
    static const char* shades[] = {"#f4f4f4", "#e4e4e4", "#d4d4d4", "#c4c4c4",
                                   "#ecdcdc", "#dcecdc", "#dcdce8"};
    return shades[i % 7];
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&')
            out += "&amp;";
        else if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else
            out += c;
    }
    return out;
}

/// Counter-clockwise angular order around a strictly interior pivot.
inline void sort_convex(std::vector<P2>& pts, const P2& pivot) {
    auto lower = [&](const P2& p) {
        if (p.y != pivot.y)
            return p.y < pivot.y;
        return p.x < pivot.x;
    };
    std::sort(pts.begin(), pts.end(), [&](const P2& a, const P2& b) {
        bool la = lower(a), lb = lower(b);
        if (la != lb)
            return !la; // upper half first
        Rational cross = (a.x - pivot.x) * (b.y - pivot.y) -
                         (a.y - pivot.y) * (b.x - pivot.x);
        return cross.sign() > 0;
    });
}

} // namespace detail

/// Slice functional taking value 1 on every extremal ray of the model's
/// effective cone, when such a functional exists.
inline QVec default_slice(const VarietyModel& m) {
    const auto& rays = m.eff.extremal_rays();
    RatMatrix rows = RatMatrix::from_int_rows(rays, m.eff.ambient_dim());
    QVec ones(rays.size(), Rational(1));
    auto l = solve(rows, ones);
    if (!l)
        throw DataError("no functional takes value 1 on every effective ray; "
                        "pass an explicit slice");
    return *l;
}

/// Renders the chamber decomposition of a rank-3 model as a two-dimensional
/// cross-section: each ray r is placed at r / <slice, r> on the affine plane
/// <slice, x> = 1, chambers become convex polygons, and every vertex ray is
/// labeled with its class name when one is recorded.
inline std::string plot_mcd_svg(const VarietyModel& m, PlotOptions opt = {}) {
    if (!m.mcd)
        throw DataError("model '" + m.name + "' records no chamber decomposition");
    if (m.divisor_lattice->rank() != 3)
        throw DataError("cross-section plots require a rank-3 lattice; '" + m.name +
                        "' has rank " + std::to_string(m.divisor_lattice->rank()));
    const ChamberFan& fan = *m.mcd;
    QVec slice = opt.slice.empty() ? default_slice(m) : opt.slice;
    if (static_cast<int>(slice.size()) != 3)
        throw DataError("slice functional must have length 3");
    for (const ZVec& g : fan.support.rays())
        if (dot(slice, to_rational(g)).sign() <= 0)
            throw DataError("slice functional must be positive on every support ray");

    // Distinct vertex rays of the fan, canonical order.
    std::vector<ZVec> vertices;
    for (const Chamber& ch : fan.chambers)
        for (const ZVec& r : ch.cone.rays())
            vertices.push_back(r);
    std::sort(vertices.begin(), vertices.end(), lex_less);
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (const ZVec& v : vertices)
        if (dot(slice, to_rational(v)).sign() <= 0)
            throw DataError("slice functional must be positive on every chamber ray");

    // Plane coordinates: an origin on the slice plane and a kernel basis.
    std::vector<ZVec> plane_basis = kernel_basis({primitive(slice)}, 3);
    RatMatrix basis_cols(3, 2);
    for (int i = 0; i < 3; ++i) {
        basis_cols.at(i, 0) = Rational(plane_basis[0][i]);
        basis_cols.at(i, 1) = Rational(plane_basis[1][i]);
    }
    auto slice_point = [&](const ZVec& r) {
        Rational v = dot(slice, to_rational(r));
        QVec p(3);
        for (int i = 0; i < 3; ++i)
            p[i] = Rational(r[i]) / v;
        return p;
    };
    QVec origin = slice_point(vertices[0]);
    auto plane_coords = [&](const ZVec& r) {
        QVec p = slice_point(r);
        QVec rhs(3);
        for (int i = 0; i < 3; ++i)
            rhs[i] = p[i] - origin[i];
        auto ab = solve(basis_cols, rhs);
        if (!ab)
            throw DataError("internal: slice point off the slice plane");
        return detail::P2{(*ab)[0], (*ab)[1]};
    };

    std::vector<detail::P2> vpts;
    vpts.reserve(vertices.size());
    for (const ZVec& v : vertices)
        vpts.push_back(plane_coords(v));

    Rational xmin = vpts[0].x, xmax = vpts[0].x, ymin = vpts[0].y, ymax = vpts[0].y;
    for (const auto& p : vpts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    Rational margin(60);
    Rational w_avail = Rational(opt.width) - margin * 2;
    Rational h_avail = Rational(opt.height) - margin * 2;
    if (w_avail.sign() <= 0 || h_avail.sign() <= 0)
        throw DataError("viewport too small");
    Rational dx = xmax - xmin, dy = ymax - ymin;
    Rational scale(1);
    if (dx.sign() > 0)
        scale = w_avail / dx;
    if (dy.sign() > 0)
        scale = std::min(scale, h_avail / dy);
    Rational offx = (Rational(opt.width) - scale * dx) / 2;
    Rational offy = (Rational(opt.height) - scale * dy) / 2;
    auto viewport = [&](const detail::P2& p) {
        return detail::P2{offx + scale * (p.x - xmin),
                          Rational(opt.height) - (offy + scale * (p.y - ymin))};
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(opt.width) + "\" height=\"" + std::to_string(opt.height) +
           "\" viewBox=\"0 0 " + std::to_string(opt.width) + " " +
           std::to_string(opt.height) + "\">\n";

    for (std::size_t ci = 0; ci < fan.chambers.size(); ++ci) {
        const Chamber& ch = fan.chambers[ci];
        std::vector<detail::P2> poly;
        detail::P2 centroid{Rational(0), Rational(0)};
        for (const ZVec& r : ch.cone.rays()) {
            poly.push_back(plane_coords(r));
            centroid.x += poly.back().x;
            centroid.y += poly.back().y;
        }
        Rational inv(Int(1), Int(static_cast<long>(poly.size())));
        centroid.x *= inv;
        centroid.y *= inv;
        detail::sort_convex(poly, centroid);
        svg += "<polygon points=\"";
        for (std::size_t i = 0; i < poly.size(); ++i) {
            detail::P2 q = viewport(poly[i]);
            if (i)
                svg += " ";
            svg += detail::fixed3(q.x) + "," + detail::fixed3(q.y);
        }
        svg += std::string("\" fill=\"") + detail::fill_shade(ci) +
               "\" stroke=\"#202020\" stroke-width=\"1\"/>\n";
    }

    // Vertex labels: class names where recorded, coordinates otherwise.
    auto label_of = [&](const ZVec& v) -> std::string {
        for (int i = 0; i < 3; ++i) {
            ZVec unit(3, Int(0));
            unit[i] = 1;
            if (v == unit)
                return m.divisor_lattice->basis_labels[i];
        }
        for (const auto& [label, c] : m.named_classes) {
            if (*c.lattice != *m.divisor_lattice || is_zero(c.coords))
                continue;
            if (primitive(c.coords) == v)
                return label;
        }
        return vec_str(v);
    };
    detail::P2 center{Rational(0), Rational(0)};
    for (const auto& p : vpts) {
        center.x += p.x;
        center.y += p.y;
    }
    Rational cinv(Int(1), Int(static_cast<long>(vpts.size())));
    center.x *= cinv;
    center.y *= cinv;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        detail::P2 q = viewport(vpts[i]);
        detail::P2 c = viewport(center);
        Rational ddx = q.x - c.x, ddy = q.y - c.y;
        Rational norm = std::max(ddx.sign() < 0 ? -ddx : ddx,
                                 ddy.sign() < 0 ? -ddy : ddy);
        Rational ox(0), oy(0);
        if (norm.sign() > 0) {
            Rational f = Rational(18) / norm;
            ox = ddx * f;
            oy = ddy * f;
        }
        svg += "<text x=\"" + detail::fixed3(q.x + ox) + "\" y=\"" +
               detail::fixed3(q.y + oy + Rational(4)) +
               "\" font-family=\"sans-serif\" font-size=\"13\" "
               "text-anchor=\"middle\">" +
               detail::xml_escape(label_of(vertices[i])) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace mori
