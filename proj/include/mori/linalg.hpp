#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mori/rational.hpp"

namespace mori {

/// Dense rational matrix, row-major. Small: lattice ranks in scope stay
/// well under 16, so no sparsity or blocking is attempted.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    RatMatrix(int rows, int cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != static_cast<std::size_t>(rows_) * cols_)
            throw DataError("matrix entry count does not match dimensions");
    }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    static RatMatrix from_rows(const std::vector<QVec>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        RatMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw DataError("ragged row list");
            for (int j = 0; j < c; ++j)
                m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static RatMatrix from_int_rows(const std::vector<ZVec>& rows, int cols) {
        RatMatrix m(static_cast<int>(rows.size()), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != cols)
                throw DataError("ragged row list");
            for (int j = 0; j < cols; ++j)
                m.at(static_cast<int>(i), j) = Rational(rows[i][j]);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    QVec row(int i) const {
        QVec r(cols_);
        for (int j = 0; j < cols_; ++j)
            r[j] = at(i, j);
        return r;
    }

    RatMatrix transposed() const {
        RatMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    QVec apply(const QVec& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw DataError("matrix-vector dimension mismatch");
        QVec y(rows_);
        for (int i = 0; i < rows_; ++i) {
            Rational s;
            for (int j = 0; j < cols_; ++j)
                s += at(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    RatMatrix operator*(const RatMatrix& o) const {
        if (cols_ != o.rows_)
            throw DataError("matrix-matrix dimension mismatch");
        RatMatrix p(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero())
                    continue;
                for (int j = 0; j < o.cols_; ++j)
                    p.at(i, j) += at(i, k) * o.at(k, j);
            }
        return p;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

namespace detail {

/// Clears denominators row by row, returning an integer matrix with the same
/// row space (and hence the same rank, kernel and solution behaviour after the
/// right-hand side is scaled alongside).
inline std::vector<ZVec> integer_rows(const RatMatrix& m) {
    std::vector<ZVec> rows(m.rows(), ZVec(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols(); ++j)
            l = lcm(l, m.at(i, j).den());
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& e = m.at(i, j);
            rows[i][j] = e.num() * (l / e.den());
        }
    }
    return rows;
}

/// Bareiss fraction-free elimination on integer rows, in place.
/// Returns the pivot (row, col) positions in elimination order and the sign
/// of the row permutation. Intermediate entries are exact minors, which keeps
/// their growth polynomially bounded.
struct BareissResult {
    std::vector<std::pair<int, int>> pivots;
    int perm_sign = 1;
};

inline BareissResult bareiss(std::vector<ZVec>& m) {
    BareissResult res;
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r) {
            std::swap(m[piv], m[r]);
            res.perm_sign = -res.perm_sign;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        res.pivots.emplace_back(r, c);
        ++r;
    }
    return res;
}

} // namespace detail

/// Rank over the rationals, computed exactly.
inline int rank(const RatMatrix& m) {
    auto rows = detail::integer_rows(m);
    return static_cast<int>(detail::bareiss(rows).pivots.size());
}

inline int rank(const std::vector<ZVec>& int_rows) {
    auto rows = int_rows;
    return static_cast<int>(detail::bareiss(rows).pivots.size());
}

/// Exact determinant of a square matrix.
inline Rational det(const RatMatrix& m) {
    if (!m.is_square())
        throw DataError("determinant of a non-square matrix");
    if (m.rows() == 0)
        return Rational(1);
    // Track the row scalings used to clear denominators.
    Rational scale(1);
    std::vector<ZVec> rows(m.rows(), ZVec(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols(); ++j)
            l = lcm(l, m.at(i, j).den());
        scale *= Rational(Int(1), l);
        for (int j = 0; j < m.cols(); ++j)
            rows[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
    }
    auto res = detail::bareiss(rows);
    if (static_cast<int>(res.pivots.size()) < m.rows())
        return Rational(0);
    auto [pr, pc] = res.pivots.back();
    return Rational(Int(rows[pr][pc] * res.perm_sign)) * scale;
}

/// One exact solution of m.x = b if the system is consistent, std::nullopt
/// otherwise. Free variables are set to zero, so the answer is deterministic.
inline std::optional<QVec> solve(const RatMatrix& m, const QVec& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw DataError("right-hand side length does not match row count");
    int rows = m.rows(), cols = m.cols();
    // Augment before clearing denominators so b is scaled with its row.
    RatMatrix aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, cols) = b[i];
    }
    auto a = detail::integer_rows(aug);
    auto res = detail::bareiss(a);
    // Pivot in the augmented column means an inconsistent row.
    for (auto [r, c] : res.pivots)
        if (c == cols)
            return std::nullopt;
    int used = static_cast<int>(res.pivots.size());
    for (int i = used; i < rows; ++i)
        if (a[i][cols] != 0)
            return std::nullopt;
    QVec x(cols, Rational(0));
    for (int k = used - 1; k >= 0; --k) {
        auto [r, c] = res.pivots[k];
        Rational s(a[r][cols]);
        for (int j = c + 1; j < cols; ++j)
            if (a[r][j] != 0)
                s -= Rational(a[r][j]) * x[j];
        x[c] = s / Rational(a[r][c]);
    }
    return x;
}

/// Exact inverse, or std::nullopt when singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (!m.is_square())
        throw DataError("inverse of a non-square matrix");
    int n = m.rows();
    RatMatrix inv(n, n);
    for (int col = 0; col < n; ++col) {
        QVec e(n, Rational(0));
        e[col] = 1;
        auto x = solve(m, e);
        if (!x)
            return std::nullopt;
        // A consistent solve on every unit vector plus square shape is not
        // yet invertibility; verify rank via the determinant once.
        for (int i = 0; i < n; ++i)
            inv.at(i, col) = (*x)[i];
    }
    if (det(m).is_zero())
        return std::nullopt;
    return inv;
}

/// The unique positive scalar multiple of v with coprime integer entries.
/// Rejects the zero vector.
inline ZVec primitive(const QVec& v) {
    if (is_zero(v))
        throw DataError("primitive representative of the zero vector");
    Int l = 1;
    for (const Rational& x : v)
        l = lcm(l, x.den());
    ZVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = v[i].num() * (l / v[i].den());
    Int g = 0;
    for (const Int& x : w)
        g = gcd(g, x);
    for (Int& x : w)
        x /= g;
    return w;
}

inline ZVec primitive(const ZVec& v) {
    return primitive(to_rational(v));
}

/// Reduced row echelon basis of the row space, with every row scaled to a
/// primitive integer vector whose leading entry is positive. Canonical: any
/// two generating sets of the same subspace produce identical output.
inline std::vector<ZVec> rref_basis(const std::vector<ZVec>& vectors, int dim) {
    std::vector<QVec> rows;
    for (const ZVec& v : vectors) {
        if (static_cast<int>(v.size()) != dim)
            throw DataError("vector length does not match dimension");
        if (!is_zero(v))
            rows.push_back(to_rational(v));
    }
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < dim && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero())
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[r]);
        Rational inv = Rational(1) / rows[r][c];
        for (int j = 0; j < dim; ++j)
            rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero())
                continue;
            Rational f = rows[i][c];
            for (int j = 0; j < dim; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<ZVec> out;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        out.push_back(primitive(rows[i]));
    return out;
}

/// Canonical primitive basis of the kernel {x : rows.x = 0}, ordered by free
/// column. An empty row list yields the standard basis.
inline std::vector<ZVec> kernel_basis(const std::vector<ZVec>& rows, int dim) {
    std::vector<ZVec> rref = rref_basis(rows, dim);
    std::vector<int> pivot_of_col(dim, -1);
    for (std::size_t i = 0; i < rref.size(); ++i) {
        int c = 0;
        while (rref[i][c] == 0)
            ++c;
        pivot_of_col[c] = static_cast<int>(i);
    }
    std::vector<ZVec> out;
    for (int c = 0; c < dim; ++c) {
        if (pivot_of_col[c] >= 0)
            continue;
        QVec v(dim, Rational(0));
        v[c] = 1;
        for (int j = 0; j < dim; ++j) {
            int pi = pivot_of_col[j];
            if (pi < 0)
                continue;
            // rref row pi has primitive integer entries; leading entry at j.
            const ZVec& row = rref[pi];
            if (row[c] != 0)
                v[j] = Rational(-row[c], row[j]);
        }
        out.push_back(primitive(v));
    }
    return out;
}

} // namespace mori
