#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "mori/error.hpp"

namespace mori {

/// Arbitrary-precision integer. All lattice data is held in these; there is
/// no fixed-width arithmetic anywhere in the library.
using Int = mpz_class;

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator (zero is 0/1). The only scalar type used by the library;
/// no floating point exists anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}        // NOLINT: deliberately implicit
    Rational(long n) : v_(n) {}       // NOLINT
    Rational(const Int& n) : v_(n) {} // NOLINT
    Rational(const Int& num, const Int& den) {
        if (den == 0)
            throw DataError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw DataError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    /// Serialized form: "p/q" in lowest terms, "p" when q = 1 ("3", "-1/2").
    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1)
            s += "/" + v_.get_den().get_str();
        return s;
    }

    /// Parses the serialized form. Accepts an optional sign on either part;
    /// the result is canonicalized. Rejects empty parts and zero denominators.
    static Rational parse(const std::string& text) {
        auto bad = [&]() -> ParseError {
            return ParseError("invalid rational: '" + text + "'");
        };
        std::size_t begin = text.find_first_not_of(" \t");
        std::size_t end = text.find_last_not_of(" \t");
        if (begin == std::string::npos)
            throw bad();
        std::string s = text.substr(begin, end - begin + 1);
        std::size_t slash = s.find('/');
        std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
        std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!valid_int(ns) || !valid_int(ds))
            throw bad();
        // mpz_class rejects a leading '+'.
        if (ns[0] == '+')
            ns.erase(0, 1);
        if (ds[0] == '+')
            ds.erase(0, 1);
        Int num(ns), den(ds);
        if (den == 0)
            throw bad();
        return Rational(num, den);
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    static bool valid_int(const std::string& s) {
        std::size_t i = (s.size() > 0 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
        if (i >= s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    }

    mpq_class v_;
};

/// Dense rational vector.
using QVec = std::vector<Rational>;
/// Dense integer vector (primitive ray representatives, facet normals).
using ZVec = std::vector<Int>;

inline QVec to_rational(const ZVec& v) {
    QVec out;
    out.reserve(v.size());
    for (const Int& x : v)
        out.emplace_back(x);
    return out;
}

inline Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size())
        throw DataError("dot product of vectors of different lengths");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Int dot(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size())
        throw DataError("dot product of vectors of different lengths");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Rational dot(const ZVec& a, const QVec& b) {
    if (a.size() != b.size())
        throw DataError("dot product of vectors of different lengths");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += Rational(a[i]) * b[i];
    return s;
}

inline bool is_zero(const ZVec& v) {
    for (const Int& x : v)
        if (x != 0)
            return false;
    return true;
}

inline bool is_zero(const QVec& v) {
    for (const Rational& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

inline ZVec negated(const ZVec& v) {
    ZVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = -v[i];
    return out;
}

/// Strict lexicographic order on integer vectors; the canonical order used
/// for generator lists throughout.
inline bool lex_less(const ZVec& a, const ZVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0;
    }
    return a.size() < b.size();
}

inline std::string vec_str(const ZVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

inline std::string vec_str(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

} // namespace mori
