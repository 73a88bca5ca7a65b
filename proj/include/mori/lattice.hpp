#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mori/cone.hpp"
#include "mori/linalg.hpp"
#include "mori/rational.hpp"

namespace mori {

/// A named free lattice: either a divisor class lattice N^1 or a curve class
/// lattice N_1. Identity is by content (name and basis labels).
struct Lattice {
    std::string name;
    std::vector<std::string> basis_labels;

    Lattice() = default;
    Lattice(std::string n, std::vector<std::string> labels)
        : name(std::move(n)), basis_labels(std::move(labels)) {
        std::vector<std::string> sorted = basis_labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DataError("lattice basis labels must be distinct");
    }

    int rank() const { return static_cast<int>(basis_labels.size()); }

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.name == b.name && a.basis_labels == b.basis_labels;
    }
    friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Element of a named lattice with rational coordinates. Q-coefficients are
/// allowed throughout: fractional classes are legitimate bookkeeping for
/// divisors that only have a Cartier multiple.
struct ClassVector {
    LatticePtr lattice;
    QVec coords;

    ClassVector() = default;
    ClassVector(LatticePtr lat, QVec c) : lattice(std::move(lat)), coords(std::move(c)) {
        if (!lattice || static_cast<int>(coords.size()) != lattice->rank())
            throw DataError("class coordinate length does not match lattice rank");
    }
};

inline ClassVector operator+(const ClassVector& a, const ClassVector& b) {
    if (*a.lattice != *b.lattice)
        throw DataError("class addition across different lattices");
    QVec c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coords[i] + b.coords[i];
    return {a.lattice, std::move(c)};
}

inline ClassVector operator*(const Rational& t, const ClassVector& x) {
    QVec c(x.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = t * x.coords[i];
    return {x.lattice, std::move(c)};
}

/// The intersection pairing N^1 x N_1 -> Z as a stored bilinear table.
/// matrix[i][j] is the pairing of the i-th divisor basis class with the j-th
/// curve basis class. Must be non-degenerate.
struct Pairing {
    LatticePtr divisor_lattice;
    LatticePtr curve_lattice;
    RatMatrix matrix;

    Pairing() = default;
    Pairing(LatticePtr div, LatticePtr cur, RatMatrix m)
        : divisor_lattice(std::move(div)), curve_lattice(std::move(cur)),
          matrix(std::move(m)) {
        if (!matrix.is_square() || matrix.rows() != divisor_lattice->rank() ||
            curve_lattice->rank() != divisor_lattice->rank())
            throw DataError("pairing matrix dimensions do not match lattice ranks");
        if (det(matrix).is_zero())
            throw DataError("pairing must be non-degenerate");
    }
};

/// Linear map between lattices; matrix is target-rank x source-rank and acts
/// on coordinates. Pullbacks along embeddings live here.
struct LatticeMap {
    LatticePtr source;
    LatticePtr target;
    RatMatrix matrix;

    LatticeMap() = default;
    LatticeMap(LatticePtr src, LatticePtr tgt, RatMatrix m)
        : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
        if (matrix.rows() != target->rank() || matrix.cols() != source->rank())
            throw DataError("lattice map matrix dimensions do not match ranks");
    }
};

inline ClassVector apply_map(const LatticeMap& f, const ClassVector& x) {
    if (*x.lattice != *f.source)
        throw DataError("apply_map: class is not in the source lattice");
    return {f.target, f.matrix.apply(x.coords)};
}

/// Generator-wise extension of a lattice map to cones.
inline Cone apply_map(const LatticeMap& f, const Cone& c) {
    if (c.ambient_dim() != f.source->rank())
        throw DataError("apply_map: cone is not in the source lattice");
    std::vector<QVec> gens;
    for (const ZVec& g : c.generating_set())
        gens.push_back(f.matrix.apply(to_rational(g)));
    return Cone::from_generators(f.target->rank(), gens);
}

struct Chamber {
    std::string label;
    Cone cone;
    std::string description;
};

/// Labeled collection of maximal cones decomposing a support cone.
struct ChamberFan {
    Cone support;
    std::vector<Chamber> chambers;
};

/// The recorded birational data of a variety: lattices, pairing, named
/// classes, the cones of divisors and curves, and optionally a chamber
/// decomposition of the effective cone.
struct VarietyModel {
    std::string name;
    LatticePtr divisor_lattice;
    LatticePtr curve_lattice;          // may be null
    std::optional<Pairing> pairing;
    /// Insertion-ordered: serialization preserves the declared order.
    std::vector<std::pair<std::string, ClassVector>> named_classes;
    Cone eff;
    Cone nef;
    std::optional<Cone> mov;
    std::optional<Cone> ne;
    std::optional<ChamberFan> mcd;

    const ClassVector* find_class(const std::string& label) const {
        for (const auto& [l, v] : named_classes)
            if (l == label)
                return &v;
        return nullptr;
    }

    void add_class(const std::string& label, ClassVector v) {
        if (find_class(label))
            throw DataError("duplicate named class '" + label + "'");
        named_classes.emplace_back(label, std::move(v));
    }
};

/// Exact intersection number d . c = d^T P c.
inline Rational intersection_number(const VarietyModel& m, const ClassVector& d,
                                    const ClassVector& c) {
    if (!m.pairing)
        throw DataError("model '" + m.name + "' records no intersection pairing");
    if (*d.lattice != *m.pairing->divisor_lattice)
        throw DataError("intersection_number: first argument is not a divisor class");
    if (*c.lattice != *m.pairing->curve_lattice)
        throw DataError("intersection_number: second argument is not a curve class");
    return dot(d.coords, m.pairing->matrix.apply(c.coords));
}

namespace detail {

/// Longest-match label lookup table for class expressions. Labels may
/// contain '+' and other suffix characters ("E_1+"), so the tokenizer always
/// prefers the longest known label at the current position.
class LabelTable {
public:
    struct Entry {
        LatticePtr lattice;
        QVec coords;
    };

    void add(const std::string& label, LatticePtr lattice, QVec coords) {
        entries_[label] = Entry{std::move(lattice), std::move(coords)};
    }

    /// Longest entry that is a prefix of s starting at pos, or empty string.
    std::string match(const std::string& s, std::size_t pos) const {
        std::string best;
        for (const auto& [label, e] : entries_) {
            (void)e;
            if (label.size() > best.size() && s.compare(pos, label.size(), label) == 0)
                best = label;
        }
        return best;
    }

    const Entry& get(const std::string& label) const { return entries_.at(label); }

private:
    std::map<std::string, Entry> entries_;
};

inline LabelTable label_table(const VarietyModel& m) {
    LabelTable t;
    auto add_basis = [&](const LatticePtr& lat) {
        if (!lat)
            return;
        for (int i = 0; i < lat->rank(); ++i) {
            QVec unit(lat->rank(), Rational(0));
            unit[i] = 1;
            t.add(lat->basis_labels[i], lat, std::move(unit));
        }
    };
    add_basis(m.divisor_lattice);
    add_basis(m.curve_lattice);
    for (const auto& [label, v] : m.named_classes)
        t.add(label, v.lattice, v.coords);
    return t;
}

} // namespace detail

/// Evaluates a signed rational combination of basis and named-class labels,
/// e.g. "3H-2E_p-2E_q" or "1/2H_pq". Whitespace-insensitive. All labels in
/// one expression must live in the same lattice; the bare expression "0"
/// denotes the zero divisor class.
inline ClassVector class_of(const VarietyModel& m, const std::string& expr) {
    detail::LabelTable table = detail::label_table(m);
    std::string s;
    for (char ch : expr)
        if (ch != ' ' && ch != '\t')
            s += ch;
    if (s.empty())
        throw ParseError("empty class expression");

    LatticePtr lattice;
    QVec coords;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        Rational sign(1);
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-')
                sign = -1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in class expression at '" +
                             s.substr(pos) + "'");
        }
        first = false;
        // Optional rational coefficient.
        Rational coeff(1);
        bool have_coeff = false;
        std::size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                                  (s[pos] == '/' && pos > start)))
            ++pos;
        if (pos > start) {
            coeff = Rational::parse(s.substr(start, pos - start));
            have_coeff = true;
        }
        if (pos < s.size() && s[pos] == '*')
            ++pos;
        std::string label = table.match(s, pos);
        if (label.empty()) {
            if (have_coeff && coeff.is_zero() && (pos == s.size() || s[pos] == '+' || s[pos] == '-'))
                continue; // bare zero term
            if (pos == s.size() && have_coeff)
                throw ParseError("numeric term without a class label in expression '" + expr + "'");
            throw ParseError("unknown label in class expression at '" + s.substr(pos) + "'");
        }
        pos += label.size();
        const auto& entry = table.get(label);
        if (!lattice)
            lattice = entry.lattice;
        else if (*lattice != *entry.lattice)
            throw DataError("class expression mixes lattices: '" + expr + "'");
        if (coords.empty())
            coords.assign(lattice->rank(), Rational(0));
        for (int i = 0; i < lattice->rank(); ++i)
            coords[i] += sign * coeff * entry.coords[i];
    }
    if (!lattice) {
        // Only zero terms appeared; default to the divisor lattice.
        lattice = m.divisor_lattice;
        coords.assign(lattice->rank(), Rational(0));
    }
    return {lattice, std::move(coords)};
}

/// Consistency checks every constructed or imported model must satisfy:
/// the nef generators lie in Mov (when recorded), the Mov generators lie in
/// Eff, and when both a pairing and a Mori cone are present the nef cone is
/// the pairing-dual of the Mori cone.
inline void validate_model(const VarietyModel& m) {
    if (!m.divisor_lattice)
        throw DataError("model without a divisor lattice");
    int r = m.divisor_lattice->rank();
    if (m.eff.ambient_dim() != r || m.nef.ambient_dim() != r)
        throw DataError("cone ambient dimension does not match lattice rank");
    const Cone& step = m.mov ? *m.mov : m.eff;
    for (const ZVec& g : m.nef.generating_set())
        if (!step.contains(g).inside())
            throw DataError("model '" + m.name + "': nef generator outside " +
                            (m.mov ? "movable" : "effective") + " cone");
    if (m.mov)
        for (const ZVec& g : m.mov->generating_set())
            if (!m.eff.contains(g).inside())
                throw DataError("model '" + m.name + "': movable generator outside effective cone");
    if (m.pairing && m.ne) {
        if (!cone_equal(m.nef, dual_under_pairing(*m.ne, m.pairing->matrix)))
            throw DataError("model '" + m.name +
                            "': nef cone is not the pairing-dual of the curve cone");
    }
    if (m.mcd) {
        if (m.mcd->support.ambient_dim() != r)
            throw DataError("model '" + m.name + "': chamber support dimension mismatch");
        if (!cone_equal(m.mcd->support, m.eff))
            throw DataError("model '" + m.name +
                            "': chamber decomposition must be supported on the effective cone");
        for (const Chamber& ch : m.mcd->chambers)
            for (const ZVec& g : ch.cone.rays())
                if (!m.mcd->support.contains(g).inside())
                    throw DataError("model '" + m.name + "': chamber '" + ch.label +
                                    "' leaves the effective cone");
    }
}

} // namespace mori
