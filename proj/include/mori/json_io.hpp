#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mori/chamber.hpp"
#include "mori/lattice.hpp"
#include "mori/lefschetz.hpp"
#include "mori/monomial.hpp"

namespace mori {

/// Keys keep insertion order so exported files are byte-stable.
using OrderedJson = nlohmann::ordered_json;

namespace jsonio {

/// Canonical pretty form: two-space indentation, but arrays of scalars stay
/// on one line so coordinate vectors read naturally.
inline void pretty_to(const OrderedJson& j, std::string& out, int depth) {
    auto pad = [&](int d) { out.append(static_cast<std::size_t>(d) * 2, ' '); };
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            pad(depth + 1);
            out += OrderedJson(key).dump();
            out += ": ";
            pretty_to(value, out, depth + 1);
            if (++i < j.size())
                out += ",";
            out += "\n";
        }
        pad(depth);
        out += "}";
        return;
    }
    if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        bool scalars_only = true;
        for (const auto& e : j)
            if (e.is_object() || e.is_array()) {
                scalars_only = false;
                break;
            }
        if (scalars_only) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i)
                    out += ", ";
                out += j[i].dump();
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            pad(depth + 1);
            pretty_to(j[i], out, depth + 1);
            if (i + 1 < j.size())
                out += ",";
            out += "\n";
        }
        pad(depth);
        out += "]";
        return;
    }
    out += j.dump();
}

} // namespace jsonio

/// Serializes with the canonical layout used by every file this library
/// writes; ends with a newline.
inline std::string pretty(const OrderedJson& j) {
    std::string out;
    jsonio::pretty_to(j, out, 0);
    out += "\n";
    return out;
}

namespace jsonio {

inline OrderedJson qvec_json(const QVec& v) {
    OrderedJson a = OrderedJson::array();
    for (const Rational& x : v)
        a.push_back(x.str());
    return a;
}

inline OrderedJson zvec_json(const ZVec& v) {
    return qvec_json(to_rational(v));
}

inline QVec qvec_parse(const OrderedJson& a, const std::string& what) {
    if (!a.is_array())
        throw ParseError(what + ": expected an array of rationals");
    QVec v;
    for (const auto& e : a) {
        if (!e.is_string())
            throw ParseError(what + ": rationals are serialized as strings");
        v.push_back(Rational::parse(e.get<std::string>()));
    }
    return v;
}

inline std::vector<QVec> qrows_parse(const OrderedJson& a, const std::string& what) {
    if (!a.is_array())
        throw ParseError(what + ": expected an array of vectors");
    std::vector<QVec> rows;
    for (const auto& e : a)
        rows.push_back(qvec_parse(e, what));
    return rows;
}

inline OrderedJson cone_json(const Cone& c) {
    OrderedJson j;
    j["generators"] = OrderedJson::array();
    for (const ZVec& r : c.rays())
        j["generators"].push_back(zvec_json(r));
    j["facets"] = OrderedJson::array();
    for (const ZVec& f : c.facets())
        j["facets"].push_back(zvec_json(f));
    j["lineality"] = OrderedJson::array();
    for (const ZVec& l : c.lineality())
        j["lineality"].push_back(zvec_json(l));
    if (!c.span_eqs().empty()) {
        j["equations"] = OrderedJson::array();
        for (const ZVec& e : c.span_eqs())
            j["equations"].push_back(zvec_json(e));
    }
    return j;
}

/// Rebuilds a cone from its serialized form. Facets are never trusted:
/// the double description runs again on generators and lineality.
inline Cone cone_parse(const OrderedJson& j, int dim, const std::string& what) {
    if (!j.is_object() || !j.contains("generators"))
        throw ParseError(what + ": cone object needs a 'generators' array");
    std::vector<QVec> gens = qrows_parse(j.at("generators"), what + ".generators");
    if (j.contains("lineality"))
        for (const QVec& l : qrows_parse(j.at("lineality"), what + ".lineality")) {
            gens.push_back(l);
            QVec neg(l.size());
            for (std::size_t i = 0; i < l.size(); ++i)
                neg[i] = -l[i];
            gens.push_back(neg);
        }
    for (const QVec& g : gens)
        if (static_cast<int>(g.size()) != dim)
            throw ParseError(what + ": generator length does not match rank");
    return Cone::from_generators(dim, gens);
}

} // namespace jsonio

inline OrderedJson model_to_json(const VarietyModel& m) {
    OrderedJson j;
    j["name"] = m.name;
    j["divisor_basis"] = m.divisor_lattice->basis_labels;
    if (m.curve_lattice)
        j["curve_basis"] = m.curve_lattice->basis_labels;
    if (m.pairing) {
        OrderedJson rows = OrderedJson::array();
        for (int i = 0; i < m.pairing->matrix.rows(); ++i)
            rows.push_back(jsonio::qvec_json(m.pairing->matrix.row(i)));
        j["pairing"] = std::move(rows);
    }
    OrderedJson classes = OrderedJson::object();
    OrderedJson curve_classes = OrderedJson::object();
    for (const auto& [label, v] : m.named_classes) {
        if (*v.lattice == *m.divisor_lattice)
            classes[label] = jsonio::qvec_json(v.coords);
        else
            curve_classes[label] = jsonio::qvec_json(v.coords);
    }
    j["classes"] = std::move(classes);
    if (!curve_classes.empty())
        j["curve_classes"] = std::move(curve_classes);
    OrderedJson cones = OrderedJson::object();
    cones["eff"] = jsonio::cone_json(m.eff);
    cones["nef"] = jsonio::cone_json(m.nef);
    if (m.mov)
        cones["mov"] = jsonio::cone_json(*m.mov);
    if (m.ne)
        cones["ne"] = jsonio::cone_json(*m.ne);
    j["cones"] = std::move(cones);
    if (m.mcd) {
        OrderedJson chambers = OrderedJson::array();
        for (const Chamber& ch : m.mcd->chambers) {
            OrderedJson cj;
            cj["label"] = ch.label;
            cj["generators"] = jsonio::cone_json(ch.cone)["generators"];
            if (!ch.description.empty())
                cj["description"] = ch.description;
            chambers.push_back(std::move(cj));
        }
        j["mcd"] = OrderedJson{{"chambers", std::move(chambers)}};
    }
    return j;
}

/// Canonical textual form: two-space indentation, trailing newline. This is
/// the byte-exact format of the shipped model files.
inline std::string model_to_string(const VarietyModel& m) {
    return pretty(model_to_json(m));
}

inline VarietyModel model_from_json(const OrderedJson& j) {
    if (!j.is_object())
        throw ParseError("model: expected a JSON object");
    VarietyModel m;
    try {
        m.name = j.at("name").get<std::string>();
        std::vector<std::string> dlabels =
            j.at("divisor_basis").get<std::vector<std::string>>();
        m.divisor_lattice = std::make_shared<Lattice>("N1(" + m.name + ")", dlabels);
        if (j.contains("curve_basis")) {
            std::vector<std::string> clabels =
                j.at("curve_basis").get<std::vector<std::string>>();
            m.curve_lattice = std::make_shared<Lattice>("N_1(" + m.name + ")", clabels);
        }
        int rank = m.divisor_lattice->rank();
        if (j.contains("pairing")) {
            if (!m.curve_lattice)
                throw ParseError("model '" + m.name + "': pairing without a curve basis");
            std::vector<QVec> rows = jsonio::qrows_parse(j.at("pairing"), "pairing");
            if (static_cast<int>(rows.size()) != rank)
                throw ParseError("model '" + m.name + "': pairing row count != rank");
            m.pairing = Pairing(m.divisor_lattice, m.curve_lattice,
                                RatMatrix::from_rows(rows));
        }
        if (j.contains("classes"))
            for (const auto& [label, coords] : j.at("classes").items())
                m.add_class(label, ClassVector(m.divisor_lattice,
                                               jsonio::qvec_parse(coords, "classes." + label)));
        if (j.contains("curve_classes")) {
            if (!m.curve_lattice)
                throw ParseError("model '" + m.name + "': curve classes without a curve basis");
            for (const auto& [label, coords] : j.at("curve_classes").items())
                m.add_class(label,
                            ClassVector(m.curve_lattice,
                                        jsonio::qvec_parse(coords, "curve_classes." + label)));
        }
        const OrderedJson& cones = j.at("cones");
        m.eff = jsonio::cone_parse(cones.at("eff"), rank, "cones.eff");
        m.nef = jsonio::cone_parse(cones.at("nef"), rank, "cones.nef");
        if (cones.contains("mov"))
            m.mov = jsonio::cone_parse(cones.at("mov"), rank, "cones.mov");
        if (cones.contains("ne")) {
            int crank = m.curve_lattice ? m.curve_lattice->rank() : rank;
            m.ne = jsonio::cone_parse(cones.at("ne"), crank, "cones.ne");
        }
        if (j.contains("mcd")) {
            ChamberFan fan;
            fan.support = m.eff;
            for (const auto& cj : j.at("mcd").at("chambers")) {
                Chamber ch;
                ch.label = cj.at("label").get<std::string>();
                ch.cone = jsonio::cone_parse(cj, rank, "mcd chamber '" + ch.label + "'");
                if (cj.contains("description"))
                    ch.description = cj.at("description").get<std::string>();
                fan.chambers.push_back(std::move(ch));
            }
            m.mcd = std::move(fan);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed model JSON: ") + e.what());
    }
    validate_model(m);
    return m;
}

inline VarietyModel model_from_string(const std::string& text) {
    OrderedJson j = OrderedJson::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("model file is not valid JSON");
    return model_from_json(j);
}

/// Standalone cone files for the CLI: ambient_dim plus the cone object.
inline Cone cone_from_string(const std::string& text) {
    OrderedJson j = OrderedJson::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("cone file is not valid JSON");
    try {
        int dim = j.at("ambient_dim").get<int>();
        if (dim < 0)
            throw ParseError("cone file: negative ambient dimension");
        return jsonio::cone_parse(j, dim, "cone");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed cone JSON: ") + e.what());
    }
}

inline std::string cone_to_string(const Cone& c) {
    OrderedJson j;
    j["ambient_dim"] = c.ambient_dim();
    OrderedJson body = jsonio::cone_json(c);
    for (auto& [k, v] : body.items())
        j[k] = v;
    return pretty(j);
}

inline MonomialSystem monomial_system_from_string(const std::string& text) {
    OrderedJson j = OrderedJson::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("monomial system file is not valid JSON");
    try {
        int src = j.at("source_dim").get<int>();
        auto monos = j.at("monomials").get<std::vector<std::vector<int>>>();
        return MonomialSystem(src, std::move(monos));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed monomial system JSON: ") + e.what());
    }
}

/// Lattice map files: { "matrix": [[ "p/q", ... ], ...] }.
inline RatMatrix matrix_from_string(const std::string& text) {
    OrderedJson j = OrderedJson::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("map file is not valid JSON");
    try {
        std::vector<QVec> rows = jsonio::qrows_parse(j.at("matrix"), "matrix");
        if (rows.empty())
            throw ParseError("map file: empty matrix");
        return RatMatrix::from_rows(rows);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed map JSON: ") + e.what());
    }
}

inline OrderedJson report_to_json(const EquivalenceReport& r) {
    OrderedJson j;
    j["map_is_isomorphism"] = r.map_is_isomorphism;
    j["map_is_integral"] = r.map_is_integral;
    j["eff_match"] = to_string(r.eff_match);
    j["mov_match"] = to_string(r.mov_match);
    j["nef_match"] = to_string(r.nef_match);
    j["mcd_match"] = to_string(r.mcd_match);
    OrderedJson matches = OrderedJson::array();
    for (const auto& [a, s] : r.chamber_matches)
        matches.push_back(OrderedJson{{"ambient", a}, {"sub", s}});
    j["chamber_matches"] = std::move(matches);
    j["unmatched_ambient"] = r.unmatched_ambient;
    j["unmatched_sub"] = r.unmatched_sub;
    j["verdict"] = to_string(r.verdict);
    return j;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write file '" + path + "'");
    out << content;
}

} // namespace mori
