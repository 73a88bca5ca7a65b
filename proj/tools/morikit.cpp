// morikit: command-line frontend for the mori library.
//
// Subcommands: model, cone, mcd, twin, mono, plot. All output is
// deterministic and byte-stable for a fixed invocation.
//
// Exit codes: 0 success/pass, 1 check failed, 2 partial equivalence,
// 64 usage error, 65 bad input data.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mori/chamber.hpp"
#include "mori/cone.hpp"
#include "mori/json_io.hpp"
#include "mori/lattice.hpp"
#include "mori/lefschetz.hpp"
#include "mori/monomial.hpp"
#include "mori/svg.hpp"
#include "mori/zoo.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitPartial = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadData = 65;

/// Wrong invocation shape: unknown command or flags, missing arguments.
/// Distinct from mori::Error so the exit-code contract stays honest.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

const char* kUsage = R"(usage: morikit <command> [arguments]

commands:
  model list                               list the bundled models
  model show <name>                        print bases, pairing, classes, cones
  model export <name> [-o FILE]            write the model as canonical JSON
  model import <FILE> [-o FILE]            validate a model file, re-emit it normalized

  cone rays|dual|contains|intersect|join   cone queries
       --model NAME|FILE --cone eff|nef|mov|ne   select a model cone
       --generators FILE                         or load one from a cone file
       --cone2 ... | --generators2 FILE          second operand (intersect/join)
       --class "EXPR"                            point for contains (a coordinate
                                                 list when used with --generators)

  mcd verify <model>                       check the chamber decomposition
  mcd locate <model> --class "EXPR"        chambers containing a divisor class
  mcd walls <model>                        internal walls and their chambers

  twin check <ambient> <sub> [--map FILE]  divisorial-equivalence / twin check
                                           (default map: identity on the bases)

  mono eval|dim|vanish --system NAME|FILE --point "r:r:..." [--order K]
                                           bundled systems: box3.alpha, box3.beta

  plot mcd <model> -o FILE.svg [--slice "r,r,r"] [--width W] [--height H]
                                           2D cross-section of the decomposition

Class expressions are signed rational combinations of basis or named-class
labels, e.g. "3H-2E_p-2E_q"; whitespace is ignored.
)";

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> options;
};

const std::set<std::string> kValueOptions = {
    "--model", "--cone", "--generators", "--cone2", "--generators2",
    "--class", "--map", "--system", "--point", "--order", "--slice",
    "--width", "--height", "-o"};

Args parse_args(const std::vector<std::string>& argv) {
    Args a;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        const std::string& tok = argv[i];
        if (tok.rfind("-", 0) == 0 && tok != "-") {
            std::string key = tok;
            std::string value;
            std::size_t eq = tok.find('=');
            bool has_inline = eq != std::string::npos;
            if (has_inline) {
                key = tok.substr(0, eq);
                value = tok.substr(eq + 1);
            }
            if (!kValueOptions.count(key))
                throw UsageError("unknown option '" + key + "'");
            if (!has_inline) {
                if (i + 1 >= argv.size())
                    throw UsageError("option '" + key + "' needs a value");
                value = argv[++i];
            }
            if (a.options.count(key))
                throw UsageError("duplicate option '" + key + "'");
            a.options[key] = value;
        } else {
            a.positional.push_back(tok);
        }
    }
    return a;
}

std::optional<std::string> opt(const Args& a, const std::string& key) {
    auto it = a.options.find(key);
    if (it == a.options.end())
        return std::nullopt;
    return it->second;
}

int parse_int_option(const Args& a, const std::string& key, int fallback, int min_value) {
    auto v = opt(a, key);
    if (!v)
        return fallback;
    try {
        std::size_t used = 0;
        int n = std::stoi(*v, &used);
        if (used != v->size() || n < min_value)
            throw std::invalid_argument(key);
        return n;
    } catch (const std::exception&) {
        throw UsageError("option '" + key + "' expects an integer >= " +
                         std::to_string(min_value));
    }
}

mori::VarietyModel load_model(const std::string& spec) {
    if (auto m = mori::make_zoo_model(spec))
        return *m;
    if (std::filesystem::exists(spec))
        return mori::model_from_string(mori::read_file(spec));
    throw mori::DataError("unknown model '" + spec + "' (not a bundled name or a file)");
}

const mori::Cone& model_cone(const mori::VarietyModel& m, const std::string& which) {
    if (which == "eff")
        return m.eff;
    if (which == "nef")
        return m.nef;
    if (which == "mov") {
        if (!m.mov)
            throw mori::DataError("model '" + m.name + "' records no movable cone");
        return *m.mov;
    }
    if (which == "ne") {
        if (!m.ne)
            throw mori::DataError("model '" + m.name + "' records no curve cone");
        return *m.ne;
    }
    throw mori::ParseError("--cone expects one of eff, nef, mov, ne");
}

mori::QVec parse_point(const std::string& text) {
    mori::QVec v;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            v.push_back(mori::Rational::parse(cur));
            cur.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || c == ':' || c == ' ' || c == '\t')
            flush();
        else
            cur += c;
    }
    flush();
    if (v.empty())
        throw mori::ParseError("empty coordinate list '" + text + "'");
    return v;
}

void emit(const Args& a, std::ostream& out, const std::string& content) {
    if (auto path = opt(a, "-o"))
        mori::write_file(*path, content);
    else
        out << content;
}

// ---------------------------------------------------------------- model ----

void show_model(const mori::VarietyModel& m, std::ostream& out) {
    out << "model " << m.name << "\n";
    auto labels = [](const std::vector<std::string>& ls) {
        std::string s;
        for (std::size_t i = 0; i < ls.size(); ++i)
            s += (i ? ", " : "") + ls[i];
        return s;
    };
    out << "divisor basis: " << labels(m.divisor_lattice->basis_labels) << "\n";
    if (m.curve_lattice)
        out << "curve basis: " << labels(m.curve_lattice->basis_labels) << "\n";
    if (m.pairing) {
        out << "pairing (divisor . curve):\n";
        for (int i = 0; i < m.pairing->matrix.rows(); ++i) {
            out << "  " << m.divisor_lattice->basis_labels[i] << ":";
            for (int j = 0; j < m.pairing->matrix.cols(); ++j)
                out << " " << m.curve_lattice->basis_labels[j] << "="
                    << m.pairing->matrix.at(i, j).str();
            out << "\n";
        }
    }
    if (!m.named_classes.empty()) {
        out << "classes:\n";
        for (const auto& [label, v] : m.named_classes) {
            out << "  " << label << " = " << mori::vec_str(v.coords);
            if (m.curve_lattice && *v.lattice == *m.curve_lattice)
                out << "  [curve]";
            out << "\n";
        }
    }
    auto print_cone = [&](const std::string& name, const mori::Cone& c) {
        out << "  " << name << " rays:";
        for (const mori::ZVec& r : c.rays())
            out << " " << mori::vec_str(r);
        if (!c.lineality().empty()) {
            out << "  lineality:";
            for (const mori::ZVec& l : c.lineality())
                out << " " << mori::vec_str(l);
        }
        out << "\n";
    };
    out << "cones:\n";
    print_cone("eff", m.eff);
    print_cone("nef", m.nef);
    if (m.mov)
        print_cone("mov", *m.mov);
    if (m.ne)
        print_cone("ne ", *m.ne);
    if (m.mcd) {
        out << "mcd chambers:\n";
        for (const mori::Chamber& ch : m.mcd->chambers) {
            out << "  " << ch.label << ":";
            for (const mori::ZVec& r : ch.cone.rays())
                out << " " << mori::vec_str(r);
            if (!ch.description.empty())
                out << "  -- " << ch.description;
            out << "\n";
        }
    }
}

int cmd_model(const Args& a, std::ostream& out, std::ostream& err) {
    if (a.positional.size() < 2) {
        err << kUsage;
        return kExitUsage;
    }
    const std::string& verb = a.positional[1];
    if (verb == "list") {
        for (const std::string& name : mori::zoo_model_names())
            out << name << "\n";
        return kExitOk;
    }
    if (a.positional.size() != 3) {
        err << kUsage;
        return kExitUsage;
    }
    if (verb == "show") {
        show_model(load_model(a.positional[2]), out);
        return kExitOk;
    }
    if (verb == "export") {
        emit(a, out, mori::model_to_string(load_model(a.positional[2])));
        return kExitOk;
    }
    if (verb == "import") {
        mori::VarietyModel m = mori::model_from_string(mori::read_file(a.positional[2]));
        emit(a, out, mori::model_to_string(m));
        return kExitOk;
    }
    err << kUsage;
    return kExitUsage;
}

// ----------------------------------------------------------------- cone ----

mori::Cone load_cone(const Args& a, const std::string& gen_key,
                     const std::string& cone_key) {
    auto gens = opt(a, gen_key);
    auto which = opt(a, cone_key);
    if (gens && which)
        throw UsageError("give either " + gen_key + " or " + cone_key + ", not both");
    if (gens)
        return mori::cone_from_string(mori::read_file(*gens));
    if (!which)
        throw UsageError("missing " + gen_key + " or " + cone_key);
    auto model_spec = opt(a, "--model");
    if (!model_spec)
        throw UsageError("--cone requires --model");
    return model_cone(load_model(*model_spec), *which);
}

int cmd_cone(const Args& a, std::ostream& out, std::ostream& err) {
    if (a.positional.size() != 2) {
        err << kUsage;
        return kExitUsage;
    }
    const std::string& verb = a.positional[1];
    if (verb == "rays") {
        mori::Cone c = load_cone(a, "--generators", "--cone");
        for (const mori::ZVec& r : c.extremal_rays())
            out << mori::vec_str(r) << "\n";
        return kExitOk;
    }
    if (verb == "dual") {
        mori::Cone c = load_cone(a, "--generators", "--cone");
        out << mori::cone_to_string(c.dual());
        return kExitOk;
    }
    if (verb == "contains") {
        auto expr = opt(a, "--class");
        if (!expr)
            throw UsageError("cone contains requires --class");
        mori::Cone c;
        mori::QVec point;
        if (auto gens = opt(a, "--generators")) {
            // Standalone cone file: the class is a plain coordinate list.
            c = mori::cone_from_string(mori::read_file(*gens));
            point = parse_point(*expr);
        } else {
            auto model_spec = opt(a, "--model");
            if (!model_spec)
                throw UsageError("cone contains requires --model or --generators");
            mori::VarietyModel m = load_model(*model_spec);
            auto which = opt(a, "--cone");
            if (!which)
                throw UsageError("cone contains requires --cone");
            c = model_cone(m, *which);
            point = mori::class_of(m, *expr).coords;
        }
        if (static_cast<int>(point.size()) != c.ambient_dim())
            throw mori::DataError("class lives in a lattice of different rank");
        mori::Membership mem = c.contains(point);
        out << mori::to_string(mem.status);
        if (mem.status == mori::Membership::Status::boundary) {
            out << " (tight facets:";
            for (int idx : mem.tight_facets)
                out << " " << mori::vec_str(c.facets()[idx]);
            out << ")";
        }
        out << "\n";
        return kExitOk;
    }
    if (verb == "intersect" || verb == "join") {
        mori::Cone c1 = load_cone(a, "--generators", "--cone");
        mori::Cone c2 = load_cone(a, "--generators2", "--cone2");
        mori::Cone r = verb == "intersect" ? mori::intersect(c1, c2) : mori::join(c1, c2);
        out << mori::cone_to_string(r);
        return kExitOk;
    }
    err << kUsage;
    return kExitUsage;
}

// ------------------------------------------------------------------ mcd ----

int cmd_mcd(const Args& a, std::ostream& out, std::ostream& err) {
    if (a.positional.size() != 3) {
        err << kUsage;
        return kExitUsage;
    }
    const std::string& verb = a.positional[1];
    mori::VarietyModel m = load_model(a.positional[2]);
    if (!m.mcd)
        throw mori::DataError("model '" + m.name + "' records no chamber decomposition");
    if (verb == "verify") {
        mori::FanReport rep = mori::verify_fan(*m.mcd);
        for (const mori::FanCheck* c :
             {&rep.containment, &rep.disjointness, &rep.wall_matching, &rep.connectivity}) {
            out << c->name << ": " << (c->ok ? "ok" : "FAIL") << "\n";
            for (const std::string& note : c->notes)
                out << "  " << note << "\n";
        }
        out << "verdict: " << (rep.pass() ? "pass" : "fail") << "\n";
        return rep.pass() ? kExitOk : kExitCheckFailed;
    }
    if (verb == "locate") {
        auto expr = opt(a, "--class");
        if (!expr)
            throw UsageError("mcd locate requires --class");
        mori::ClassVector x = mori::class_of(m, *expr);
        std::vector<mori::Located> hits = mori::locate(m, x);
        if (hits.empty()) {
            out << "outside support\n";
            return kExitOk;
        }
        for (const mori::Located& h : hits)
            out << mori::to_string(h.membership.status) << " of chamber " << h.label
                << "\n";
        return kExitOk;
    }
    if (verb == "walls") {
        for (const mori::Wall& w : mori::walls(*m.mcd)) {
            out << "wall";
            for (const mori::ZVec& r : w.cone.rays())
                out << " " << mori::vec_str(r);
            out << " separates " << w.chamber_a << " | " << w.chamber_b << "\n";
        }
        return kExitOk;
    }
    err << kUsage;
    return kExitUsage;
}

// ----------------------------------------------------------------- twin ----

int cmd_twin(const Args& a, std::ostream& out, std::ostream& err) {
    if (a.positional.size() != 4 || a.positional[1] != "check") {
        err << kUsage;
        return kExitUsage;
    }
    mori::VarietyModel ambient = load_model(a.positional[2]);
    mori::VarietyModel sub = load_model(a.positional[3]);
    mori::RatMatrix matrix = mori::RatMatrix::identity(ambient.divisor_lattice->rank());
    if (auto path = opt(a, "--map"))
        matrix = mori::matrix_from_string(mori::read_file(*path));
    if (matrix.rows() != sub.divisor_lattice->rank() ||
        matrix.cols() != ambient.divisor_lattice->rank())
        throw mori::DataError("pullback matrix must be sub-rank x ambient-rank");
    mori::LatticeMap pullback(ambient.divisor_lattice, sub.divisor_lattice, matrix);
    mori::TwinPair pair(std::move(ambient), std::move(sub), std::move(pullback));
    mori::EquivalenceReport rep = pair.ambient.mcd && pair.sub.mcd
                                      ? mori::check_birational_twins(pair)
                                      : mori::check_divisorial_equivalence(pair);
    out << mori::pretty(mori::report_to_json(rep));
    switch (rep.verdict) {
    case mori::Verdict::birational_twins:
    case mori::Verdict::divisorially_equivalent:
        return kExitOk;
    case mori::Verdict::partial:
        return kExitPartial;
    default:
        return kExitCheckFailed;
    }
}

// ----------------------------------------------------------------- mono ----

int cmd_mono(const Args& a, std::ostream& out, std::ostream& err) {
    if (a.positional.size() != 2) {
        err << kUsage;
        return kExitUsage;
    }
    const std::string& verb = a.positional[1];
    auto system_spec = opt(a, "--system");
    auto point_spec = opt(a, "--point");
    if (!system_spec || !point_spec)
        throw UsageError("mono commands require --system and --point");
    mori::MonomialSystem sys = [&]() {
        if (auto s = mori::builtin_system(*system_spec))
            return *s;
        if (std::filesystem::exists(*system_spec))
            return mori::monomial_system_from_string(mori::read_file(*system_spec));
        throw mori::DataError("unknown monomial system '" + *system_spec + "'");
    }();
    mori::QVec p = parse_point(*point_spec);
    if (verb == "eval") {
        auto image = mori::evaluate(sys, p);
        if (!image) {
            out << "base point\n";
            return kExitOk;
        }
        out << "[";
        for (std::size_t i = 0; i < image->size(); ++i)
            out << (i ? ":" : "") << (*image)[i].get_str();
        out << "]\n";
        return kExitOk;
    }
    if (verb == "dim") {
        out << mori::image_dimension(sys, p) << "\n";
        return kExitOk;
    }
    if (verb == "vanish") {
        int order = parse_int_option(a, "--order", 1, 0);
        bool v = mori::vanishes_to_order(sys, p, order);
        out << (v ? "true" : "false") << "\n";
        return v ? kExitOk : kExitCheckFailed;
    }
    err << kUsage;
    return kExitUsage;
}

// ----------------------------------------------------------------- plot ----

int cmd_plot(const Args& a, std::ostream& out, std::ostream& err) {
    (void)out;
    if (a.positional.size() != 3 || a.positional[1] != "mcd") {
        err << kUsage;
        return kExitUsage;
    }
    auto target = opt(a, "-o");
    if (!target) {
        err << "plot mcd requires -o FILE.svg\n";
        return kExitUsage;
    }
    mori::VarietyModel m = load_model(a.positional[2]);
    mori::PlotOptions options;
    options.width = parse_int_option(a, "--width", 800, 64);
    options.height = parse_int_option(a, "--height", 600, 64);
    if (auto s = opt(a, "--slice"))
        options.slice = parse_point(*s);
    mori::write_file(*target, mori::plot_mcd_svg(m, options));
    return kExitOk;
}

} // namespace

namespace morikit {

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    try {
        if (argv.empty() || argv[0] == "--help" || argv[0] == "help") {
            (argv.empty() ? err : out) << kUsage;
            return argv.empty() ? kExitUsage : kExitOk;
        }
        Args args = parse_args(argv);
        if (args.positional.empty()) {
            err << kUsage;
            return kExitUsage;
        }
        const std::string& group = args.positional[0];
        if (group == "model")
            return cmd_model(args, out, err);
        if (group == "cone")
            return cmd_cone(args, out, err);
        if (group == "mcd")
            return cmd_mcd(args, out, err);
        if (group == "twin")
            return cmd_twin(args, out, err);
        if (group == "mono")
            return cmd_mono(args, out, err);
        if (group == "plot")
            return cmd_plot(args, out, err);
        err << "unknown command '" << group << "'\n" << kUsage;
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << kUsage;
        return kExitUsage;
    } catch (const mori::Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadData;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadData;
    }
}

} // namespace morikit

#ifndef MORIKIT_NO_MAIN
int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return morikit::run(args, std::cout, std::cerr);
}
#endif
