#include "rbt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rbt/freealg.hpp"
#include "rbt/gsbasis.hpp"
#include "rbt/random.hpp"
#include "rbt/text.hpp"

namespace rbt::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string opi;
    std::string order = "db";
    std::size_t fuel = kDefaultFuel;
    std::uint64_t seed = 1;
    std::size_t samples = 50;
    std::size_t depth = 2;
    bool trace = false;
    std::string params;
    std::vector<std::string> args;
};

std::map<std::string, mpq_class> parse_params(const std::string& text) {
    std::map<std::string, mpq_class> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("bad --params entry '" + item + "'");
        std::string name = item.substr(0, eq);
        mpq_class q;
        if (q.set_str(item.substr(eq + 1), 10) != 0) throw UsageError("bad value in --params entry '" + item + "'");
        q.canonicalize();
        out[name] = q;
    }
    return out;
}

OpiSpec load_opi(const Options& o) {
    if (o.opi.empty()) throw UsageError("--opi is required");
    const std::string catalog_prefix = "catalog:";
    const std::string inline_prefix = "inline:";
    std::optional<OpiSpec> spec;
    if (o.opi.rfind(catalog_prefix, 0) == 0) {
        try {
            spec = catalog_entry(o.opi.substr(catalog_prefix.size())).spec;
        } catch (const std::out_of_range& e) {
            throw UsageError(e.what());
        }
    } else {
        std::string text;
        std::string name;
        if (o.opi.rfind(inline_prefix, 0) == 0) {
            text = o.opi.substr(inline_prefix.size());
            name = "inline";
        } else {
            std::ifstream in(o.opi);
            if (!in) throw UsageError("cannot read OPI file '" + o.opi + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            text = buf.str();
            name = o.opi;
        }
        try {
            spec = OpiSpec(name, parse_polynomial(text));
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (!o.params.empty()) spec = spec->specialize(parse_params(o.params));
    return *spec;
}

Polynomial load_poly(const Options& o, const std::string& text) {
    Polynomial f = parse_polynomial(text);
    if (!o.params.empty()) f = f.specialize(parse_params(o.params));
    return f;
}

void need_args(const Options& o, std::size_t n, const char* usage) {
    if (o.args.size() != n) throw UsageError(std::string("usage: ") + usage);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const Options& o, std::ostream& out) {
    need_args(o, 0, "check --opi SOURCE");
    OpiSpec phi = load_opi(o);
    RbTypeReport r = rota_baxter_report(phi, o.fuel);
    out << "opi: " << phi.name() << "\n";
    out << "B: " << to_string(phi.b()) << "\n";
    out << "totally-linear: " << yes_no(r.totally_linear) << "\n";
    out << "b-in-rbnf: " << yes_no(r.b_in_rbnf) << "\n";
    out << "compatibility: " << to_string(r.compatibility) << "\n";
    out << "assoc-defect: " << to_string(r.assoc_defect) << "\n";
    out << "assoc-defect-nf: " << (r.assoc_defect_nf ? to_string(*r.assoc_defect_nf) : "(fuel exhausted)") << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
    if (!r.note.empty()) out << "note: " << r.note << "\n";
    return r.verdict == Verdict::RotaBaxterType ? kSuccess : kNegative;
}

void print_trace(const ReductionTrace& trace, std::ostream& out) {
    std::size_t n = 0;
    for (const auto& step : trace) {
        const RedexSite& s = step.site;
        out << "step " << ++n << ": " << to_string(s.monomial) << " at " << to_string(s.context) << " rule ["
            << to_string(s.left) << "][" << to_string(s.right) << "] coeff " << to_string(s.coeff)
            << " -> " << to_string(step.result) << "\n";
    }
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
    need_args(o, 1, "reduce --opi SOURCE POLYNOMIAL");
    OpiSpec phi = load_opi(o);
    Polynomial f = load_poly(o, o.args[0]);
    try {
        NormalForm nf = normal_form(f, phi, o.fuel, o.trace);
        if (o.trace) print_trace(nf.trace, out);
        out << to_string(nf.nf) << "\n";
    } catch (const FuelExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kNegative;
    }
    return kSuccess;
}

int cmd_mul(const Options& o, std::ostream& out, std::ostream& err) {
    need_args(o, 2, "mul --opi SOURCE POLY1 POLY2");
    OpiSpec phi = load_opi(o);
    Polynomial f = load_poly(o, o.args[0]);
    Polynomial g = load_poly(o, o.args[1]);
    try {
        FreeAlgebra alg(phi, o.fuel);
        out << to_string(alg.mul(alg.reduce(f), alg.reduce(g))) << "\n";
    } catch (const NotConvergent& e) {
        err << "error: " << e.what() << "\n";
        return kNegative;
    }
    return kSuccess;
}

int cmd_join(const Options& o, std::ostream& out) {
    need_args(o, 2, "join --opi SOURCE POLY1 POLY2");
    OpiSpec phi = load_opi(o);
    JoinResult j = joinable(load_poly(o, o.args[0]), load_poly(o, o.args[1]), phi, o.fuel);
    out << "outcome: " << to_string(j.outcome) << "\n";
    if (j.common) out << "common: " << to_string(*j.common) << "\n";
    if (!j.note.empty()) out << "note: " << j.note << "\n";
    return j.outcome == JoinOutcome::Joinable ? kSuccess : kNegative;
}

int cmd_compose(const Options& o, std::ostream& out) {
    need_args(o, 0, "compose --opi SOURCE [--samples N] [--depth D] [--seed S]");
    OpiSpec phi = load_opi(o);
    Rng rng(o.seed);
    WordShape shape;
    shape.max_depth = o.depth;
    WordShape ctx_shape = shape;
    ctx_shape.max_breadth = 2;
    std::size_t failures = 0;
    auto report = [&](std::size_t i, const char* kind, const Composition& c) {
        Triviality t = is_trivial_mod(c.value, c.ambient, phi, o.fuel);
        if (t != Triviality::Trivial) ++failures;
        out << "sample " << i << " " << kind << " " << to_string(c.ambient) << ": "
            << (t == Triviality::Trivial ? "pass" : "fail") << " (" << to_string(t) << ")\n";
    };
    for (std::size_t i = 1; i <= o.samples; ++i) {
        Word u = random_word(rng, shape);
        Word v = random_word(rng, shape);
        Word s = random_word(rng, shape);
        report(i, "intersection", intersection_composition(u, v, s, phi));
        Side side = std::uniform_int_distribution<int>(0, 1)(rng) ? Side::Right : Side::Left;
        StarWord qp = random_star_word(rng, ctx_shape);
        Word r = random_word(rng, shape);
        Word t = random_word(rng, shape);
        Word other = random_word(rng, shape);
        report(i, side == Side::Left ? "inclusion-left" : "inclusion-right",
               inclusion_composition(side, qp, r, t, other, phi));
    }
    out << (failures == 0 ? "all compositions trivial" : std::to_string(failures) + " composition(s) not trivial")
        << "\n";
    return failures == 0 ? kSuccess : kNegative;
}

int cmd_catalog(const Options& o, std::ostream& out) {
    need_args(o, 0, "catalog");
    for (const auto& e : catalog()) {
        out << e.key << "  " << (e.alias.empty() ? "-" : e.alias) << "  " << to_string(e.spec.b());
        if (!e.description.empty()) out << "  (" << e.description << ")";
        out << "\n";
    }
    return kSuccess;
}

Placement parse_placement(const std::string& sub, const std::string& ctx) {
    return Placement{parse_word(sub), parse_star_word(ctx)};
}

int cmd_classify(const Options& o, std::ostream& out) {
    if (o.args.size() == 2) {
        Word w = parse_word(o.args[0]);
        Word u = parse_word(o.args[1]);
        if (u.is_unit()) throw UsageError("unit subword placements are not enumerated");
        for (const auto& p : enumerate_placements(w, u)) out << to_string(p.context) << "\n";
        return kSuccess;
    }
    if (o.args.size() != 5) throw UsageError("usage: classify WORD SUB [SUB1 CTX1 SUB2 CTX2]");
    Word w = parse_word(o.args[0]);
    Placement p1 = parse_placement(o.args[1], o.args[2]);
    Placement p2 = parse_placement(o.args[3], o.args[4]);
    try {
        out << to_string(classify_placements(w, p1, p2)) << "\n";
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rewriting and free algebras for Rota-Baxter type identities", "rbt"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.allow_extras();
    Options o;
    app.add_option("--opi", o.opi, "identity: FILE, catalog:KEY or inline:POLY");
    app.add_option("--order", o.order, "monomial order")->check(CLI::IsMember({"db"}));
    app.add_option("--fuel", o.fuel, "maximum rewriting steps")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--samples", o.samples, "number of random samples");
    app.add_option("--depth", o.depth, "maximum bracket depth of random words");
    app.add_flag("--trace", o.trace, "print each rewriting step");
    app.add_option("--params", o.params, "parameter values, e.g. lam=1,c=-1");

    const std::pair<const char*, const char*> commands[] = {
        {"check", "decide whether the identity is of Rota-Baxter type"},
        {"reduce", "normal form of a polynomial"},
        {"mul", "product in the free algebra"},
        {"compose", "check random compositions for triviality"},
        {"join", "decide whether two polynomials have a common reduct"},
        {"catalog", "list the built-in identities"},
        {"classify", "list placements of a subword, or classify two placements"},
    };
    // Positional arguments are taken as extras: CLI11 would otherwise split
    // "[u][v]" as a bracketed list, and "-x" must stay a polynomial.
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->allow_extras();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    for (const auto& a : app.remaining(true)) {
        if (a.rfind("--", 0) == 0) {
            err << "error: unknown option " << a << "\n";
            return kUsage;
        }
        o.args.push_back(a);
    }
    try {
        if (cmd == "check") return cmd_check(o, out);
        if (cmd == "reduce") return cmd_reduce(o, out, err);
        if (cmd == "mul") return cmd_mul(o, out, err);
        if (cmd == "compose") return cmd_compose(o, out);
        if (cmd == "join") return cmd_join(o, out);
        if (cmd == "catalog") return cmd_catalog(o, out);
        return cmd_classify(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    }
    return kUsage;
}

}  // namespace rbt::cli
