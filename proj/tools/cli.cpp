#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "bck/constructions.hpp"
#include "bck/engine.hpp"
#include "bck/enumeration.hpp"
#include "bck/json_io.hpp"
#include "bck/table_io.hpp"
#include "bck/term.hpp"

namespace bck::cli {

namespace {

using nlohmann::json;

/// Usage-level failure (exit 2) raised from inside a command.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::string format = "text";
    unsigned jobs = 1;
    bool json() const { return format == "json"; }
};

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<std::string> text;
};

void emit(const Context& ctx, const Report& r) {
    if (ctx.json()) {
        ctx.out << json{{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}}.dump(2) << '\n';
        return;
    }
    for (const auto& line : r.text) ctx.out << line << '\n';
}

std::string degree_text(const Degree& d) {
    return d.str() + " (count=" + std::to_string(d.count()) + " total=" + std::to_string(d.total()) + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string table_inline(const BckAlgebra& a) {
    std::string s = "[";
    for (std::size_t x = 0; x < a.order(); ++x) {
        s += x ? ",[" : "[";
        for (std::size_t y = 0; y < a.order(); ++y) s += (y ? "," : "") + std::to_string(a.op(x, y));
        s += "]";
    }
    return s + "]";
}

ParsedTable load(const std::string& path) {
    try {
        return read_table_file(path);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

/// Loads a file that must hold a valid algebra; axiom failures propagate as InvalidAlgebra.
BckAlgebra load_algebra(const std::string& path) {
    ParsedTable t = load(path);
    try {
        return BckAlgebra::from_table(t.order, t.table);
    } catch (const MalformedTable& e) {
        throw UsageError(path + ": " + e.what());
    }
}

Equation equation_arg(const std::string& s) {
    if (auto b = parse_builtin(s)) return builtin(*b);
    try {
        return parse(s);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--eq: ") + e.what());
    }
}

void write_output(const Context& ctx, const std::optional<std::string>& out_path, const BckAlgebra& a,
                  Report& r) {
    r.results["order"] = a.order();
    r.results["table"] = table_json(a);
    if (out_path) {
        write_table_file(*out_path, a);
        r.results["written"] = *out_path;
        r.text.push_back("wrote order-" + std::to_string(a.order()) + " table to " + *out_path);
        emit(ctx, r);
    } else if (ctx.json()) {
        emit(ctx, r);
    } else {
        write_table(ctx.out, a);
    }
}

Catalog catalog_for(const Context& ctx, std::size_t order, const std::optional<std::string>& dir) {
    if (dir && std::filesystem::exists(std::filesystem::path(*dir) / "index.json")) {
        Catalog c = load_catalog(*dir);
        if (c.order != order)
            throw UsageError("catalog in '" + *dir + "' has order " + std::to_string(c.order) + ", not " +
                             std::to_string(order));
        return c;
    }
    EnumerationOptions opts;
    opts.jobs = ctx.jobs;
    Catalog c = enumerate(order, opts);
    for (const auto& w : c.warnings) ctx.err << "warning: " << w << '\n';
    if (dir) save_catalog(c, *dir);
    return c;
}

// ---------------------------------------------------------------------------

int cmd_verify(const Context& ctx, const std::string& file) {
    ParsedTable t = load(file);
    AxiomReport rep;
    try {
        rep = check_axioms(t.order, t.table);
    } catch (const MalformedTable& e) {
        throw UsageError(file + ": " + e.what());
    }
    Report r{"verify", {{"file", file}}, to_json(rep), {}};
    if (rep.ok()) {
        r.text.push_back("valid BCK-algebra of order " + std::to_string(t.order));
    } else {
        r.text.push_back("not a BCK-algebra");
        for (const auto& v : rep.violations) {
            std::string w;
            for (std::size_t i = 0; i < v.witness.size(); ++i) w += (i ? "," : "") + std::to_string(v.witness[i]);
            r.text.push_back("violation " + std::string(axiom_name(v.axiom)) + " witness (" + w + ")");
        }
    }
    emit(ctx, r);
    return rep.ok() ? kOk : kNegative;
}

int cmd_props(const Context& ctx, const std::string& file) {
    BckAlgebra a = load_algebra(file);
    Report r{"props", {{"file", file}}, {}, {}};
    auto atoms = a.atoms();
    r.results = {{"order", a.order()},
                 {"bounded", a.bound().has_value()},
                 {"bound", a.bound() ? json(*a.bound()) : json(nullptr)},
                 {"linear", a.is_linear()},
                 {"commutative", a.is_commutative()},
                 {"positive_implicative", a.is_positive_implicative()},
                 {"implicative", a.is_implicative()},
                 {"atoms", atoms}};
    r.text.push_back("order=" + std::to_string(a.order()));
    r.text.push_back("bounded=" + (a.bound() ? "yes (1=" + std::to_string(*a.bound()) + ")" : std::string("no")));
    r.text.push_back("linear=" + yes_no(a.is_linear()));
    r.text.push_back("commutative=" + yes_no(a.is_commutative()));
    r.text.push_back("positive_implicative=" + yes_no(a.is_positive_implicative()));
    r.text.push_back("implicative=" + yes_no(a.is_implicative()));
    std::string at;
    for (std::size_t i = 0; i < atoms.size(); ++i) at += (i ? "," : "") + std::to_string(atoms[i]);
    r.text.push_back("atoms={" + at + "}");
    emit(ctx, r);
    return kOk;
}

int cmd_degree(const Context& ctx, const std::string& file, const std::optional<std::string>& kind,
               const std::optional<std::string>& eq_text) {
    if (kind.has_value() == eq_text.has_value()) throw UsageError("exactly one of --kind or --eq is required");
    BckAlgebra a = load_algebra(file);
    Report r{"degree", {{"file", file}}, {}, {}};
    Equation eq;
    std::optional<DegreeKind> k;
    if (kind) {
        k = parse_kind(*kind);
        if (!k) throw UsageError("unknown --kind '" + *kind + "' (expected emd, dnd, cd, pid or id)");
        eq = builtin(kind_equation(*k));
        r.inputs["kind"] = *kind;
    } else {
        eq = equation_arg(*eq_text);
        r.inputs["eq"] = *eq_text;
    }
    const Degree d = ds(a, eq, ctx.jobs);
    r.results = {{"equation", to_string(eq)}, {"degree", to_json(d)}};
    r.text.push_back("equation: " + to_string(eq));
    r.text.push_back("degree: " + degree_text(d));
    if (k == DegreeKind::emd) {
        const bool outside = !a.is_commutative();
        r.results["outside_hypothesis"] = outside;
        if (outside) r.text.push_back("note: algebra is not commutative; emd is the literal term degree");
    }
    emit(ctx, r);
    return kOk;
}

int cmd_family(const Context& ctx, const std::string& name, std::size_t n, const std::optional<std::string>& out) {
    auto f = parse_family_name(name);
    if (!f) throw UsageError("unknown family '" + name + "' (expected C, D, Q, B, M, P or Pprime)");
    BckAlgebra a = [&] {
        try {
            return family({*f, n});
        } catch (const RangeError& e) {
            throw UsageError(e.what());
        }
    }();
    Report r{"family", {{"name", std::string(family_label(*f))}, {"n", n}}, {}, {}};
    write_output(ctx, out, a, r);
    return kOk;
}

int cmd_construct(const Context& ctx, const std::string& kind, const std::vector<std::string>& files,
                  const std::optional<std::string>& out) {
    std::vector<BckAlgebra> args;
    for (const auto& f : files) args.push_back(load_algebra(f));
    std::optional<BckAlgebra> result;
    if (kind == "iseki") {
        if (args.size() != 1) throw UsageError("iseki takes exactly one table file");
        result = iseki_extension(args[0]);
    } else if (kind == "union" || kind == "product") {
        if (args.size() < 2) throw UsageError(kind + " takes at least two table files");
        result = args[0];
        for (std::size_t i = 1; i < args.size(); ++i)
            result = kind == "union" ? bck_union(*result, args[i]) : direct_product(*result, args[i]);
    } else {
        throw UsageError("unknown construction '" + kind + "' (expected union, product or iseki)");
    }
    Report r{"construct", {{"kind", kind}, {"files", files}}, {}, {}};
    write_output(ctx, out, *result, r);
    return kOk;
}

int cmd_gap(const Context& ctx, const std::string& eq_text, std::size_t max_n) {
    if (max_n < 3) throw UsageError("--max-n must be at least 3");
    Equation eq = equation_arg(eq_text);
    GapEvidence ev = gap_evidence(eq, max_n, ctx.jobs);
    Report r{"gap", {{"eq", eq_text}, {"max_n", max_n}}, to_json(ev), {}};
    r.text.push_back("equation: " + to_string(eq));
    r.text.push_back("chain degrees d_n = ds(eq, C_n), n = 2.." + std::to_string(max_n) + ":");
    for (std::size_t i = 0; i < ev.sequence.size(); ++i)
        r.text.push_back("  d_" + std::to_string(i + 2) + " = " + degree_text(ev.sequence[i]));
    if (ev.sub_one_max) {
        r.text.push_back("largest d_n < 1 in range: " + ev.sub_one_max->second.str() + " at n=" +
                         std::to_string(ev.sub_one_max->first));
        r.text.push_back("candidate gap (computed range only): " + ev.candidate_gap()->str());
        r.text.push_back("non-increasing after first d_n < 1: " +
                         yes_no(ev.monotone_nonincreasing_after_first_sub_one));
    } else {
        r.text.push_back("every d_n = 1 in range; no value below 1");
    }
    emit(ctx, r);
    return kOk;
}

int cmd_enumerate(const Context& ctx, std::size_t order, const std::optional<std::string>& out) {
    EnumerationOptions opts;
    opts.jobs = ctx.jobs;
    Catalog c = enumerate(order, opts);
    for (const auto& w : c.warnings) ctx.err << "warning: " << w << '\n';
    if (out) save_catalog(c, *out);
    Report r{"enumerate", {{"order", order}}, {}, {}};
    json entries = json::array();
    for (const auto& e : c.entries) entries.push_back(to_json(e));
    r.results = {{"count", c.entries.size()}, {"search_nodes", c.stats.nodes}, {"entries", entries}};
    if (out) r.results["written"] = *out;
    r.text.push_back("order " + std::to_string(order) + ": " + std::to_string(c.entries.size()) +
                     " algebras up to isomorphism (" + std::to_string(c.stats.nodes) + " search nodes)");
    for (const auto& e : c.entries) {
        std::string flags;
        if (e.bound) flags += " bounded";
        if (e.linear) flags += " linear";
        if (e.commutative) flags += " commutative";
        if (e.positive_implicative) flags += " positive-implicative";
        if (e.implicative) flags += " implicative";
        r.text.push_back("  " + table_inline(e.algebra) + flags + " cd=" + e.cd.str() + " pid=" + e.pid.str() +
                         " id=" + e.id.str() + (e.dnd ? " dnd=" + e.dnd->str() : ""));
    }
    if (out) r.text.push_back("catalog written to " + *out);
    emit(ctx, r);
    return kOk;
}

int cmd_spectrum(const Context& ctx, std::size_t order, const std::string& kind,
                 const std::optional<std::string>& catalog_dir, const std::string& filter) {
    auto k = parse_kind(kind);
    if (!k) throw UsageError("unknown --kind '" + kind + "'");
    SpectrumFilter f;
    if (filter == "all") f = SpectrumFilter::all;
    else if (filter == "bounded") f = SpectrumFilter::bounded;
    else if (filter == "commutative") f = SpectrumFilter::commutative;
    else if (filter == "bounded-commutative") f = SpectrumFilter::bounded_commutative;
    else throw UsageError("unknown --filter '" + filter + "'");
    Catalog c = catalog_for(ctx, order, catalog_dir);
    SpectrumReport s = spectrum(c, *k, f);
    Report r{"spectrum", {{"order", order}, {"kind", kind}, {"filter", filter}}, to_json(s), {}};
    auto list = [](const std::vector<Degree>& v) {
        std::string out = "{";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
        return out + "}";
    };
    r.text.push_back(kind + " spectrum, order " + std::to_string(order) + " (filter " + filter + ")");
    r.text.push_back("possible: " + list(s.possible));
    r.text.push_back("achieved: " + list(s.achieved));
    r.text.push_back("missing:  " + list(s.missing));
    if (!s.unexpected.empty()) r.text.push_back("outside possible set: " + list(s.unexpected));
    for (const auto& [d, alg] : s.witnesses) r.text.push_back("  " + d.str() + " <- " + table_inline(alg));
    emit(ctx, r);
    return s.unexpected.empty() ? kOk : kNegative;
}

int cmd_audit(const Context& ctx, std::size_t order, const std::optional<std::string>& catalog_dir) {
    Catalog c = catalog_for(ctx, order, catalog_dir);
    AuditReport a = audit_bounds(c);
    Report r{"audit", {{"order", order}}, to_json(a), {}};
    r.text.push_back("audit order " + std::to_string(order) + ": " + (a.pass() ? "pass" : "FAIL") + ", " +
                     std::to_string(a.algebras_checked) + " algebras checked, " +
                     std::to_string(a.decompositions_verified) + " chain decompositions verified");
    for (const auto& check : a.checks) r.text.push_back("  check: " + check);
    for (const auto& f : a.failures)
        r.text.push_back("  counterexample [" + f.check + "] " + f.detail + "\n" + format_table(f.algebra));
    emit(ctx, r);
    return a.pass() ? kOk : kNegative;
}

int cmd_decompose(const Context& ctx, const std::string& file) {
    BckAlgebra a = load_algebra(file);
    Report r{"decompose", {{"file", file}}, {}, {}};
    try {
        ChainDecomposition d = decompose_commutative(a);
        r.results = {{"commutative", true}, {"chain_lengths", d.chain_lengths}};
        std::string s;
        for (std::size_t i = 0; i < d.chain_lengths.size(); ++i)
            s += (i ? "," : "") + std::to_string(d.chain_lengths[i]);
        r.text.push_back("chain lengths: {" + s + "}");
        emit(ctx, r);
        return kOk;
    } catch (const NotCommutative&) {
        auto pair = a.non_commuting_pair();
        r.results = {{"commutative", false}, {"error", "NotCommutative"}};
        if (pair) r.results["witness"] = {pair->first, pair->second};
        r.text.push_back("NotCommutative: " +
                         (pair ? "(" + std::to_string(pair->first) + "," + std::to_string(pair->second) +
                                     ") is a non-commuting pair"
                               : std::string()));
        emit(ctx, r);
        return kNegative;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Workbench for finite BCK-algebras: axioms, constructions, degrees of satisfiability, enumeration"};
    app.require_subcommand(1);
    Context ctx{out, err};
    app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs,-j", ctx.jobs, "Worker threads for degree counting and enumeration")
        ->check(CLI::Range(1u, 256u));

    std::string file;
    std::optional<std::string> kind, eq, out_path, catalog_dir;
    std::string name, construct_kind, eq_required, kind_required, filter = "all";
    std::vector<std::string> files;
    std::size_t n = 0, order = 0, max_n = 0;

    auto* verify = app.add_subcommand("verify", "Check the BCK axioms on a Cayley table");
    verify->add_option("file", file, "Cayley-table file")->required();

    auto* props = app.add_subcommand("props", "Print structural properties and atoms");
    props->add_option("file", file, "Cayley-table file")->required();

    auto* degree = app.add_subcommand("degree", "Exact degree of satisfiability of an equation");
    degree->add_option("file", file, "Cayley-table file")->required();
    auto* kind_opt = degree->add_option("--kind", kind, "emd, dnd, cd, pid or id");
    auto* eq_opt = degree->add_option("--eq", eq, "Equation, e.g. \"x . y = (x . y) . y\"");
    kind_opt->excludes(eq_opt);

    auto* fam = app.add_subcommand("family", "Write a member of a named family");
    fam->add_option("--name", name, "C, D, Q, B, M, P or Pprime")->required();
    fam->add_option("--n", n, "Family parameter")->required();
    fam->add_option("--out", out_path, "Output file (stdout if omitted)");

    auto* construct = app.add_subcommand("construct", "Union, product or Iseki extension of table files");
    construct->add_option("kind", construct_kind, "union, product or iseki")->required();
    construct->add_option("files", files, "Input table files")->required();
    construct->add_option("--out", out_path, "Output file (stdout if omitted)");

    auto* gap = app.add_subcommand("gap", "Chain-degree sequence and candidate satisfiability gap");
    gap->add_option("--eq", eq_required, "Equation or one of DN, EM, T, E1, I, X1, NX1")->required();
    gap->add_option("--max-n", max_n, "Largest chain order")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "All BCK-algebras of an order up to isomorphism");
    enumerate_cmd->add_option("--order", order, "Order n")->required()->check(CLI::Range(1, 16));
    enumerate_cmd->add_option("--out", out_path, "Catalog directory to write");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Possible versus achieved degree values");
    spectrum_cmd->add_option("--order", order, "Order n")->required()->check(CLI::Range(1, 16));
    spectrum_cmd->add_option("--kind", kind_required, "emd, dnd, cd, pid or id")->required();
    spectrum_cmd->add_option("--catalog", catalog_dir, "Catalog directory (read if present, else written)");
    spectrum_cmd->add_option("--filter", filter, "all, bounded, commutative or bounded-commutative");

    auto* audit = app.add_subcommand("audit", "Check degree bounds and characterizations on a catalog");
    audit->add_option("--order", order, "Order n")->required()->check(CLI::Range(1, 16));
    audit->add_option("--catalog", catalog_dir, "Catalog directory (read if present, else written)");

    auto* decompose = app.add_subcommand("decompose", "Factor a commutative algebra as a product of chains");
    decompose->add_option("file", file, "Cayley-table file")->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(ctx, file);
        if (props->parsed()) return cmd_props(ctx, file);
        if (degree->parsed()) return cmd_degree(ctx, file, kind, eq);
        if (fam->parsed()) return cmd_family(ctx, name, n, out_path);
        if (construct->parsed()) return cmd_construct(ctx, construct_kind, files, out_path);
        if (gap->parsed()) return cmd_gap(ctx, eq_required, max_n);
        if (enumerate_cmd->parsed()) return cmd_enumerate(ctx, order, out_path);
        if (spectrum_cmd->parsed()) return cmd_spectrum(ctx, order, kind_required, catalog_dir, filter);
        if (audit->parsed()) return cmd_audit(ctx, order, catalog_dir);
        if (decompose->parsed()) return cmd_decompose(ctx, file);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidAlgebra& e) {
        err << "error: " << e.what() << '\n';
        return kNegative;
    } catch (const UnboundedAlgebra& e) {
        err << "error: " << e.what() << '\n';
        return kNegative;
    } catch (const InternalError& e) {
        err << "error: " << e.what() << '\n';
        return kNegative;
    } catch (const EnumerationAborted& e) {
        err << "error: " << e.what() << '\n';
        return kNegative;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace bck::cli
