#include "tempiric/cli.hpp"

#include "tempiric/figure.hpp"
#include "tempiric/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace tempiric {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string group;
    std::string group_file;
    std::string bound;
    int grid_bound = -1;
    std::string format;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string ktype;
};

class UsageError : public Error {
  public:
    using Error::Error;
};

GroupDatum resolve_group(const Options &o) {
    if (!o.group.empty() && !o.group_file.empty())
        throw UsageError("give only one of --group and --group-file");
    if (!o.group_file.empty())
        return load_file(o.group_file);
    if (o.group.empty())
        throw UsageError("--group or --group-file is required");
    try {
        return builtin(o.group);
    } catch (const ValidationError &e) {
        throw UsageError(e.what());
    }
}

Rational resolve_bound(const Options &o) {
    if (o.bound.empty())
        throw UsageError("--bound is required");
    Rational b = parse_rational(o.bound);
    if (b < 0)
        throw UsageError("--bound must be nonnegative");
    return b;
}

std::string resolve_format(const Options &o, const std::string &fallback,
                           std::initializer_list<const char *> allowed) {
    std::string f = o.format.empty() ? fallback : o.format;
    for (const char *a : allowed)
        if (f == a)
            return f;
    std::string list;
    for (const char *a : allowed)
        list += (list.empty() ? "" : ", ") + std::string(a);
    throw UsageError("--format " + f + " not supported here (use " + list +
                     ")");
}

// Writes the command output either to --out or to the main stream.
void emit(const Options &o, std::ostream &out, const std::string &text) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw UsageError("cannot write '" + o.out + "'");
    f << text;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

int cmd_catalog(const Options &o, std::ostream &out) {
    std::string fmt = resolve_format(o, "json", {"json", "txt"});
    if (o.group.empty() && o.group_file.empty()) {
        std::string text;
        if (fmt == "json") {
            text = dump(Json(builtin_names()));
        } else {
            for (const auto &n : builtin_names())
                text += n + "\n";
        }
        emit(o, out, text);
        return kExitOk;
    }
    GroupDatum d = resolve_group(o);
    if (fmt == "txt") {
        std::ostringstream os;
        os << "name: " << d.name << "\nK:";
        for (Atom a : d.k.atoms())
            os << " " << atom_name(a);
        os << "\nM:";
        for (Atom a : d.m.atoms())
            os << " " << atom_name(a);
        os << "\nbranching: " << branching_name(d.branching.kind)
           << "\ntwo_rho_c: " << to_string(d.norm.two_rho_c)
           << "\nweyl_on_mhat: " << d.weyl_on_mhat.rule
           << "\nequal_rank: " << (d.equal_rank ? "true" : "false") << "\n";
        emit(o, out, os.str());
    } else {
        emit(o, out, serialize(d));
    }
    return kExitOk;
}

int cmd_ktypes(const Options &o, std::ostream &out) {
    std::string fmt = resolve_format(o, "csv", {"csv", "json"});
    GroupDatum d = resolve_group(o);
    Rational b = resolve_bound(o);
    emit(o, out, fmt == "csv" ? ktypes_csv(d, b) : dump(ktypes_json(d, b)));
    return kExitOk;
}

int cmd_branch(const Options &o, std::ostream &out) {
    std::string fmt = resolve_format(o, "csv", {"csv", "json"});
    GroupDatum d = resolve_group(o);
    std::vector<KTypeLabel> ktypes;
    if (!o.ktype.empty()) {
        KTypeLabel tau = parse_label(o.ktype);
        try {
            validate_label(d.k, tau);
        } catch (const LabelError &e) {
            throw UsageError(e.what());
        }
        ktypes.push_back(tau);
    } else {
        ktypes = enumerate_ktypes(d, resolve_bound(o));
    }
    emit(o, out,
         fmt == "csv" ? branch_csv(d, ktypes) : dump(branch_json(d, ktypes)));
    return kExitOk;
}

int cmd_tempiric_table(const Options &o, std::ostream &out) {
    std::string fmt = resolve_format(o, "csv", {"csv", "json"});
    GroupDatum d = resolve_group(o);
    Rational b = resolve_bound(o);
    if (fmt == "csv") {
        emit(o, out, tempiric_table_csv(d, b));
    } else {
        Json j;
        j["group"] = d.name;
        j["bound"] = to_string(b);
        j["records"] = tempiric_table_json(d, b);
        emit(o, out, dump(j));
    }
    return kExitOk;
}

int cmd_ck_matrix(const Options &o, std::ostream &out) {
    std::string fmt = resolve_format(o, "json", {"json", "csv"});
    GroupDatum d = resolve_group(o);
    Rational b = resolve_bound(o);
    MultMatrix mm = mult_matrix(d, b);
    WindowInverse inv = invert_window(mm);
    if (fmt == "csv") {
        emit(o, out, matrix_csv(mm, inv));
    } else {
        Json j;
        j["group"] = d.name;
        j["bound"] = to_string(b);
        Json body = matrix_json(mm, inv);
        for (auto &[k, v] : body.items())
            j[k] = v;
        emit(o, out, dump(j));
    }
    return kExitOk;
}

int cmd_verify(const Options &o, std::ostream &out) {
    std::string fmt = resolve_format(o, "txt", {"txt", "json"});
    GroupDatum d = resolve_group(o);
    Rational b = resolve_bound(o);
    auto reports = run_verification(d, b, o.seed);
    bool ok = std::all_of(reports.begin(), reports.end(),
                          [](const auto &r) { return r.passed(); });
    if (fmt == "json") {
        Json j;
        j["group"] = d.name;
        j["bound"] = to_string(b);
        j["seed"] = o.seed;
        j["passed"] = ok;
        j["checks"] = verification_json(reports);
        emit(o, out, dump(j));
    } else {
        std::string text = "# verify group=" + d.name + " bound=" +
                           to_string(b) + " seed=" + std::to_string(o.seed) +
                           "\n" + verification_text(reports);
        if (!ok) {
            auto first = std::find_if(reports.begin(), reports.end(),
                                      [](const auto &r) { return !r.passed(); });
            text += "# first failure: " + first->name() + ": " +
                    first->counterexample() + "\n";
        }
        emit(o, out, text);
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_figure(const Options &o, std::ostream &out) {
    std::string fmt = resolve_format(o, "txt", {"txt", "dot", "svg"});
    GroupDatum d = resolve_group(o);
    if (o.grid_bound < 0)
        throw UsageError("--grid-bound is required and must be nonnegative");
    DiagramSpec spec;
    try {
        spec = figure(d, o.grid_bound);
    } catch (const DomainError &e) {
        throw UsageError(e.what());
    }
    if (fmt == "dot")
        emit(o, out, render_dot(spec));
    else if (fmt == "svg")
        emit(o, out, render_svg(spec));
    else
        emit(o, out, render_text(spec));
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
    CLI::App app{"Exact tempiric multiplicity structure of rank-one groups"};
    app.name(args.empty() ? "tempiric" : args.front());
    app.require_subcommand(1);

    Options o;
    struct Spec {
        const char *name;
        const char *help;
        bool bound, grid, seed, ktype;
        std::function<int(const Options &, std::ostream &)> run;
    };
    const std::vector<Spec> specs = {
        {"catalog", "Print a group datum (or list the builtins)", false, false,
         false, false, cmd_catalog},
        {"ktypes", "Enumerate K-types by Vogan norm", true, false, false, false,
         cmd_ktypes},
        {"branch", "Restrict K-types to M", true, false, false, true,
         cmd_branch},
        {"tempiric-table", "List the tempiric window", true, false, false,
         false, cmd_tempiric_table},
        {"ck-matrix", "Multiplicity matrix and its integer inverse", true,
         false, false, false, cmd_ck_matrix},
        {"verify", "Run the verification suite", true, false, true, false,
         cmd_verify},
        {"figure", "Minimal K-type diagram", false, true, false, false,
         cmd_figure},
    };
    std::vector<std::pair<CLI::App *, const Spec *>> subs;
    for (const auto &s : specs) {
        CLI::App *sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--group", o.group, "Builtin group (SL2R, SO31, Sp11)");
        sub->add_option("--group-file", o.group_file,
                        "Group definition JSON file");
        sub->add_option("--format", o.format,
                        "Output format: csv, json, dot, svg or txt");
        sub->add_option("--out", o.out, "Write output to this file");
        if (s.bound)
            sub->add_option("--bound", o.bound, "Vogan-norm bound (p/q)");
        if (s.grid)
            sub->add_option("--grid-bound", o.grid_bound,
                            "Bound on label coordinates");
        if (s.seed)
            sub->add_option("--seed", o.seed, "Seed for randomized checks");
        if (s.ktype)
            sub->add_option("--ktype", o.ktype, "Single K-type, e.g. 1,1");
        subs.emplace_back(sub, &s);
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty())
        rev.pop_back(); // program name
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    for (const auto &[sub, spec] : subs) {
        if (!sub->parsed())
            continue;
        try {
            return spec->run(o, out);
        } catch (const UsageError &e) {
            err << "error: " << e.what() << "\n" << sub->help();
            return kExitUsage;
        } catch (const ParseError &e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        } catch (const ValidationError &e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        } catch (const LabelError &e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        } catch (const Error &e) {
            err << "check failed: " << e.what() << "\n";
            return kExitCheckFailed;
        }
    }
    return kExitUsage;
}

} // namespace tempiric
