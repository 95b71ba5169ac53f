#include "cli_app.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "reflecto/catalog.hpp"
#include "reflecto/checks.hpp"
#include "reflecto/complexity.hpp"
#include "reflecto/dfao.hpp"
#include "reflecto/errors.hpp"
#include "reflecto/graphs.hpp"
#include "reflecto/linrep.hpp"
#include "reflecto/seq_spec.hpp"

namespace reflecto::cli {

namespace {

using nlohmann::ordered_json;

// Thrown for conditions that should end the process with a fixed code after
// printing one diagnostic line.
struct CliExit {
    int code;
    std::string message;
};

struct SpecSource {
    std::string label;
    std::function<Word(std::uint64_t)> generate;
};

SpecSource resolve_spec(const std::string& name, const std::string& file) {
    if (!name.empty()) {
        if (const CatalogEntry* entry = find_catalog_entry(name)) {
            return {entry->name, entry->generate};
        }
        throw CliExit{3, "unknown spec '" + name + "'; see the catalog subcommand"};
    }
    std::ifstream in(file);
    if (!in) throw CliExit{3, "cannot open spec file '" + file + "'"};
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw CliExit{3, "malformed spec file '" + file + "': " + e.what()};
    }
    SequenceSpec spec = spec_from_json(doc);
    validate(spec);
    return {file, [spec](std::uint64_t len) { return prefix(spec, len); }};
}

// Default prefix length scales with the requested range; always overridable.
std::uint64_t default_prefix(std::uint64_t n_ref) {
    return std::max<std::uint64_t>(4096, 64 * n_ref);
}

// Enforces the REFLECTO_MAX_PREFIX cap on the longest prefix this budget can
// materialize (the stability pass reads a prefix `stability` times longer).
void enforce_prefix_cap(const PrefixBudget& budget) {
    const char* cap_text = std::getenv("REFLECTO_MAX_PREFIX");
    if (cap_text == nullptr || *cap_text == '\0') return;
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(cap_text, &end, 10);
    if (end == nullptr || *end != '\0' || cap == 0) {
        throw CliExit{3, std::string("REFLECTO_MAX_PREFIX is not a positive integer: ") +
                             cap_text};
    }
    const std::uint64_t needed = budget.length * budget.stability;
    if (needed > cap) {
        throw CliExit{3, "prefix budget needs " + std::to_string(needed) +
                             " symbols, above the REFLECTO_MAX_PREFIX cap of " +
                             std::to_string(cap)};
    }
}

int cmd_profile(const SpecSource& src, std::uint32_t n_max, const PrefixBudget& budget,
                const std::string& format, std::ostream& out) {
    const ComplexityProfile p = profile_generated(src.generate, budget, n_max);
    if (format == "csv") {
        out << p.to_csv();
    } else {
        ordered_json doc = p.to_json();
        doc["spec"] = src.label;
        out << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_check(const std::string& id, const std::string& scan_name,
              const CheckParams& params, std::uint32_t scan_n_max, std::ostream& out) {
    std::vector<CheckReport> reports;
    if (!scan_name.empty()) {
        reports.push_back(conjecture_scan(scan_name, scan_n_max));
    } else if (id == "all") {
        reports = run_all_checks(params);
    } else {
        reports.push_back(run_check(id, params));
    }
    bool any_fail = false, any_inconclusive = false;
    for (const CheckReport& rep : reports) {
        out << rep.to_json().dump() << "\n";
        if (rep.verdict == Verdict::fail) any_fail = true;
        if (rep.verdict == Verdict::inconclusive) any_inconclusive = true;
    }
    if (any_fail) return 1;
    if (any_inconclusive) return 2;
    return 0;
}

int cmd_graph(const SpecSource& src, std::uint32_t n, GraphKind kind,
              const PrefixBudget& budget, const std::string& format, std::ostream& out,
              std::ostream& err) {
    const auto build = [&](std::uint64_t length) {
        const Word text = src.generate(length);
        if (text.size() < n + 1) {
            throw BudgetError("prefix of length " + std::to_string(text.size()) +
                              " is too short for order " + std::to_string(n));
        }
        FactorGraph g = build_gamma(factor_set(text, n), factor_set(text, n + 1));
        if (kind != GraphKind::gamma) g = build_lambda(g);
        if (kind == GraphKind::k) g = build_k(g);
        return g;
    };
    const FactorGraph graph = build(budget.length);
    if (budget.stability > 1) {
        const FactorGraph wider = build(budget.length * budget.stability);
        if (!(graph == wider)) {
            err << "inconclusive: the " << graph_kind_name(kind) << " graph at order "
                << n << " changed when the prefix was extended; raise --prefix\n";
            return 2;
        }
    }
    if (format == "json") {
        ordered_json doc = graph_to_json(graph);
        doc["spec"] = src.label;
        out << doc.dump(2) << "\n";
    } else {
        out << export_dot(graph);
    }
    return 0;
}

LinearRepresentation load_linrep(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliExit{3, "cannot open representation file '" + path + "'"};
    try {
        return parse_linrep(in);
    } catch (const ParseError& e) {
        throw CliExit{3, "malformed representation file '" + path + "': " + e.what()};
    }
}

int cmd_linrep(const std::vector<std::string>& files, std::optional<std::uint64_t> n,
               std::uint32_t n_max, const std::string& format, std::ostream& out) {
    if (files.size() == 2) {
        const LinearRepresentation a = load_linrep(files[0]);
        const LinearRepresentation b = load_linrep(files[1]);
        const bool equal = linrep_equal(a, b);
        ordered_json doc;
        doc["equal"] = equal;
        doc["dims"] = ordered_json::array({a.dim, b.dim});
        doc["base"] = a.base;
        out << doc.dump() << "\n";
        return equal ? 0 : 1;
    }
    const LinearRepresentation rep = load_linrep(files[0]);
    const std::uint64_t lo = n.value_or(0);
    const std::uint64_t hi = n.value_or(n_max);
    if (format == "csv") {
        out << "n,value\n";
        for (std::uint64_t i = lo; i <= hi; ++i) {
            out << i << "," << linrep_eval(rep, i).str() << "\n";
        }
    } else {
        ordered_json rows = ordered_json::array();
        for (std::uint64_t i = lo; i <= hi; ++i) {
            rows.push_back(ordered_json{{"n", i}, {"value", linrep_eval(rep, i).str()}});
        }
        out << rows.dump(2) << "\n";
    }
    return 0;
}

int cmd_dfao(const std::string& file, std::optional<std::uint64_t> n, std::uint32_t n_max,
             const std::string& format, std::ostream& out) {
    std::ifstream in(file);
    if (!in) throw CliExit{3, "cannot open automaton file '" + file + "'"};
    Dfao machine;
    try {
        machine = parse_dfao(in);
    } catch (const ParseError& e) {
        throw CliExit{3, "malformed automaton file '" + file + "': " + e.what()};
    }
    const std::uint64_t lo = n.value_or(0);
    const std::uint64_t hi = n.value_or(n_max);
    if (format == "csv") {
        out << "n,output\n";
        for (std::uint64_t i = lo; i <= hi; ++i) {
            out << i << "," << dfao_term(machine, i) << "\n";
        }
    } else {
        ordered_json rows = ordered_json::array();
        for (std::uint64_t i = lo; i <= hi; ++i) {
            rows.push_back(ordered_json{{"n", i}, {"output", dfao_term(machine, i)}});
        }
        out << rows.dump(2) << "\n";
    }
    return 0;
}

std::string csv_quote(const std::string& text) {
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

int cmd_catalog(const std::string& format, std::ostream& out) {
    if (format == "csv") {
        out << "name,eventually_periodic,uniformly_recurrent,default_prefix,summary\n";
        for (const CatalogEntry& entry : catalog()) {
            out << entry.name << "," << (entry.eventually_periodic ? 1 : 0) << ","
                << (entry.uniformly_recurrent ? 1 : 0) << ","
                << entry.default_budget.length << "," << csv_quote(entry.summary)
                << "\n";
        }
        return 0;
    }
    ordered_json rows = ordered_json::array();
    for (const CatalogEntry& entry : catalog()) {
        ordered_json row;
        row["name"] = entry.name;
        row["summary"] = entry.summary;
        row["eventually_periodic"] = entry.eventually_periodic;
        row["uniformly_recurrent"] = entry.uniformly_recurrent;
        row["default_prefix"] = entry.default_budget.length;
        row["default_stability"] = entry.default_budget.stability;
        row["spec"] = entry.spec ? spec_to_json(*entry.spec) : ordered_json(nullptr);
        rows.push_back(row);
    }
    out << rows.dump(2) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"reflection complexity toolkit"};
    app.require_subcommand(1);

    // Shared option storage; each subcommand registers the flags it uses.
    // The format choices differ per subcommand, so each keeps its own slot.
    std::string spec_name, spec_file, check_id = "all", scan_name;
    std::string profile_format = "csv", graph_format = "dot";
    std::string linrep_format = "csv", dfao_format = "csv", catalog_format = "json";
    std::vector<std::string> rep_files;
    std::string dfao_file;
    std::uint32_t n_max = 0, n_value = 0, stability = 2;
    std::uint64_t prefix_override = 0;
    GraphKind kind = GraphKind::k;

    const auto add_spec_opts = [&](CLI::App* cmd) {
        CLI::Option* by_name = cmd->add_option("--spec", spec_name,
                                               "catalog entry name");
        CLI::Option* by_file = cmd->add_option("--spec-file", spec_file,
                                               "JSON sequence description");
        by_name->excludes(by_file);
        by_file->excludes(by_name);
    };
    const auto add_budget_opts = [&](CLI::App* cmd) {
        cmd->add_option("--prefix", prefix_override,
                        "prefix length to analyze (default max(4096, 64*n))")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--stability", stability,
                        "re-count on a prefix this many times longer (1 disables)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    CLI::App* profile_cmd =
        app.add_subcommand("profile", "complexity table of a sequence");
    add_spec_opts(profile_cmd);
    add_budget_opts(profile_cmd);
    profile_cmd->add_option("--n-max", n_max, "largest factor length")->required();
    profile_cmd->add_option("--format", profile_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    CLI::App* check_cmd = app.add_subcommand("check", "run registered checks");
    CLI::Option* id_opt =
        check_cmd->add_option("--id", check_id, "check id, or 'all'")
            ->capture_default_str();
    check_cmd->add_option("--scan", scan_name,
                          "survey open questions on a catalog entry instead")
        ->excludes(id_opt);
    check_cmd->add_option("--n-max", n_max, "override the check's n range");
    add_budget_opts(check_cmd);

    CLI::App* graph_cmd =
        app.add_subcommand("graph", "factor graph of a sequence at one order");
    add_spec_opts(graph_cmd);
    add_budget_opts(graph_cmd);
    graph_cmd->add_option("--n", n_value, "factor length (graph order)")->required();
    graph_cmd
        ->add_option("--kind", kind, "gamma, lambda, or k")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, GraphKind>{{"gamma", GraphKind::gamma},
                                             {"lambda", GraphKind::lambda},
                                             {"k", GraphKind::k}},
            CLI::ignore_case))
        ->default_val("k");
    graph_cmd->add_option("--format", graph_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}))
        ->capture_default_str();

    CLI::App* linrep_cmd = app.add_subcommand(
        "linrep", "evaluate or compare linear representation files");
    linrep_cmd->add_option("--rep-file", rep_files, "representation file (twice: compare)")
        ->required()
        ->expected(1, 2);
    CLI::Option* linrep_n = linrep_cmd->add_option("--n", n_value, "single index");
    linrep_cmd->add_option("--n-max", n_max, "evaluate indices 0..n-max")
        ->excludes(linrep_n)
        ->default_val(20);
    linrep_cmd->add_option("--format", linrep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    CLI::App* dfao_cmd = app.add_subcommand("dfao", "evaluate an automaton file");
    dfao_cmd->add_option("--dfao-file", dfao_file, "automaton file")->required();
    CLI::Option* dfao_n = dfao_cmd->add_option("--n", n_value, "single index");
    dfao_cmd->add_option("--n-max", n_max, "evaluate indices 0..n-max")
        ->excludes(dfao_n)
        ->default_val(20);
    dfao_cmd->add_option("--format", dfao_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    CLI::App* catalog_cmd =
        app.add_subcommand("catalog", "list the known sequences");
    catalog_cmd->add_option("--format", catalog_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 3;
    }

    try {
        if (profile_cmd->parsed()) {
            if (spec_name.empty() && spec_file.empty()) {
                throw CliExit{3, "profile needs --spec or --spec-file"};
            }
            const SpecSource src = resolve_spec(spec_name, spec_file);
            PrefixBudget budget{prefix_override != 0 ? prefix_override
                                                     : default_prefix(n_max),
                                stability};
            if (budget.length < static_cast<std::uint64_t>(n_max) + 1) {
                budget.length = static_cast<std::uint64_t>(n_max) + 1;
            }
            enforce_prefix_cap(budget);
            return cmd_profile(src, n_max, budget, profile_format, out);
        }
        if (check_cmd->parsed()) {
            CheckParams params;
            if (check_cmd->count("--n-max") > 0) params.n_hi = n_max;
            if (check_cmd->count("--prefix") > 0) {
                const PrefixBudget budget{prefix_override, stability};
                enforce_prefix_cap(budget);
                params.budget = budget;
            }
            const std::uint32_t scan_n =
                check_cmd->count("--n-max") > 0 ? n_max : 100;
            return cmd_check(check_id, scan_name, params, scan_n, out);
        }
        if (graph_cmd->parsed()) {
            if (spec_name.empty() && spec_file.empty()) {
                throw CliExit{3, "graph needs --spec or --spec-file"};
            }
            const SpecSource src = resolve_spec(spec_name, spec_file);
            const PrefixBudget budget{
                prefix_override != 0
                    ? prefix_override
                    : default_prefix(static_cast<std::uint64_t>(n_value) + 1),
                stability};
            enforce_prefix_cap(budget);
            return cmd_graph(src, n_value, kind, budget, graph_format, out, err);
        }
        if (linrep_cmd->parsed()) {
            const std::optional<std::uint64_t> single =
                linrep_cmd->count("--n") > 0 ? std::optional<std::uint64_t>(n_value)
                                             : std::nullopt;
            return cmd_linrep(rep_files, single, n_max, linrep_format, out);
        }
        if (dfao_cmd->parsed()) {
            const std::optional<std::uint64_t> single =
                dfao_cmd->count("--n") > 0 ? std::optional<std::uint64_t>(n_value)
                                           : std::nullopt;
            return cmd_dfao(dfao_file, single, n_max, dfao_format, out);
        }
        if (catalog_cmd->parsed()) {
            return cmd_catalog(catalog_format, out);
        }
        err << "no subcommand selected\n";
        return 3;
    } catch (const CliExit& e) {
        err << e.message << "\n";
        return e.code;
    } catch (const BudgetError& e) {
        err << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const CorruptionError& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace reflecto::cli
