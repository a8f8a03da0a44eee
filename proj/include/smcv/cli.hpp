#pragma once

// Command-line surface. run() is the whole program minus main(), so tests
// can drive it in-process. Exit codes: 0 success / pass, 1 verification or
// theorem failure, 2 usage, parse or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "digraph.hpp"
#include "families.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "solvers.hpp"
#include "validate.hpp"

namespace smcv::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct Options {
    std::string input;
    std::string family;
    std::optional<int> n;
    std::optional<int> m;
    std::uint64_t seed = 1;
    bool guard_override = false;
    std::string coloring;
    std::string corpus;
    std::vector<std::string> theorems;
    bool full_range = false;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline Digraph make_family(const std::string& name, const Options& o) {
    if (!o.n) throw UsageError("--family needs --n");
    const int n = *o.n;
    if (name == "figure1") return figure1_family(n);
    if (name == "cycle") return cycle(n);
    if (name == "complete") return complete_digraph(n);
    if (name == "long-path-tournament") return long_path_tournament(n);
    if (name == "random-tournament") return random_strong_tournament(n, o.seed);
    if (name == "random-strong" || name == "random-oriented") {
        if (!o.m) throw UsageError("--family " + name + " needs --m");
        return name == "random-strong" ? random_strong_digraph(n, *o.m, o.seed)
                                       : random_strong_oriented(n, *o.m, o.seed);
    }
    throw UsageError("unknown family '" + name + "'");
}

inline Digraph load_graph(const Options& o) {
    if (!o.input.empty() && !o.family.empty()) throw UsageError("give either --input or --family, not both");
    if (!o.input.empty()) return parse_digraph(read_file(o.input));
    if (!o.family.empty()) return make_family(o.family, o);
    throw UsageError("a digraph is required: --input FILE or --family NAME --n K");
}

inline SolverLimits limits_of(const Options& o) { return o.guard_override ? SolverLimits::unlimited() : SolverLimits{}; }

inline std::string format_path(const Path& p) { return join(p.vertices); }

inline int cmd_metrics(const Options& o, std::ostream& out) {
    const Digraph d = load_graph(o);
    Report r;
    const bool strong = is_strong(d);
    r.set("n", d.order());
    r.set("m", d.size());
    r.set("strong", yes_no(strong));
    r.set("unilateral", yes_no(is_unilateral(d)));
    r.set("oriented", yes_no(is_oriented(d)));
    r.set("tournament", yes_no(is_tournament(d)));
    const auto g = girth(d);
    r.set("girth", g ? std::to_string(*g) : "acyclic");
    const DistanceTable dist(d);
    r.set("diameter", strong ? std::to_string(dist.diameter()) : "undefined");
    auto& rows = r.section("distances");
    for (int u = 0; u < d.order(); ++u) {
        std::string row = std::to_string(u) + ":";
        for (int v = 0; v < d.order(); ++v) row += " " + (dist.finite(u, v) ? std::to_string(dist.at(u, v)) : "inf");
        rows.lines.push_back(row);
    }
    if (strong) {
        const auto report = bad_pairs(d);
        int bad = 0;
        auto& s = r.section("bad_pairs");
        for (const auto& pc : report.pairs) {
            if (pc.kind == PairKind::not_bad) continue;
            ++bad;
            s.lines.push_back(std::to_string(pc.u) + " " + std::to_string(pc.v) + " " + to_string(pc.kind));
        }
        r.set("bad_pairs", bad);
        r.set("directed_triangle", yes_no(report.directed_triangle));
    }
    out << r.render();
    return exit_ok;
}

inline int cmd_solver(const std::string& which, const Options& o, std::ostream& out) {
    const Digraph d = load_graph(o);
    const SolverLimits limits = limits_of(o);
    Report r;
    r.set("n", d.order());
    r.set("m", d.size());
    if (which == "smcv") {
        const auto range = o.full_range ? SearchRange::full : SearchRange::bounded;
        const Certificate c = smcv_exact(d, limits, range);
        r.set("search", o.full_range ? "full" : "bounded");
        r.set("smc_v", c.value);
        add_certificate(r, "smc_v", d, c);
    } else if (which == "omegav") {
        const Certificate c = omega_v_exact(d, limits);
        r.set("omega_v", c.value);
        add_certificate(r, "omega_v", d, c);
    } else if (which == "omega") {
        const Certificate c = omega_exact(d, limits);
        r.set("omega", c.value);
        add_certificate(r, "omega", d, c);
    } else {
        const Certificate c = smc_exact(d, limits);
        r.set("smc", c.value);
        if (is_oriented(d)) r.set("smc_formula", smc_by_formula(d, limits));
        add_certificate(r, "smc", d, c);
    }
    out << r.render();
    return exit_ok;
}

inline int emit_verdict(const Digraph& d, const Verdict& v, int colors, std::ostream& out) {
    Report r;
    r.set("colors", colors);
    r.set("verdict", v.ok ? "ok" : "fail");
    if (v.violation) r.set("violating_pair", std::to_string(v.violation->first) + " " + std::to_string(v.violation->second));
    if (v.ok) {
        auto& s = r.section("witnesses");
        for (int a = 0; a < d.order(); ++a)
            for (int b = 0; b < d.order(); ++b)
                if (a != b) s.lines.push_back(std::to_string(a) + " " + std::to_string(b) + ": " + format_path(*v.witnesses.at(a, b)));
    }
    out << r.render();
    return v.ok ? exit_ok : exit_failure;
}

inline int cmd_verify_svmc(const Options& o, std::ostream& out) {
    const Digraph d = load_graph(o);
    if (o.coloring.empty()) throw UsageError("verify-svmc needs --coloring FILE");
    const VertexColoring c = parse_coloring(read_file(o.coloring), d);
    return emit_verdict(d, verify_svmc(d, c), c.colors(), out);
}

inline int cmd_verify_smc(const Options& o, std::ostream& out) {
    const Digraph d = load_graph(o);
    if (o.coloring.empty()) throw UsageError("verify-smc needs --coloring FILE");
    const ArcColoring c = parse_arc_coloring(read_file(o.coloring), d);
    return emit_verdict(d, verify_smc(d, c), c.colors(), out);
}

inline int cmd_line(const Options& o, std::ostream& out) {
    const Digraph d = load_graph(o);
    const LineDigraphResult l = line_digraph(d);
    out << "# line digraph of a digraph with n=" << d.order() << " m=" << d.size() << '\n';
    for (std::size_t e = 0; e < l.arc_of_vertex.size(); ++e)
        out << "# vertex " << e << " = arc " << l.arc_of_vertex[e].tail << ' ' << l.arc_of_vertex[e].head << '\n';
    out << serialize_digraph(l.graph);
    return exit_ok;
}

inline int cmd_gen(const Options& o, std::ostream& out) {
    if (o.family.empty()) throw UsageError("gen needs --family NAME");
    const Digraph d = make_family(o.family, o);
    out << "# family=" << o.family << '\n';
    out << "# n=" << *o.n << '\n';
    if (o.m) out << "# m=" << *o.m << '\n';
    if (o.family.rfind("random", 0) == 0) out << "# seed=" << o.seed << '\n';
    out << serialize_digraph(d);
    return exit_ok;
}

inline void add_tally(Report& r, const std::string& id, const TheoremTally& t) {
    auto& s = r.section("theorem:" + id);
    s.values["fail"] = std::to_string(t.fail);
    s.values["hypothesis"] = std::to_string(t.hypothesis);
    s.values["instances"] = std::to_string(t.instances);
    s.values["pass"] = std::to_string(t.pass);
    s.values["skipped"] = std::to_string(t.skipped);
    s.values["vacuous"] = std::to_string(t.vacuous);
    s.values["observed_violations"] = std::to_string(t.observed_violations);
    for (const auto& [k, v] : t.counters) s.values["count." + k] = std::to_string(v);
    if (t.first_failure) s.values["first_failure"] = *t.first_failure;
    if (t.first_observed_violation) s.values["first_observed_violation"] = *t.first_observed_violation;
}

inline Report summary_report(const CorpusSummary& summary) {
    Report r;
    r.set("corpus", summary.corpus);
    r.set("instances", summary.instances);
    r.set("certificates.checked", summary.certificates_checked);
    r.set("certificates.failed", summary.certificates_failed);
    r.set("result", summary.passed() ? "pass" : "fail");
    for (const auto& id : theorem_catalog()) {
        auto it = summary.tallies.find(id);
        if (it != summary.tallies.end()) add_tally(r, id, it->second);
    }
    return r;
}

inline int cmd_validate(const Options& o, std::ostream& out) {
    for (const auto& t : o.theorems)
        if (std::find(theorem_catalog().begin(), theorem_catalog().end(), t) == theorem_catalog().end())
            throw UsageError("unknown theorem '" + t + "'");
    const SolverLimits limits = limits_of(o);
    if (!o.corpus.empty()) {
        if (!o.input.empty() || !o.family.empty()) throw UsageError("--corpus excludes --input and --family");
        const CorpusSummary summary = run_corpus(parse_corpus_spec(o.corpus), limits, o.theorems);
        out << summary_report(summary).render();
        return summary.passed() ? exit_ok : exit_failure;
    }
    InstanceAnalysis a(load_graph(o), limits);
    const auto verdicts = check_all(a, o.theorems);
    Report r;
    r.set("instance", describe(a.graph()));
    bool ok = true;
    for (const auto& v : verdicts) {
        auto& s = r.section("theorem:" + v.theorem);
        s.values["hypothesis"] = yes_no(v.hypothesis_satisfied);
        s.values["outcome"] = to_string(v.outcome);
        if (v.observed_violation) s.values["observed_violation"] = "yes";
        for (const auto& [k, val] : v.details) s.values[k] = val;
        ok = ok && v.outcome != Outcome::fails;
    }
    const auto [checked, failed] = a.recheck_certificates();
    r.set("certificates.checked", checked);
    r.set("certificates.failed", failed);
    ok = ok && failed == 0;
    r.set("result", ok ? "pass" : "fail");
    out << r.render();
    return ok ? exit_ok : exit_failure;
}

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monochromatic connection numbers of strong digraphs", "smcv"};
    app.require_subcommand(1, 1);
    Options o;

    auto graph_source = [&](CLI::App* sub) {
        sub->add_option("--input", o.input, "digraph file");
        sub->add_option("--family", o.family,
                        "figure1, cycle, complete, long-path-tournament, random-strong, random-oriented, "
                        "random-tournament");
        sub->add_option("--n", o.n, "order for --family");
        sub->add_option("--m", o.m, "arc count for random families");
        sub->add_option("--seed", o.seed, "seed for random families");
        sub->add_flag("--guard-override", o.guard_override, "lift solver instance-size guards");
    };

    struct Entry {
        const char* name;
        const char* help;
    };
    const Entry entries[] = {
        {"metrics", "strong/unilateral, distances, girth, bad pairs"},
        {"smcv", "exact smc_v with an optimal coloring"},
        {"omegav", "exact Omega_v with a minimal strong dominating absorbing set"},
        {"omega", "exact Omega with a minimal strong spanning arc set"},
        {"smc", "exact smc with an optimal arc coloring"},
        {"verify-svmc", "check a vertex coloring"},
        {"verify-smc", "check an arc coloring"},
        {"line", "print the line digraph"},
        {"gen", "print a generated digraph"},
        {"validate", "run the theorem checks on a digraph or a corpus"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        graph_source(sub);
        subs.push_back(sub);
    }
    app.get_subcommand("smcv")->add_flag("--full-range", o.full_range, "search every color count from n down");
    app.get_subcommand("verify-svmc")->add_option("--coloring", o.coloring, "vertex coloring file (v c)");
    app.get_subcommand("verify-smc")->add_option("--coloring", o.coloring, "arc coloring file (u v c)");
    auto* validate = app.get_subcommand("validate");
    validate->add_option("--corpus", o.corpus, "corpus spec, e.g. strong-digraphs:n=4");
    validate->add_option("--theorems", o.theorems, "restrict to these theorem ids")->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    }

    try {
        for (CLI::App* sub : subs) {
            if (!sub->parsed()) continue;
            const std::string name = sub->get_name();
            if (name == "metrics") return cmd_metrics(o, out);
            if (name == "smcv" || name == "omegav" || name == "omega" || name == "smc") return cmd_solver(name, o, out);
            if (name == "verify-svmc") return cmd_verify_svmc(o, out);
            if (name == "verify-smc") return cmd_verify_smc(o, out);
            if (name == "line") return cmd_line(o, out);
            if (name == "gen") return cmd_gen(o, out);
            if (name == "validate") return cmd_validate(o, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace smcv::cli
