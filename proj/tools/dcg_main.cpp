// Command-line frontend: color, analyze, check, scan, enumerate.
// Exit codes: 0 verdict-clean, 1 mathematical event (applicable check
// failure, non-complete survivor, audit violation), 2 input error,
// 3 inconclusive (a budget ran out before a verdict).

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcg/checks.hpp"
#include "dcg/enumerate.hpp"
#include "dcg/factories.hpp"
#include "dcg/graph6.hpp"
#include "dcg/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEvent = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;

std::uint64_t env_default_budget() {
    const char* env = std::getenv("DCG_BUDGET");
    if (env == nullptr || *env == '\0') return dcg::kDefaultNodeBudget;
    try {
        const unsigned long long v = std::stoull(env);
        if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("DCG_BUDGET must be a positive integer");
}

dcg::Graph load_graph(const std::string& inline_g6, const std::string& file) {
    std::string line;
    if (!inline_g6.empty()) {
        line = inline_g6;
    } else {
        std::istream* in = &std::cin;
        std::ifstream f;
        if (!file.empty() && file != "-") {
            f.open(file);
            if (!f) throw std::invalid_argument("cannot open " + file);
            in = &f;
        }
        if (!std::getline(*in, line)) throw dcg::ParseError("no input line", 0);
    }
    return dcg::parse_graph6(line);
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_color(const std::string& g6, const std::string& file, std::optional<int> k,
              std::uint64_t budget, bool json) {
    const dcg::Graph g = load_graph(g6, file);
    dcg::ColoringEngine engine(budget);
    if (k) {
        const auto r = engine.is_k_colorable(g, *k);
        if (json) {
            nlohmann::json j{{"n", g.vertex_count()},
                             {"k", *k},
                             {"exhausted", r.exhausted()},
                             {"colorable", r.colorable()},
                             {"nodes", r.nodes}};
            j["coloring"] = r.coloring ? dcg::to_json(*r.coloring) : nlohmann::json();
            emit(j);
        } else if (r.exhausted()) {
            std::cout << "budget exhausted after " << r.nodes << " nodes\n";
        } else {
            std::cout << (r.colorable() ? std::to_string(*k) + "-colorable"
                                        : "not " + std::to_string(*k) + "-colorable")
                      << "\n";
            if (r.coloring) std::cout << dcg::to_dimacs(*r.coloring);
        }
        return r.exhausted() ? kExitInconclusive : kExitOk;
    }
    const auto r = engine.chromatic_number(g);
    if (json) {
        nlohmann::json j{{"n", g.vertex_count()},
                         {"exact", r.exact},
                         {"lower_bound", r.lower_bound},
                         {"upper_bound", r.upper_bound},
                         {"nodes", r.nodes}};
        if (r.exact) j["chi"] = r.chi();
        j["coloring"] = r.witness ? dcg::to_json(*r.witness) : nlohmann::json();
        emit(j);
    } else if (!r.exact) {
        std::cout << "budget exhausted: " << r.lower_bound << " <= chi <= " << r.upper_bound
                  << " after " << r.nodes << " nodes\n";
    } else {
        std::cout << "chi = " << r.chi() << "\n";
        if (r.witness) std::cout << dcg::to_dimacs(*r.witness);
    }
    return r.exact ? kExitOk : kExitInconclusive;
}

int cmd_analyze(const std::string& g6, const std::string& file, std::optional<int> x,
                std::uint64_t budget, bool json) {
    const dcg::Graph g = load_graph(g6, file);
    if (x) {
        const auto profile = dcg::neighborhood_complement_profile(g, *x);
        if (json) emit(dcg::to_json(profile));
        else std::cout << dcg::to_json(profile).dump(2) << "\n";
        return kExitOk;
    }
    dcg::ColoringEngine engine(budget);
    const auto chi = engine.chromatic_number(g);
    const auto clique = dcg::max_clique(g);
    const int alpha = dcg::independence_number(g).size;
    const auto claw = dcg::find_claw(g);
    int dmin = g.vertex_count() > 0 ? g.vertex_count() : 0, dmax = 0;
    for (int v : g.vertices()) {
        dmin = std::min(dmin, g.degree(v));
        dmax = std::max(dmax, g.degree(v));
    }
    const bool connected = g.vertex_count() > 0 && dcg::is_connected(g);
    if (json) {
        nlohmann::json j{{"n", g.vertex_count()},
                         {"m", g.edge_count()},
                         {"min_degree", dmin},
                         {"max_degree", dmax},
                         {"connected", connected},
                         {"complete", g.is_complete()},
                         {"claw_free", !claw.has_value()},
                         {"omega", clique.size},
                         {"alpha", alpha},
                         {"chi_exact", chi.exact},
                         {"chi_lower", chi.lower_bound},
                         {"chi_upper", chi.upper_bound}};
        if (chi.exact) j["chi"] = chi.chi();
        if (claw)
            j["claw"] = {{"center", claw->center}, {"leaves", {claw->leaves[0], claw->leaves[1], claw->leaves[2]}}};
        j["graph6"] = dcg::encode_graph6(g);
        emit(j);
    } else {
        std::cout << "n = " << g.vertex_count() << ", m = " << g.edge_count() << "\n";
        std::cout << "degree min/max = " << dmin << "/" << dmax << "\n";
        std::cout << "connected = " << (connected ? "yes" : "no")
                  << ", complete = " << (g.is_complete() ? "yes" : "no") << "\n";
        if (chi.exact) std::cout << "chi = " << chi.chi() << "\n";
        else std::cout << "chi in [" << chi.lower_bound << ", " << chi.upper_bound << "]\n";
        std::cout << "omega = " << clique.size << ", alpha = " << alpha << "\n";
        if (claw)
            std::cout << "claw-free = no (center " << claw->center << ", leaves " << claw->leaves[0]
                      << " " << claw->leaves[1] << " " << claw->leaves[2] << ")\n";
        else
            std::cout << "claw-free = yes\n";
    }
    return chi.exact ? kExitOk : kExitInconclusive;
}

int cmd_check(const std::string& g6, const std::string& file, std::optional<int> forged_t,
              bool assume_dc, std::uint64_t budget, bool json) {
    const dcg::Graph g = load_graph(g6, file);
    dcg::RunAllOptions opts;
    opts.oracle_budget = budget;
    opts.check_budget = budget;
    if (assume_dc) {
        if (!forged_t) throw std::invalid_argument("--assume-dc requires --t");
        dcg::DoubleCriticalVerdict v;
        v.t = *forged_t;
        v.connected = g.vertex_count() > 0 && dcg::is_connected(g);
        v.complete = g.is_complete();
        v.is_double_critical = true;
        opts.verdict = v;
    }
    const auto report = dcg::run_all(g, opts);
    if (json) {
        emit(dcg::to_json(report));
    } else {
        std::cout << "t = " << report.verdict.t << ", connected = " << report.verdict.connected
                  << ", complete = " << report.verdict.complete
                  << ", double-critical = " << report.verdict.is_double_critical << "\n";
        for (const auto& c : report.checks) {
            std::cout << c.check_id << std::string(c.check_id.size() < 6 ? 6 - c.check_id.size() : 1, ' ')
                      << c.verdict_string();
            if (c.failed()) std::cout << "  witness=" << c.witness.dump();
            std::cout << "\n";
        }
        if (report.truncated) std::cout << "note: coloring/sequence enumeration truncated\n";
        if (report.inconclusive) std::cout << "note: budget exhausted, result inconclusive\n";
    }
    if (report.any_applicable_failure()) return kExitEvent;
    if (report.inconclusive) return kExitInconclusive;
    return kExitOk;
}

int cmd_scan(const std::string& range, const std::string& corpus, const dcg::ScanConfig& cfg,
             bool json) {
    dcg::ScanReport report;
    if (!range.empty()) {
        int lo = 0, hi = 0;
        const auto dots = range.find("..");
        try {
            if (dots == std::string::npos) {
                lo = hi = std::stoi(range);
            } else {
                lo = std::stoi(range.substr(0, dots));
                hi = std::stoi(range.substr(dots + 2));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad --n range: " + range);
        }
        report = dcg::scan_enumerated(lo, hi, cfg);
    } else {
        std::istream* in = &std::cin;
        std::ifstream f;
        if (!corpus.empty() && corpus != "-") {
            f.open(corpus);
            if (!f) throw std::invalid_argument("cannot open " + corpus);
            in = &f;
        }
        report = dcg::scan_stream(*in, cfg);
    }
    if (json) emit(dcg::to_json(report));
    else std::cout << dcg::summary_text(report);
    if (report.non_complete_survivor() || !report.audit_violations.empty() ||
        report.reverify_failures > 0)
        return kExitEvent;
    if (report.chi_exhausted + report.oracle_exhausted + report.audit_inconclusive > 0)
        return kExitInconclusive;
    return kExitOk;
}

int cmd_enumerate(int n) {
    for (const auto& g : dcg::enumerate_connected_graphs(n)) std::cout << dcg::encode_graph6(g) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coloring, structural checks, and counterexample scans for double-critical graphs"};
    app.require_subcommand(1);

    std::uint64_t budget = 0;
    try {
        budget = env_default_budget();
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }

    std::string g6, file, format = "text";
    std::function<int()> runner;

    const auto add_common = [&](CLI::App* sub, bool graph_input) {
        if (graph_input) {
            sub->add_option("graph6", g6, "inline graph6/sparse6 record");
            sub->add_option("--file", file, "read the graph from this file (- for stdin)");
        }
        sub->add_option("--budget", budget, "search node budget")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    // color
    auto* color = app.add_subcommand("color", "chromatic number or k-colorability");
    int color_k = 0;
    add_common(color, true);
    auto* kopt = color->add_option("--k", color_k, "decide k-colorability instead of computing chi")
                     ->check(CLI::NonNegativeNumber);
    color->callback([&, kopt] {
        runner = [&, kopt] {
            return cmd_color(g6, file, kopt->count() ? std::optional<int>(color_k) : std::nullopt,
                             budget, format == "json");
        };
    });

    // analyze
    auto* analyze = app.add_subcommand("analyze", "order, size, degrees, chi, omega, alpha, claws");
    int analyze_x = 0;
    add_common(analyze, true);
    auto* xopt = analyze->add_option("--x", analyze_x, "profile the complement of this vertex's neighborhood");
    analyze->callback([&, xopt] {
        runner = [&, xopt] {
            return cmd_analyze(g6, file, xopt->count() ? std::optional<int>(analyze_x) : std::nullopt,
                               budget, format == "json");
        };
    });

    // check
    auto* check = app.add_subcommand("check", "run the full structural property suite");
    int check_t = 0;
    bool assume_dc = false;
    add_common(check, true);
    auto* topt = check->add_option("--t", check_t, "asserted chromatic number for --assume-dc")
                     ->check(CLI::PositiveNumber);
    check->add_flag("--assume-dc", assume_dc,
                    "skip the oracle and treat the graph as double-critical with chi = --t");
    check->callback([&, topt] {
        runner = [&, topt] {
            return cmd_check(g6, file, topt->count() ? std::optional<int>(check_t) : std::nullopt,
                             assume_dc, budget, format == "json");
        };
    });

    // scan
    auto* scan = app.add_subcommand("scan", "filter a corpus and oracle the survivors");
    dcg::ScanConfig cfg;
    std::string range, corpus;
    int scan_t = 0;
    add_common(scan, false);
    auto* scan_pos = scan->add_option("corpus", corpus, "graph6 corpus file (- for stdin)");
    auto* scan_file = scan->add_option("--file", corpus, "graph6 corpus file");
    auto* scan_range =
        scan->add_option("--n", range, "enumerate connected graphs on N or LO..HI vertices instead");
    scan_pos->excludes(scan_file)->excludes(scan_range);
    scan_file->excludes(scan_range);
    auto* scan_topt = scan->add_option("--t", scan_t, "treat every graph as a candidate for this fixed t")
                          ->check(CLI::PositiveNumber);
    scan->add_option("--filters", cfg.filters, "comma-separated filter ids, in order")
        ->delimiter(',');
    scan->add_flag("--claw-free-only", cfg.claw_free_only, "skip graphs that contain a claw");
    scan->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--seed", cfg.seed, "seed for the sampled soundness audit");
    scan->add_option("--audit-fraction", cfg.audit_fraction, "sampling rate for audited rejections")
        ->check(CLI::Range(0.0, 1.0));
    bool no_audit = false;
    scan->add_flag("--no-audit", no_audit, "disable the rejection soundness audit");
    scan->callback([&, scan_topt] {
        runner = [&, scan_topt] {
            dcg::ScanConfig run_cfg = cfg;
            run_cfg.oracle_budget = budget;
            run_cfg.audit = !no_audit;
            if (scan_topt->count()) {
                run_cfg.t_mode = dcg::TMode::kFixed;
                run_cfg.fixed_t = scan_t;
            }
            return cmd_scan(range, corpus, run_cfg, format == "json");
        };
    });

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "emit all connected graphs on n vertices as graph6");
    int enum_n = 0;
    enumerate->add_option("--n", enum_n, "vertex count (at most 8)")
        ->required()
        ->check(CLI::PositiveNumber);
    enumerate->callback([&] {
        runner = [&] { return cmd_enumerate(enum_n); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        return runner();
    } catch (const dcg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        // a breached internal invariant is itself a reportable event
        std::cerr << "integrity violation: " << e.what() << "\n";
        return kExitEvent;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
}
