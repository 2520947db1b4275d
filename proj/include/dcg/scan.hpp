#pragma once

// Corpus-scale counterexample search. A cheap-to-expensive pipeline of
// conditions, each provably necessary for a non-complete double-critical
// t-chromatic graph, rejects almost everything; survivors go to the exact
// oracle. Soundness is audited: rejected graphs are re-tested against the
// oracle (exhaustively for n <= 7, sampled above) and any disagreement is
// reported as a violation, never swallowed.

#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dcg/checks.hpp"
#include "dcg/enumerate.hpp"
#include "dcg/graph6.hpp"
#include "dcg/structure.hpp"

namespace dcg {

// How the target t is chosen per graph: from an exact chromatic-number
// computation, or imposed from outside (scanning one color bin at a time).
enum class TMode { kChi, kFixed };

struct ScanConfig {
    TMode t_mode = TMode::kChi;
    int fixed_t = 0;
    std::vector<std::string> filters;  // empty -> default_filters(claw_free_only)
    bool claw_free_only = false;
    std::uint64_t oracle_budget = kDefaultNodeBudget;
    int workers = 1;
    bool audit = true;
    double audit_fraction = 0.05;  // sampling rate for rejected graphs on > 7 vertices
    std::uint64_t seed = 0x5eedc0de5eedc0deull;
};

// Cost-ordered: degree thresholds first, then triangle counts, then
// neighborhood profiles, then the clique search.
inline std::vector<std::string> default_filters(bool claw_free_only) {
    if (claw_free_only)
        return {"f", "l25", "claim1", "c", "j", "cor15", "l23", "i", "thm14", "a"};
    return {"f", "c", "j", "cor15", "l23", "i", "thm14", "a"};
}

struct FilterOutcome {
    bool survived = true;
    std::string filter_id;
    nlohmann::json witness;
};

namespace scandetail {

// Every filter returns a violation witness iff the graph cannot be a
// non-complete double-critical t-chromatic graph (connectivity and
// non-completeness are established by the caller). Filters that encode
// claw-free-only facts test claw-freeness themselves, so each entry is
// sound in isolation and the pipeline order never changes the survive set.
using FilterFn =
    std::function<std::optional<nlohmann::json>(const Graph&, int)>;

inline std::optional<nlohmann::json> filter_min_degree(const Graph& g, int t) {
    for (int v : g.vertices())
        if (g.degree(v) < t + 1)
            return nlohmann::json{{"vertex", v}, {"degree", g.degree(v)}, {"needs", t + 1}};
    return std::nullopt;
}

inline std::optional<nlohmann::json> filter_degree_cap(const Graph& g, int t) {
    if (t < 6 || !is_claw_free(g)) return std::nullopt;
    const int n = g.vertex_count();
    for (int v : g.vertices()) {
        const int cap = g.degree(v) < n - 1 ? 2 * t - 6 : 2 * t - 4;
        if (g.degree(v) > cap)
            return nlohmann::json{{"vertex", v}, {"degree", g.degree(v)}, {"cap", cap}};
    }
    return std::nullopt;
}

inline std::optional<nlohmann::json> filter_ten_regular(const Graph& g, int t) {
    if (t != 8 || !is_claw_free(g)) return std::nullopt;
    for (int v : g.vertices())
        if (g.degree(v) != 10)
            return nlohmann::json{{"vertex", v}, {"degree", g.degree(v)}, {"needs", 10}};
    return std::nullopt;
}

inline std::optional<nlohmann::json> filter_edge_triangles(const Graph& g, int t) {
    for (auto [x, y] : g.edges()) {
        const int tri = triangles_through_edge(g, x, y);
        if (tri < t - 2)
            return nlohmann::json{{"edge", {x, y}}, {"triangles", tri}, {"needs", t - 2}};
    }
    return std::nullopt;
}

inline std::optional<nlohmann::json> filter_adjacent_low(const Graph& g, int t) {
    for (auto [x, y] : g.edges())
        if (g.degree(x) == t + 1 && g.degree(y) == t + 1)
            return nlohmann::json{{"edge", {x, y}}, {"degrees", {t + 1, t + 1}}};
    return std::nullopt;
}

inline std::optional<nlohmann::json> filter_adjacent_low_band(const Graph& g, int t) {
    if (t < 6) return std::nullopt;
    for (auto [x, y] : g.edges()) {
        const int dx = g.degree(x), dy = g.degree(y);
        const bool bad = (dx == t + 1 && dy >= t + 1 && dy <= t + 3) ||
                         (dy == t + 1 && dx >= t + 1 && dx <= t + 3);
        if (bad) return nlohmann::json{{"edge", {x, y}}, {"degrees", {dx, dy}}};
    }
    return std::nullopt;
}

inline std::optional<nlohmann::json> filter_remote_odd_cycle(const Graph& g, int /*t*/) {
    const int n = g.vertex_count();
    for (int x : g.vertices()) {
        if (g.degree(x) == n - 1) continue;  // needs a non-neighbor
        if (g.degree(x) > n - 4)
            return nlohmann::json{{"vertex", x}, {"degree", g.degree(x)}, {"cap", n - 4}};
        const auto rest = remove_vertices(g, g.closed_neighborhood(x));
        if (is_bipartite(rest.graph))
            return nlohmann::json{{"vertex", x}, {"reason", "bipartite-remainder"}};
    }
    return std::nullopt;
}

inline std::optional<nlohmann::json> filter_profile(const Graph& g, int t) {
    for (int x : g.vertices()) {
        if (g.degree(x) != t + 1) continue;
        const auto profile = neighborhood_complement_profile(g, x);
        if (!profile.conformant)
            return nlohmann::json{{"vertex", x}, {"profile", to_json(profile)}};
    }
    return std::nullopt;
}

inline std::optional<nlohmann::json> filter_low_vertex_structure(const Graph& g, int t) {
    if (t < 6) return std::nullopt;
    for (int x : g.vertices()) {
        if (g.degree(x) != t + 1) continue;
        const auto profile = neighborhood_complement_profile(g, x);
        if (profile.edge_count < 8)
            return nlohmann::json{{"vertex", x}, {"h_edges", profile.edge_count}, {"needs", 8}};
        const auto cycles = profile.cycle_lengths();
        const bool spectrum_ok = cycles == std::vector<int>{8} || cycles == std::vector<int>{5, 5};
        for (int y : g.neighbors(x)) {
            const int dy = g.degree(y);
            if (dy < t + 4)
                return nlohmann::json{{"vertex", x}, {"neighbor", y}, {"degree", dy}, {"needs", t + 4}};
            if (dy == t + 4) {
                const int overlap = (g.neighbors(x) & g.neighbors(y)).size();
                if (overlap != t - 2 || !spectrum_ok)
                    return nlohmann::json{{"vertex", x},
                                          {"neighbor", y},
                                          {"overlap", overlap},
                                          {"cycles", cycles}};
            }
        }
    }
    return std::nullopt;
}

inline std::optional<nlohmann::json> filter_no_big_clique(const Graph& g, int t) {
    if (t < 2) return std::nullopt;
    VertexSet witness;
    if (contains_clique(g, t - 1, &witness))
        return nlohmann::json{{"clique", checkdetail::set_json(witness)}, {"forbidden_order", t - 1}};
    return std::nullopt;
}

inline const std::map<std::string, FilterFn>& filter_registry() {
    static const std::map<std::string, FilterFn> registry = {
        {"f", filter_min_degree},
        {"l25", filter_degree_cap},
        {"claim1", filter_ten_regular},
        {"c", filter_edge_triangles},
        {"j", filter_adjacent_low},
        {"cor15", filter_adjacent_low_band},
        {"l23", filter_remote_odd_cycle},
        {"i", filter_profile},
        {"thm14", filter_low_vertex_structure},
        {"a", filter_no_big_clique},
    };
    return registry;
}

}  // namespace scandetail

inline std::vector<std::string> known_filter_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : scandetail::filter_registry()) ids.push_back(id);
    return ids;
}

inline void validate_scan_config(const ScanConfig& cfg) {
    if (cfg.t_mode == TMode::kFixed && cfg.fixed_t < 1)
        throw std::invalid_argument("fixed t must be at least 1");
    if (cfg.workers < 1) throw std::invalid_argument("need at least one worker");
    if (cfg.audit_fraction < 0.0 || cfg.audit_fraction > 1.0)
        throw std::invalid_argument("audit fraction must lie in [0,1]");
    for (const auto& id : cfg.filters)
        if (!scandetail::filter_registry().count(id))
            throw std::invalid_argument("unknown filter id: " + id);
}

// Runs the configured filters in order; the first violation rejects.
// Precondition: g is connected and not complete. Rejecting any graph with
// t <= 2 is sound on its own: a 1-chromatic connected graph is a single
// vertex and a 2-chromatic one has chi(G minus an edge's ends) >= 1 > 0,
// so neither is double-critical and non-complete.
inline FilterOutcome filter_pipeline(const Graph& g, int t, const ScanConfig& cfg) {
    if (t <= 2) return {false, "tiny_t", nlohmann::json{{"t", t}}};
    const auto& registry = scandetail::filter_registry();
    const auto& order = cfg.filters.empty() ? default_filters(cfg.claw_free_only) : cfg.filters;
    for (const auto& id : order) {
        auto verdict = registry.at(id)(g, t);
        if (verdict) return {false, id, std::move(*verdict)};
    }
    return {true, "", nlohmann::json{}};
}

struct SurvivorRecord {
    std::size_t index = 0;
    std::string graph6;
    int t = 0;
    bool complete = false;
};

struct AuditViolation {
    std::size_t index = 0;
    std::string graph6;
    std::string filter_id;
    int t = 0;
};

struct ScanReport {
    std::uint64_t graphs_seen = 0;
    std::uint64_t malformed = 0;
    std::uint64_t disconnected = 0;
    std::uint64_t scope_skipped = 0;
    std::map<std::string, std::uint64_t> filter_rejections;
    std::uint64_t oracle_calls = 0;
    std::uint64_t oracle_rejected = 0;
    std::uint64_t chi_exhausted = 0;
    std::uint64_t oracle_exhausted = 0;
    std::vector<std::pair<std::size_t, std::string>> budget_exhausted;
    std::vector<std::pair<std::size_t, std::string>> malformed_lines;
    std::vector<SurvivorRecord> survivors;
    std::uint64_t audit_checked = 0;
    std::uint64_t audit_inconclusive = 0;
    std::vector<AuditViolation> audit_violations;
    std::uint64_t reverify_failures = 0;
    std::uint64_t wall_ms = 0;

    std::uint64_t filter_rejected_total() const {
        std::uint64_t s = 0;
        for (const auto& [id, count] : filter_rejections) s += count;
        return s;
    }

    bool non_complete_survivor() const {
        for (const auto& s : survivors)
            if (!s.complete) return true;
        return false;
    }

    // Every graph seen lands in exactly one bucket.
    bool accounting_consistent() const {
        return graphs_seen == malformed + disconnected + scope_skipped +
                                  filter_rejected_total() + chi_exhausted + oracle_calls &&
               oracle_calls == oracle_rejected + oracle_exhausted +
                                   static_cast<std::uint64_t>(survivors.size());
    }

    void merge(ScanReport&& o) {
        graphs_seen += o.graphs_seen;
        malformed += o.malformed;
        disconnected += o.disconnected;
        scope_skipped += o.scope_skipped;
        for (auto& [id, count] : o.filter_rejections) filter_rejections[id] += count;
        oracle_calls += o.oracle_calls;
        oracle_rejected += o.oracle_rejected;
        chi_exhausted += o.chi_exhausted;
        oracle_exhausted += o.oracle_exhausted;
        for (auto& e : o.budget_exhausted) budget_exhausted.push_back(std::move(e));
        for (auto& e : o.malformed_lines) malformed_lines.push_back(std::move(e));
        for (auto& s : o.survivors) survivors.push_back(std::move(s));
        audit_checked += o.audit_checked;
        audit_inconclusive += o.audit_inconclusive;
        for (auto& v : o.audit_violations) audit_violations.push_back(std::move(v));
        reverify_failures += o.reverify_failures;
    }
};

inline nlohmann::json to_json(const ScanReport& r) {
    nlohmann::json j{{"graphs_seen", r.graphs_seen},
                     {"malformed", r.malformed},
                     {"disconnected", r.disconnected},
                     {"scope_skipped", r.scope_skipped},
                     {"filter_rejections", r.filter_rejections},
                     {"oracle_calls", r.oracle_calls},
                     {"oracle_rejected", r.oracle_rejected},
                     {"chi_exhausted", r.chi_exhausted},
                     {"oracle_exhausted", r.oracle_exhausted},
                     {"audit_checked", r.audit_checked},
                     {"audit_inconclusive", r.audit_inconclusive},
                     {"reverify_failures", r.reverify_failures},
                     {"wall_ms", r.wall_ms},
                     {"accounting_consistent", r.accounting_consistent()}};
    j["budget_exhausted"] = nlohmann::json::array();
    for (const auto& [index, g6] : r.budget_exhausted)
        j["budget_exhausted"].push_back({{"index", index}, {"graph6", g6}});
    j["malformed_lines"] = nlohmann::json::array();
    for (const auto& [index, message] : r.malformed_lines)
        j["malformed_lines"].push_back({{"index", index}, {"error", message}});
    j["survivors"] = nlohmann::json::array();
    for (const auto& s : r.survivors)
        j["survivors"].push_back(
            {{"index", s.index}, {"graph6", s.graph6}, {"t", s.t}, {"complete", s.complete}});
    j["audit_violations"] = nlohmann::json::array();
    for (const auto& v : r.audit_violations)
        j["audit_violations"].push_back(
            {{"index", v.index}, {"graph6", v.graph6}, {"filter_id", v.filter_id}, {"t", v.t}});
    return j;
}

inline std::string summary_text(const ScanReport& r) {
    std::ostringstream out;
    out << "graphs seen        " << r.graphs_seen << "\n";
    if (r.malformed) out << "malformed          " << r.malformed << "\n";
    if (r.disconnected) out << "disconnected       " << r.disconnected << "\n";
    if (r.scope_skipped) out << "out of scope       " << r.scope_skipped << "\n";
    for (const auto& [id, count] : r.filter_rejections)
        out << "rejected by " << id << std::string(id.size() < 7 ? 7 - id.size() : 1, ' ')
            << count << "\n";
    out << "oracle calls       " << r.oracle_calls << "\n";
    out << "oracle rejected    " << r.oracle_rejected << "\n";
    if (r.chi_exhausted || r.oracle_exhausted)
        out << "budget exhausted   " << (r.chi_exhausted + r.oracle_exhausted) << "\n";
    if (r.audit_checked)
        out << "audit checked      " << r.audit_checked << " (violations "
            << r.audit_violations.size() << ")\n";
    if (r.reverify_failures) out << "reverify failures  " << r.reverify_failures << "\n";
    out << "survivors          " << r.survivors.size() << "\n";
    for (const auto& s : r.survivors)
        out << "  [" << s.index << "] " << s.graph6 << "  t=" << s.t
            << (s.complete ? "  (complete)" : "  ** NON-COMPLETE **") << "\n";
    out << "wall time          " << r.wall_ms << " ms\n";
    return out.str();
}

namespace scandetail {

struct WorkItem {
    std::size_t index;
    std::string line;   // graph6/sparse6 text (stream mode)
    Graph graph;        // pre-built graph (enumeration mode)
    bool prebuilt = false;
};

inline void audit_rejection(const Graph& g, const std::string& g6, std::size_t index,
                            const std::string& filter_id, const ScanConfig& cfg,
                            ColoringEngine& engine, ScanReport& report) {
    if (!cfg.audit) return;
    bool take = g.vertex_count() <= 7;
    if (!take) {
        std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
        take = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < cfg.audit_fraction;
    }
    if (!take) return;
    report.audit_checked += 1;
    const auto v = double_critical_oracle(g, engine, cfg.oracle_budget);
    if (v.exhausted) {
        report.audit_inconclusive += 1;
        return;
    }
    const bool refutes = v.is_double_critical && !v.complete &&
                         (cfg.t_mode == TMode::kChi || v.t == cfg.fixed_t);
    if (refutes) report.audit_violations.push_back({index, g6, filter_id, v.t});
}

inline void process_graph(const Graph& g, const std::string& g6, std::size_t index,
                          const ScanConfig& cfg, ColoringEngine& engine, ScanReport& report) {
    report.graphs_seen += 1;
    if (g.vertex_count() == 0 || !is_connected(g)) {
        report.disconnected += 1;
        return;
    }
    if (cfg.claw_free_only && !is_claw_free(g)) {
        report.scope_skipped += 1;
        return;
    }
    if (g.is_complete()) {
        // K_n is double-critical with t = n; a survivor but never a finding.
        report.oracle_calls += 1;
        report.survivors.push_back({index, g6, g.vertex_count(), true});
        return;
    }

    int t = cfg.fixed_t;
    std::uint64_t spent = 0;
    if (cfg.t_mode == TMode::kChi) {
        engine.set_node_budget(cfg.oracle_budget);
        const auto chi = engine.chromatic_number(g);
        if (!chi.exact) {
            report.chi_exhausted += 1;
            report.budget_exhausted.emplace_back(index, g6);
            return;
        }
        t = chi.chi();
        spent = chi.nodes;
    }

    const auto outcome = filter_pipeline(g, t, cfg);
    if (!outcome.survived) {
        report.filter_rejections[outcome.filter_id] += 1;
        audit_rejection(g, g6, index, outcome.filter_id, cfg, engine, report);
        return;
    }

    report.oracle_calls += 1;
    const std::uint64_t remaining =
        cfg.oracle_budget > spent ? cfg.oracle_budget - spent : std::uint64_t{1};
    const auto v = double_critical_oracle(g, engine, remaining);
    if (v.exhausted) {
        report.oracle_exhausted += 1;
        report.budget_exhausted.emplace_back(index, g6);
        return;
    }
    if (v.is_double_critical)
        report.survivors.push_back({index, g6, v.t, false});
    else
        report.oracle_rejected += 1;
}

inline void process_item(const WorkItem& item, const ScanConfig& cfg, ColoringEngine& engine,
                         ScanReport& report) {
    if (item.prebuilt) {
        process_graph(item.graph, encode_graph6(item.graph), item.index, cfg, engine, report);
        return;
    }
    Graph g;
    try {
        g = parse_graph6(item.line);
    } catch (const ParseError& e) {
        report.graphs_seen += 1;
        report.malformed += 1;
        report.malformed_lines.emplace_back(item.index, e.what());
        return;
    }
    process_graph(g, item.line, item.index, cfg, engine, report);
}

inline void run_batch(std::vector<WorkItem>&& batch, const ScanConfig& cfg, ScanReport& report) {
    const int workers =
        std::min<int>(cfg.workers, static_cast<int>(batch.size()) > 0 ? static_cast<int>(batch.size()) : 1);
    if (workers <= 1) {
        ColoringEngine engine(cfg.oracle_budget);
        for (const auto& item : batch) process_item(item, cfg, engine, report);
        return;
    }
    std::vector<ScanReport> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    const std::size_t total = batch.size();
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = total * static_cast<std::size_t>(w) / static_cast<std::size_t>(workers);
        const std::size_t hi =
            total * (static_cast<std::size_t>(w) + 1) / static_cast<std::size_t>(workers);
        threads.emplace_back([&batch, &cfg, &parts, w, lo, hi] {
            ColoringEngine engine(cfg.oracle_budget);
            for (std::size_t i = lo; i < hi; ++i) process_item(batch[i], cfg, engine, parts[static_cast<std::size_t>(w)]);
        });
    }
    for (auto& th : threads) th.join();
    for (auto& part : parts) report.merge(std::move(part));
}

// Survivors get one more single-threaded oracle pass before the report is
// final; a disagreement would mean a concurrency bug, and is surfaced.
inline void reverify_survivors(const ScanConfig& cfg, ScanReport& report) {
    ColoringEngine engine(cfg.oracle_budget);
    std::vector<SurvivorRecord> kept;
    for (auto& s : report.survivors) {
        if (s.complete) {
            kept.push_back(std::move(s));
            continue;
        }
        const Graph g = parse_graph6(s.graph6);
        const auto v = double_critical_oracle(g, engine, cfg.oracle_budget);
        if (v.is_double_critical && !v.exhausted) {
            kept.push_back(std::move(s));
        } else {
            report.reverify_failures += 1;
            report.oracle_rejected += 1;
        }
    }
    report.survivors = std::move(kept);
}

}  // namespace scandetail

// Scans a stream of graph6/sparse6 lines (one graph per line). Lines are
// numbered from zero; blank lines are skipped without counting.
inline ScanReport scan_stream(std::istream& in, const ScanConfig& cfg) {
    validate_scan_config(cfg);
    const auto start = std::chrono::steady_clock::now();
    ScanReport report;
    const std::size_t batch_size = static_cast<std::size_t>(1024) * static_cast<std::size_t>(cfg.workers);
    std::vector<scandetail::WorkItem> batch;
    std::size_t index = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t here = index++;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        batch.push_back({here, line, Graph(), false});
        if (batch.size() >= batch_size) {
            scandetail::run_batch(std::move(batch), cfg, report);
            batch.clear();
        }
    }
    if (!batch.empty()) scandetail::run_batch(std::move(batch), cfg, report);
    scandetail::reverify_survivors(cfg, report);
    report.wall_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                    std::chrono::steady_clock::now() - start)
                                                    .count());
    return report;
}

// Scans every connected graph on n_lo..n_hi vertices (inclusive), one
// isomorphism class each, indices running across the whole range.
inline ScanReport scan_enumerated(int n_lo, int n_hi, const ScanConfig& cfg) {
    validate_scan_config(cfg);
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad vertex range");
    const auto start = std::chrono::steady_clock::now();
    ScanReport report;
    std::size_t index = 0;
    for (int n = n_lo; n <= n_hi; ++n) {
        std::vector<scandetail::WorkItem> batch;
        for (auto& g : enumerate_connected_graphs(n))
            batch.push_back({index++, std::string(), std::move(g), true});
        scandetail::run_batch(std::move(batch), cfg, report);
    }
    scandetail::reverify_survivors(cfg, report);
    report.wall_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                    std::chrono::steady_clock::now() - start)
                                                    .count());
    return report;
}

}  // namespace dcg
