#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "dcg/scan.hpp"
#include "oracles.hpp"
#include "test_graphs.hpp"

using namespace dcg;

namespace {

ScanConfig quiet_config() {
    ScanConfig cfg;
    cfg.audit = false;
    return cfg;
}

}  // namespace

TEST_CASE("every individual filter is registered and validated") {
    const auto ids = known_filter_ids();
    for (const char* id : {"a", "c", "claim1", "cor15", "f", "i", "j", "l23", "l25", "thm14"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());

    ScanConfig cfg;
    cfg.filters = {"f", "nope"};
    CHECK_THROWS_AS(validate_scan_config(cfg), std::invalid_argument);
    cfg.filters = {"f", "a"};
    CHECK_NOTHROW(validate_scan_config(cfg));
    cfg.filters.clear();
    cfg.workers = 0;
    CHECK_THROWS_AS(validate_scan_config(cfg), std::invalid_argument);
}

TEST_CASE("filter pipeline rejects the easy shapes for the right reasons") {
    const ScanConfig cfg = quiet_config();
    const Graph c5 = cycle_graph(5);
    const auto low = filter_pipeline(c5, 3, cfg);
    CHECK(!low.survived);
    CHECK(low.filter_id == "f");  // minimum degree 2 < 4

    // bipartite graphs die at t <= 2 before any filter runs
    const auto tiny = filter_pipeline(path_graph(4), 2, cfg);
    CHECK(!tiny.survived);
    CHECK(tiny.filter_id == "tiny_t");

    // triangle-free but degree-rich: the triangle filter fires first
    std::vector<Edge> bip;
    for (int u = 0; u < 6; ++u)
        for (int v = 6; v < 12; ++v) bip.push_back({u, v});
    const Graph k66(12, std::span<const Edge>(bip.data(), bip.size()));
    const auto tri = filter_pipeline(k66, 4, cfg);
    CHECK(!tri.survived);
    CHECK(tri.filter_id == "c");

    // 6-regular with every low vertex adjacent to another: adjacency filter
    const Graph cp = cocktail_party_graph(8);  // 6-regular, chi = 4
    const auto adj = filter_pipeline(cp, 5, cfg);
    CHECK(!adj.survived);
    CHECK(adj.filter_id == "j");
}

TEST_CASE("filter order changes attribution but never the survive set") {
    ScanConfig forward = quiet_config();
    ScanConfig backward = quiet_config();
    backward.filters = default_filters(false);
    std::reverse(backward.filters.begin(), backward.filters.end());

    ColoringEngine engine;
    for (const auto& g : enumerate_connected_graphs(6)) {
        if (g.is_complete()) continue;
        const int t = engine.chromatic_number(g).chi();
        CHECK(filter_pipeline(g, t, forward).survived == filter_pipeline(g, t, backward).survived);
    }
}

TEST_CASE("claw-free-only filters stay sound outside their scope") {
    // l25 and claim1 silently pass graphs that contain claws
    ScanConfig cfg = quiet_config();
    cfg.filters = {"l25", "claim1"};
    const Graph star = star_graph(12);
    CHECK(filter_pipeline(star, 8, cfg).survived);
    // and on claw-free graphs they bite
    const Graph k30 = complete_graph(30);
    const auto c = filter_pipeline(k30, 8, cfg);
    CHECK(!c.survived);
    CHECK(c.filter_id == "l25");  // degree 29 over the cap 2t-4 = 12
    const Graph k12 = complete_graph(12);
    const auto r = filter_pipeline(k12, 8, cfg);
    CHECK(!r.survived);
    CHECK(r.filter_id == "claim1");  // 11-regular, needs 10-regular
}

TEST_CASE("enumerated scan finds exactly the complete graphs") {
    ScanConfig cfg;
    cfg.workers = 2;
    const auto report = scan_enumerated(1, 6, cfg);
    CHECK(report.graphs_seen == 143);
    CHECK(report.accounting_consistent());
    CHECK(!report.non_complete_survivor());
    REQUIRE(report.survivors.size() == 6);
    for (const auto& s : report.survivors) {
        CHECK(s.complete);
        CHECK(parse_graph6(s.graph6).is_complete());
    }
    // exhaustive audit at this size: every rejection double-checked, none wrong
    CHECK(report.audit_checked == report.filter_rejected_total());
    CHECK(report.audit_violations.empty());
    CHECK(report.reverify_failures == 0);
}

TEST_CASE("worker count never changes the numbers") {
    ScanConfig one = quiet_config();
    one.workers = 1;
    ScanConfig four = quiet_config();
    four.workers = 4;
    const auto a = scan_enumerated(1, 6, one);
    const auto b = scan_enumerated(1, 6, four);
    CHECK(a.graphs_seen == b.graphs_seen);
    CHECK(a.filter_rejections == b.filter_rejections);
    CHECK(a.oracle_calls == b.oracle_calls);
    CHECK(a.oracle_rejected == b.oracle_rejected);
    REQUIRE(a.survivors.size() == b.survivors.size());
    for (std::size_t i = 0; i < a.survivors.size(); ++i) {
        CHECK(a.survivors[i].index == b.survivors[i].index);
        CHECK(a.survivors[i].graph6 == b.survivors[i].graph6);
    }
}

TEST_CASE("stream scan counts malformed and disconnected lines") {
    std::istringstream in("D~{\n\n???bad???\nC~\nDhc\nA?\n");
    ScanConfig cfg = quiet_config();
    const auto report = scan_stream(in, cfg);
    CHECK(report.graphs_seen == 5);  // the blank line is skipped entirely
    CHECK(report.malformed == 1);
    REQUIRE(report.malformed_lines.size() == 1);
    CHECK(report.malformed_lines[0].first == 2);  // zero-based line number
    CHECK(report.disconnected == 1);              // A? = two isolated vertices
    CHECK(report.survivors.size() == 2);          // K_5 and K_4
    CHECK(report.filter_rejections.at("f") == 1); // C_5
    CHECK(report.accounting_consistent());
}

TEST_CASE("fixed-t mode scans one color bin") {
    // under t = 3 the pentagon still dies at minimum degree
    std::istringstream in("Dhc\n");
    ScanConfig cfg = quiet_config();
    cfg.t_mode = TMode::kFixed;
    cfg.fixed_t = 3;
    const auto report = scan_stream(in, cfg);
    CHECK(report.filter_rejections.at("f") == 1);
    CHECK(report.oracle_calls == 0);

    // complete graphs survive regardless of the imposed t
    std::istringstream in2("C~\n");
    const auto r2 = scan_stream(in2, cfg);
    REQUIRE(r2.survivors.size() == 1);
    CHECK(r2.survivors[0].complete);
}

TEST_CASE("budget exhaustion lands in the inconclusive bucket") {
    ScanConfig cfg = quiet_config();
    cfg.oracle_budget = 2;
    std::ostringstream corpus;
    corpus << encode_graph6(testgraphs::grotzsch()) << "\n";
    std::istringstream in(corpus.str());
    const auto report = scan_stream(in, cfg);
    CHECK(report.chi_exhausted + report.oracle_exhausted == 1);
    REQUIRE(report.budget_exhausted.size() == 1);
    CHECK(report.budget_exhausted[0].second == encode_graph6(testgraphs::grotzsch()));
    CHECK(report.survivors.empty());
    CHECK(report.accounting_consistent());
}

TEST_CASE("claw-free-only mode skips clawed graphs") {
    std::ostringstream corpus;
    corpus << encode_graph6(testgraphs::petersen()) << "\n" << encode_graph6(complete_graph(5)) << "\n";
    ScanConfig cfg = quiet_config();
    cfg.claw_free_only = true;
    std::istringstream in(corpus.str());
    const auto report = scan_stream(in, cfg);
    CHECK(report.scope_skipped == 1);
    CHECK(report.survivors.size() == 1);
    CHECK(report.accounting_consistent());
}

TEST_CASE("audit samples deterministically for a fixed seed") {
    ScanConfig cfg;
    cfg.audit_fraction = 0.5;
    cfg.seed = 12345;
    // graphs on 8 vertices: sampled, not exhaustive
    std::ostringstream corpus;
    for (const auto& g : enumerate_connected_graphs(6)) {
        if (g.is_complete()) continue;
        // pad with two isolated-free vertices to reach n = 8: join a 2-path
        std::vector<Edge> e = g.edges();
        e.push_back({0, 6});
        e.push_back({6, 7});
        corpus << encode_graph6(Graph(8, std::span<const Edge>(e.data(), e.size()))) << "\n";
    }
    std::istringstream in1(corpus.str()), in2(corpus.str());
    const auto r1 = scan_stream(in1, cfg);
    const auto r2 = scan_stream(in2, cfg);
    CHECK(r1.audit_checked == r2.audit_checked);
    CHECK(r1.audit_checked > 0);
    CHECK(r1.audit_checked < r1.filter_rejected_total());
    CHECK(r1.audit_violations.empty());
}

TEST_CASE("scan report json mirrors the counters") {
    ScanConfig cfg;
    const auto report = scan_enumerated(1, 5, cfg);
    const auto j = to_json(report);
    CHECK(j.at("graphs_seen") == report.graphs_seen);
    CHECK(j.at("survivors").size() == report.survivors.size());
    CHECK(j.at("accounting_consistent") == true);
    CHECK(j.at("oracle_calls") == report.oracle_calls);
    const std::string text = summary_text(report);
    CHECK(text.find("survivors") != std::string::npos);
}
