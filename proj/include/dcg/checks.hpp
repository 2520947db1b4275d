#pragma once

// The double-criticality oracle and one checker per structural fact that a
// double-critical t-chromatic graph must satisfy. Each checker separates
// "premise held" (applicable) from "conclusion held" (pass): the facts
// quantify over a conjecturally empty class of graphs, so vacuity is reported
// honestly rather than folded into green. Checkers trust the verdict they are
// handed instead of recomputing it, which lets tests drive them with
// hypothetical verdicts; everything else (degrees, cliques, profiles, claws)
// is read from the graph.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dcg/clique.hpp"
#include "dcg/coloring.hpp"
#include "dcg/graph.hpp"
#include "dcg/structure.hpp"

namespace dcg {

struct CheckOutcome {
    std::string check_id;
    bool applicable = false;
    bool pass = true;  // vacuous-pass when not applicable
    bool decided = true;  // false only when a node budget cut the check short
    nlohmann::json witness = nlohmann::json::object();
    std::uint64_t cost = 0;  // engine nodes this check consumed

    const char* verdict_string() const {
        if (!decided) return "undecided";
        return applicable ? (pass ? "pass" : "fail") : "vacuous-pass";
    }
    bool failed() const { return decided && applicable && !pass; }
};

inline nlohmann::json to_json(const CheckOutcome& o) {
    return {{"id", o.check_id},
            {"applicable", o.applicable},
            {"verdict", o.verdict_string()},
            {"witness", o.witness},
            {"cost", o.cost}};
}

struct EdgeVerdict {
    int x = -1;
    int y = -1;
    int chi_after = 0;  // chi(G \ {x,y})
    bool drops_two = false;
};

struct DoubleCriticalVerdict {
    int t = 0;  // chi(G)
    bool connected = false;
    bool complete = false;
    bool is_double_critical = false;
    bool exhausted = false;  // budget ran out; is_double_critical is unreliable
    std::vector<EdgeVerdict> per_edge;
    std::uint64_t nodes = 0;
};

inline nlohmann::json to_json(const DoubleCriticalVerdict& v) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : v.per_edge)
        edges.push_back({{"x", e.x}, {"y", e.y}, {"chi_after", e.chi_after}, {"drops_two", e.drops_two}});
    return {{"t", v.t},
            {"connected", v.connected},
            {"complete", v.complete},
            {"is_double_critical", v.is_double_critical},
            {"exhausted", v.exhausted},
            {"nodes", v.nodes},
            {"per_edge", edges}};
}

namespace checkdetail {

struct BudgetGuard {
    ColoringEngine& engine;
    std::uint64_t saved;
    explicit BudgetGuard(ColoringEngine& e) : engine(e), saved(e.node_budget()) {}
    ~BudgetGuard() { engine.set_node_budget(saved); }
};

inline nlohmann::json set_json(VertexSet s) {
    nlohmann::json a = nlohmann::json::array();
    for (int v : s) a.push_back(v);
    return a;
}

inline void require_t(int t, const DoubleCriticalVerdict& v) {
    if (t != v.t)
        throw std::invalid_argument("t = " + std::to_string(t) +
                                    " does not match the verdict's t = " + std::to_string(v.t));
}

inline void require_edge(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y)) throw std::invalid_argument("xy is not an edge of the graph");
}

// Non-complete double-critical premise shared by most checkers.
inline bool noncomplete_dc(const DoubleCriticalVerdict& v) {
    return v.connected && !v.complete && v.is_double_critical;
}

inline VertexSet to_parent_set(const std::vector<int>& map, VertexSet s) {
    VertexSet out;
    for (int v : s) out = out.with(map[static_cast<std::size_t>(v)]);
    return out;
}

// G \ {x,y} with its index map; colorings handed to the per-edge checkers
// live in this graph's vertex space (ascending order of the surviving
// vertices of g).
inline InducedSubgraph minus_edge_endpoints(const Graph& g, int x, int y) {
    return induced_subgraph(g, g.vertices() - VertexSet::of({x, y}));
}

inline void require_t2_coloring(const Graph& h, const Coloring& c, int t) {
    if (!c.is_proper_for(h) || c.k != t - 2)
        throw std::invalid_argument("not a proper (t-2)-coloring of G minus the edge endpoints");
}

}  // namespace checkdetail

// Exact double-criticality verdict: one chromatic-number call for the graph
// plus one per edge, all drawing on a single node budget. Deleting two
// vertices changes chi by at most two; a verdict outside [t-2, t] can only be
// an engine fault and is asserted fatally.
inline DoubleCriticalVerdict double_critical_oracle(const Graph& g, ColoringEngine& engine,
                                                    std::uint64_t budget = kDefaultNodeBudget) {
    if (g.vertex_count() == 0) throw std::invalid_argument("oracle requires at least one vertex");
    checkdetail::BudgetGuard guard(engine);
    DoubleCriticalVerdict v;
    v.connected = is_connected(g);
    v.complete = g.is_complete();

    std::uint64_t remaining = budget;
    engine.set_node_budget(remaining);
    const ChromaticResult whole = engine.chromatic_number(g);
    v.nodes += whole.nodes;
    if (!whole.exact) {
        v.exhausted = true;
        return v;
    }
    remaining = remaining > whole.nodes ? remaining - whole.nodes : 0;
    v.t = whole.chi();

    bool all_drop = true;
    for (auto [x, y] : g.edges()) {
        const Graph h = remove_vertices(g, VertexSet::of({x, y})).graph;
        engine.set_node_budget(remaining);
        const ChromaticResult r = engine.chromatic_number(h);
        v.nodes += r.nodes;
        if (!r.exact) {
            v.exhausted = true;
            return v;
        }
        remaining = remaining > r.nodes ? remaining - r.nodes : 0;
        const int after = r.chi();
        if (after < v.t - 2 || after > v.t)
            throw std::logic_error("chi(G \\ {x,y}) outside [t-2, t]: coloring engine fault");
        v.per_edge.push_back({x, y, after, after == v.t - 2});
        if (after != v.t - 2) all_drop = false;
    }
    v.is_double_critical = v.connected && all_drop;
    return v;
}

inline DoubleCriticalVerdict double_critical_oracle(const Graph& g,
                                                    std::uint64_t budget = kDefaultNodeBudget) {
    ColoringEngine engine(budget);
    return double_critical_oracle(g, engine, budget);
}

// --- the ten basic facts -----------------------------------------------------

// (a) no K_{t-1} subgraph
inline CheckOutcome check_prop_a(const Graph& g, int t, const DoubleCriticalVerdict& v) {
    checkdetail::require_t(t, v);
    CheckOutcome o;
    o.check_id = "a";
    o.applicable = checkdetail::noncomplete_dc(v) && t >= 2;
    if (!o.applicable) return o;
    CliqueResult best = max_clique(g);
    o.cost = best.nodes;
    if (best.size >= t - 1) {
        o.pass = false;
        VertexSet w = best.witness;
        while (w.size() > t - 1) w = w.without(w.first());
        o.witness = {{"clique", checkdetail::set_json(w)}};
    }
    return o;
}

// (b) for a proper (t-2)-coloring of G \ {x,y} and a sequence of distinct
// colors j_1..j_i, a path x, v_1, .., v_i, y with c(v_k) = j_k exists.
inline CheckOutcome check_prop_b(const Graph& g, Edge xy, const Coloring& c,
                                 const std::vector<int>& sequence,
                                 const DoubleCriticalVerdict& v) {
    const auto [x, y] = xy;
    checkdetail::require_edge(g, x, y);
    const auto ind = checkdetail::minus_edge_endpoints(g, x, y);
    checkdetail::require_t2_coloring(ind.graph, c, v.t);
    if (sequence.empty()) throw std::invalid_argument("color sequence must be nonempty");
    std::uint64_t seen = 0;
    for (int j : sequence) {
        if (j < 1 || j > c.k) throw std::invalid_argument("sequence color out of range");
        if (seen >> (j - 1) & 1) throw std::invalid_argument("sequence colors must be distinct");
        seen |= std::uint64_t{1} << (j - 1);
    }

    CheckOutcome o;
    o.check_id = "b";
    o.applicable = v.is_double_critical;
    if (!o.applicable) return o;

    const auto classes = c.classes();
    std::vector<int> path;  // h-space
    // Layered DFS: position k draws from class j_{k+1}; distinct colors make
    // the vertices automatically distinct.
    std::function<bool(int, int)> extend = [&](int pos, int prev) -> bool {
        if (pos == static_cast<int>(sequence.size()))
            return g.has_edge(ind.to_parent[static_cast<std::size_t>(prev)], y);
        for (int u : classes[static_cast<std::size_t>(sequence[static_cast<std::size_t>(pos)] - 1)]) {
            const int pu = ind.to_parent[static_cast<std::size_t>(u)];
            const bool ok = pos == 0 ? g.has_edge(x, pu)
                                     : g.has_edge(ind.to_parent[static_cast<std::size_t>(prev)], pu);
            if (!ok) continue;
            path.push_back(u);
            if (extend(pos + 1, u)) return true;
            path.pop_back();
        }
        return false;
    };
    if (extend(0, -1)) {
        nlohmann::json p = nlohmann::json::array();
        p.push_back(x);
        for (int u : path) p.push_back(ind.to_parent[static_cast<std::size_t>(u)]);
        p.push_back(y);
        o.witness = {{"path", p}, {"sequence", sequence}};
    } else {
        o.pass = false;
        o.witness = {{"x", x}, {"y", y}, {"sequence", sequence}};
    }
    return o;
}

// (c) x and y share a neighbor in every class of the coloring; in particular
// the edge lies in at least t-2 triangles.
inline CheckOutcome check_prop_c(const Graph& g, Edge xy, const Coloring& c,
                                 const DoubleCriticalVerdict& v) {
    const auto [x, y] = xy;
    checkdetail::require_edge(g, x, y);
    const auto ind = checkdetail::minus_edge_endpoints(g, x, y);
    checkdetail::require_t2_coloring(ind.graph, c, v.t);

    CheckOutcome o;
    o.check_id = "c";
    o.applicable = v.is_double_critical;
    if (!o.applicable) return o;

    const VertexSet common = g.neighbors(x) & g.neighbors(y);
    const int triangles = common.size();
    std::optional<int> missed;
    for (int cls = 1; cls <= c.k; ++cls) {
        const VertexSet parents = checkdetail::to_parent_set(ind.to_parent, c.class_of_color(cls));
        if ((parents & common).empty()) {
            missed = cls;
            break;
        }
    }
    const bool triangles_ok = triangles >= v.t - 2;
    o.pass = !missed.has_value() && triangles_ok;
    o.witness = {{"x", x},
                 {"y", y},
                 {"triangles", triangles},
                 {"triangles_required", v.t - 2}};
    if (missed) o.witness["class_without_common_neighbor"] = *missed;
    return o;
}

// (d) some edge whose endpoints share a non-neighbor
inline CheckOutcome check_prop_d(const Graph& g, const DoubleCriticalVerdict& v) {
    CheckOutcome o;
    o.check_id = "d";
    o.applicable = checkdetail::noncomplete_dc(v);
    if (!o.applicable) return o;
    for (auto [x, y] : g.edges()) {
        const VertexSet z = g.vertices() - g.closed_neighborhood(x) - g.closed_neighborhood(y);
        if (!z.empty()) {
            o.witness = {{"x", x}, {"y", y}, {"common_non_neighbor", z.first()}};
            return o;
        }
    }
    o.pass = false;
    o.witness = {{"edges_scanned", g.edge_count()}};
    return o;
}

// (e) G[N(x) \ N[y]] has no isolated vertex; equivalently no vertex of N(x)
// has degree one in complement(G[N(x)]). The edge is ordered: x first.
inline CheckOutcome check_prop_e(const Graph& g, Edge xy, const DoubleCriticalVerdict& v) {
    const auto [x, y] = xy;
    checkdetail::require_edge(g, x, y);
    CheckOutcome o;
    o.check_id = "e";
    o.applicable = checkdetail::noncomplete_dc(v);
    if (!o.applicable) return o;

    const VertexSet s = g.neighbors(x) - g.closed_neighborhood(y);
    for (int w : s)
        if ((g.neighbors(w) & s).empty()) {
            o.pass = false;
            o.witness = {{"x", x}, {"y", y}, {"isolated_vertex", w}};
            return o;
        }
    const int dx = g.degree(x);
    for (int u : g.neighbors(x)) {
        const int h_degree = dx - 1 - (g.neighbors(u) & g.neighbors(x)).size();
        if (h_degree == 1) {
            o.pass = false;
            o.witness = {{"x", x}, {"degree_one_in_complement", u}};
            return o;
        }
    }
    o.witness = {{"x", x}, {"y", y}};
    return o;
}

// (f) minimum degree at least t+1
inline CheckOutcome check_prop_f(const Graph& g, int t, const DoubleCriticalVerdict& v) {
    checkdetail::require_t(t, v);
    CheckOutcome o;
    o.check_id = "f";
    o.applicable = checkdetail::noncomplete_dc(v);
    if (!o.applicable) return o;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (g.degree(u) < t + 1) {
            o.pass = false;
            o.witness = {{"vertex", u}, {"degree", g.degree(u)}, {"required", t + 1}};
            return o;
        }
    o.witness = {{"min_degree", g.min_degree()}};
    return o;
}

// (g) alpha(G[N(x)]) <= d(x) - t + 1
inline CheckOutcome check_prop_g(const Graph& g, int x, int t, const DoubleCriticalVerdict& v) {
    checkdetail::require_t(t, v);
    if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    CheckOutcome o;
    o.check_id = "g";
    o.applicable = checkdetail::noncomplete_dc(v);
    if (!o.applicable) return o;
    const auto ind = induced_subgraph(g, g.neighbors(x));
    const CliqueResult alpha = independence_number(ind.graph);
    o.cost = alpha.nodes;
    const int bound = g.degree(x) - t + 1;
    o.pass = alpha.size <= bound;
    o.witness = {{"x", x},
                 {"alpha", alpha.size},
                 {"bound", bound},
                 {"independent_set",
                  checkdetail::set_json(checkdetail::to_parent_set(ind.to_parent, alpha.witness))}};
    return o;
}

// (h) chi(G[N(x)]) <= t-3 whenever x has a non-neighbor
inline CheckOutcome check_prop_h(const Graph& g, int x, int t, const DoubleCriticalVerdict& v,
                                 ColoringEngine& engine) {
    checkdetail::require_t(t, v);
    if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    CheckOutcome o;
    o.check_id = "h";
    o.applicable = checkdetail::noncomplete_dc(v) && g.degree(x) < g.vertex_count() - 1;
    if (!o.applicable) return o;
    const auto ind = induced_subgraph(g, g.neighbors(x));
    if (t - 3 < 0) {
        o.pass = ind.graph.vertex_count() == 0;
        o.witness = {{"x", x}, {"bound", t - 3}};
        return o;
    }
    const ColorabilityResult r = engine.is_k_colorable(ind.graph, t - 3);
    o.cost = r.nodes;
    if (r.exhausted()) {
        o.decided = false;
        o.witness = {{"x", x}, {"budget_exhausted", true}};
        return o;
    }
    o.pass = r.colorable();
    o.witness = {{"x", x}, {"bound", t - 3}, {"colorable", r.colorable()}};
    return o;
}

// (i) at degree t+1 the neighborhood complement is isolated vertices plus
// cycles of length >= 5, with at least one cycle
inline CheckOutcome check_prop_i(const Graph& g, int x, int t, const DoubleCriticalVerdict& v) {
    checkdetail::require_t(t, v);
    if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    CheckOutcome o;
    o.check_id = "i";
    o.applicable = checkdetail::noncomplete_dc(v) && g.degree(x) == t + 1;
    if (!o.applicable) return o;
    const auto profile = neighborhood_complement_profile(g, x);
    o.pass = profile.conformant;
    o.witness = to_json(profile);
    return o;
}

// (j) no two adjacent vertices of degree t+1
inline CheckOutcome check_prop_j(const Graph& g, int t, const DoubleCriticalVerdict& v) {
    checkdetail::require_t(t, v);
    CheckOutcome o;
    o.check_id = "j";
    o.applicable = checkdetail::noncomplete_dc(v);
    if (!o.applicable) return o;
    for (auto [x, y] : g.edges())
        if (g.degree(x) == t + 1 && g.degree(y) == t + 1) {
            o.pass = false;
            o.witness = {{"x", x}, {"y", y}, {"degree", t + 1}};
            return o;
        }
    return o;
}

// --- reductions and the newer facts ------------------------------------------

inline Graph reduce_dominating_vertex(const Graph& g, int x) {
    if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    if (g.degree(x) != g.vertex_count() - 1)
        throw std::invalid_argument("vertex " + std::to_string(x) + " is not dominating");
    return remove_vertices(g, VertexSet::of({x})).graph;
}

// Dominating-vertex reduction: if G is double-critical then G \ x is
// double-critical and (t-1)-chromatic for every dominating x.
inline CheckOutcome check_lemma_2_2(const Graph& g, const DoubleCriticalVerdict& v,
                                    ColoringEngine& engine,
                                    std::uint64_t budget = kDefaultNodeBudget) {
    CheckOutcome o;
    o.check_id = "l22";
    VertexSet dominating;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (g.degree(x) == g.vertex_count() - 1) dominating = dominating.with(x);
    o.applicable = v.is_double_critical && g.vertex_count() >= 2 && !dominating.empty();
    if (!o.applicable) return o;
    for (int x : dominating) {
        const Graph reduced = reduce_dominating_vertex(g, x);
        const DoubleCriticalVerdict rv = double_critical_oracle(reduced, engine, budget);
        o.cost += rv.nodes;
        if (rv.exhausted) {
            o.decided = false;
            o.witness = {{"x", x}, {"budget_exhausted", true}};
            return o;
        }
        if (!rv.is_double_critical || rv.t != v.t - 1) {
            o.pass = false;
            o.witness = {{"x", x},
                         {"reduced_t", rv.t},
                         {"reduced_double_critical", rv.is_double_critical},
                         {"expected_t", v.t - 1}};
            return o;
        }
    }
    o.witness = {{"dominating_vertices", checkdetail::set_json(dominating)}};
    return o;
}

// chi(G \ N[x]) >= 3 and d(x) <= n-4 for every x with a non-neighbor
inline CheckOutcome check_lemma_2_3(const Graph& g, int x, const DoubleCriticalVerdict& v) {
    if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    CheckOutcome o;
    o.check_id = "l23";
    const int n = g.vertex_count();
    o.applicable = checkdetail::noncomplete_dc(v) && g.degree(x) < n - 1;
    if (!o.applicable) return o;
    const Graph rest = remove_vertices(g, g.closed_neighborhood(x)).graph;
    const bool odd_cycle = !is_bipartite(rest);  // chi >= 3 iff not 2-colorable
    const bool degree_ok = g.degree(x) <= n - 4;
    o.pass = odd_cycle && degree_ok;
    o.witness = {{"x", x},
                 {"chi_at_least_3", odd_cycle},
                 {"degree", g.degree(x)},
                 {"degree_bound", n - 4}};
    return o;
}

// Kempe edge: when N(x) cap N(y) cap V_i is anti-complete to N(x) cap V_j,
// some edge joins (N(y) \ N(x)) cap V_i to N(x) cap V_j.
inline CheckOutcome check_lemma_2_4a(const Graph& g, Edge xy, const Coloring& c, int i, int j,
                                     const DoubleCriticalVerdict& v) {
    const auto [x, y] = xy;
    checkdetail::require_edge(g, x, y);
    const auto ind = checkdetail::minus_edge_endpoints(g, x, y);
    checkdetail::require_t2_coloring(ind.graph, c, v.t);
    if (i < 1 || i > c.k || j < 1 || j > c.k || i == j)
        throw std::invalid_argument("need two distinct color indices in range");

    CheckOutcome o;
    o.check_id = "l24a";
    const VertexSet vi = checkdetail::to_parent_set(ind.to_parent, c.class_of_color(i));
    const VertexSet vj = checkdetail::to_parent_set(ind.to_parent, c.class_of_color(j));
    const VertexSet nx_vj = g.neighbors(x) & vj;
    const VertexSet common_vi = g.neighbors(x) & g.neighbors(y) & vi;
    o.applicable = v.is_double_critical && is_anticomplete_to(g, common_vi, nx_vj);
    if (!o.applicable) return o;

    const VertexSet side = (g.neighbors(y) - g.neighbors(x)) & vi;
    for (int a : side)
        for (int b : g.neighbors(a) & nx_vj) {
            o.witness = {{"edge", {a, b}}, {"i", i}, {"j", j}};
            return o;
        }
    o.pass = false;
    o.witness = {{"x", x},
                 {"y", y},
                 {"i", i},
                 {"j", j},
                 {"side_i", checkdetail::set_json(side)},
                 {"nx_cap_vj", checkdetail::set_json(nx_vj)}};
    return o;
}

// Degree bounds for y on a cycle of length k >= 5 of complement(G[N(x)])
// when d(x) = t+1: k >= 7 gives d(y) >= t + e(H) - 4; k = 6 gives
// d(y) >= max{t+2, t + e(H) - 5}; k = 5 gives d(y) >= max{t+2, t + e(H) - 6}.
inline CheckOutcome check_lemma_2_4b(const Graph& g, int x, int y, int t,
                                     const DoubleCriticalVerdict& v) {
    checkdetail::require_t(t, v);
    if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
        throw std::out_of_range("vertex out of range");
    CheckOutcome o;
    o.check_id = "l24b";
    o.applicable = false;
    if (!v.is_double_critical || g.degree(x) != t + 1 || !g.has_edge(x, y)) return o;
    const auto profile = neighborhood_complement_profile(g, x);
    const auto hy = profile.h_index_of(y);
    if (!hy) return o;
    int k = 0;
    for (const auto& comp : profile.components)
        if (comp.vertices.contains(*hy) && comp.kind == ComponentKind::kCycle) k = comp.size;
    if (k < 5) return o;  // premise: y on a cycle of length >= 5
    o.applicable = true;

    const int e_h = profile.edge_count;
    int bound = 0;
    if (k >= 7)
        bound = t + e_h - 4;
    else if (k == 6)
        bound = std::max(t + 2, t + e_h - 5);
    else
        bound = std::max(t + 2, t + e_h - 6);
    o.pass = g.degree(y) >= bound;
    o.witness = {{"x", x}, {"y", y}, {"cycle_length", k}, {"e_h", e_h},
                 {"bound", bound}, {"degree_y", g.degree(y)}};
    return o;
}

// Claw-free degree caps: d(x) <= 2t-4 everywhere, and d(x) <= 2t-6 for
// non-dominating x; stated for t >= 6.
inline CheckOutcome check_lemma_2_5(const Graph& g, int t, const DoubleCriticalVerdict& v) {
    checkdetail::require_t(t, v);
    CheckOutcome o;
    o.check_id = "l25";
    o.applicable = v.is_double_critical && t >= 6 && is_claw_free(g);
    if (!o.applicable) return o;
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
        const int d = g.degree(x);
        const int cap = d < n - 1 ? 2 * t - 6 : 2 * t - 4;
        if (d > cap) {
            o.pass = false;
            o.witness = {{"x", x}, {"degree", d}, {"cap", cap}, {"dominating", d == n - 1}};
            return o;
        }
    }
    o.witness = {{"max_degree", g.max_degree()}};
    return o;
}

// At degree t+1 with t >= 6: e(H) >= 8; every neighbor y has d(y) >= t+4; and
// a neighbor of degree exactly t+4 forces |N(x) cap N(y)| = t-2 with H's
// cycles exactly one C_8 or exactly two C_5.
inline CheckOutcome check_theorem_1_4(const Graph& g, int t, const DoubleCriticalVerdict& v) {
    checkdetail::require_t(t, v);
    CheckOutcome o;
    o.check_id = "thm14";
    VertexSet centers;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (g.degree(x) == t + 1) centers = centers.with(x);
    o.applicable = checkdetail::noncomplete_dc(v) && t >= 6 && !centers.empty();
    if (!o.applicable) return o;

    for (int x : centers) {
        const auto profile = neighborhood_complement_profile(g, x);
        if (profile.edge_count < 8) {
            o.pass = false;
            o.witness = {{"x", x}, {"e_h", profile.edge_count}, {"required", 8}};
            return o;
        }
        const auto cycles = profile.cycle_lengths();
        const bool spectrum_ok = cycles == std::vector<int>{8} || cycles == std::vector<int>{5, 5};
        for (int y : g.neighbors(x)) {
            const int dy = g.degree(y);
            if (dy < t + 4) {
                o.pass = false;
                o.witness = {{"x", x}, {"y", y}, {"degree_y", dy}, {"required", t + 4}};
                return o;
            }
            if (dy == t + 4) {
                const int overlap = (g.neighbors(x) & g.neighbors(y)).size();
                if (overlap != t - 2 || !spectrum_ok) {
                    o.pass = false;
                    o.witness = {{"x", x},
                                 {"y", y},
                                 {"overlap", overlap},
                                 {"expected_overlap", t - 2},
                                 {"cycle_lengths", cycles}};
                    return o;
                }
            }
        }
    }
    o.witness = {{"centers", checkdetail::set_json(centers)}};
    return o;
}

// No degree-(t+1) vertex adjacent to one of degree t+1, t+2 or t+3 (t >= 6).
inline CheckOutcome check_corollary_1_5(const Graph& g, int t, const DoubleCriticalVerdict& v) {
    checkdetail::require_t(t, v);
    CheckOutcome o;
    o.check_id = "cor15";
    o.applicable = checkdetail::noncomplete_dc(v) && t >= 6;
    if (!o.applicable) return o;
    for (auto [x, y] : g.edges()) {
        const int dx = g.degree(x);
        const int dy = g.degree(y);
        const bool bad = (dx == t + 1 && dy >= t + 1 && dy <= t + 3) ||
                         (dy == t + 1 && dx >= t + 1 && dx <= t + 3);
        if (bad) {
            o.pass = false;
            o.witness = {{"x", x}, {"y", y}, {"degree_x", dx}, {"degree_y", dy}};
            return o;
        }
    }
    return o;
}

// Claw-free 8-chromatic case: the graph is 10-regular and every neighborhood
// complement has all degrees in [2, 3].
inline CheckOutcome check_t8_clawfree_claims(const Graph& g, const DoubleCriticalVerdict& v) {
    CheckOutcome o;
    o.check_id = "t8";
    o.applicable = checkdetail::noncomplete_dc(v) && v.t == 8 && is_claw_free(g);
    if (!o.applicable) return o;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (g.degree(x) != 10) {
            o.pass = false;
            o.witness = {{"claim", "10-regular"}, {"x", x}, {"degree", g.degree(x)}};
            return o;
        }
    for (int x = 0; x < g.vertex_count(); ++x) {
        const auto profile = neighborhood_complement_profile(g, x);
        int lo = kMaxVertices, hi = 0;
        for (int d : profile.degrees) {
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        if (lo < 2 || hi > 3) {
            o.pass = false;
            o.witness = {{"claim", "complement degree window"},
                         {"x", x},
                         {"min_degree", lo},
                         {"max_degree", hi}};
            return o;
        }
    }
    o.witness = {{"regular_degree", 10}};
    return o;
}

// --- whole-suite orchestration ------------------------------------------------

struct RunAllOptions {
    // Supplying a verdict skips the oracle; tests use this to feed
    // hypothetical verdicts into the premise plumbing.
    std::optional<DoubleCriticalVerdict> verdict;
    std::uint64_t oracle_budget = kDefaultNodeBudget;
    std::uint64_t check_budget = kDefaultNodeBudget;
    std::size_t coloring_cap = 64;     // canonical colorings inspected per edge
    std::size_t sequence_cap = 4096;   // color sequences per (edge, coloring)
    bool include_b = true;             // the costliest quantifier; scans leave it out
};

struct PropertyReport {
    DoubleCriticalVerdict verdict;
    std::vector<CheckOutcome> checks;
    bool inconclusive = false;  // oracle or a check ran out of budget
    bool truncated = false;     // a coloring/sequence quantifier hit its cap
    std::uint64_t total_cost = 0;

    bool any_applicable_failure() const {
        for (const auto& c : checks)
            if (c.failed()) return true;
        return false;
    }
    const CheckOutcome* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.check_id == id) return &c;
        return nullptr;
    }
};

inline nlohmann::json to_json(const PropertyReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"verdict", to_json(r.verdict)},
            {"checks", checks},
            {"inconclusive", r.inconclusive},
            {"truncated", r.truncated},
            {"any_applicable_failure", r.any_applicable_failure()},
            {"total_cost", r.total_cost}};
}

namespace checkdetail {

// Folds per-instance outcomes into one row: applicable if any instance was,
// failing on the first applicable failure, undecided if any instance was.
struct Fold {
    CheckOutcome out;
    explicit Fold(const char* id) { out.check_id = id; }
    void add(const CheckOutcome& inst) {
        out.cost += inst.cost;
        if (!inst.decided) out.decided = false;
        if (inst.applicable && !out.applicable) out.applicable = true;
        if (inst.failed() && out.pass) {
            out.pass = false;
            out.witness = inst.witness;
        }
    }
};

// All nonempty sequences of distinct colors from 1..k in prefix order,
// invoking fn on each until the cap is reached; returns false when truncated.
inline bool for_each_sequence(int k, std::size_t cap, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> seq;
    std::size_t emitted = 0;
    bool complete = true;
    std::uint64_t used = 0;
    std::function<void(void)> rec = [&] {
        for (int c = 1; c <= k && complete; ++c) {
            if (used >> (c - 1) & 1) continue;
            if (emitted == cap) {
                complete = false;
                return;
            }
            seq.push_back(c);
            used |= std::uint64_t{1} << (c - 1);
            ++emitted;
            fn(seq);
            rec();
            used &= ~(std::uint64_t{1} << (c - 1));
            seq.pop_back();
        }
    };
    rec();
    return complete;
}

}  // namespace checkdetail

// Runs every checker against g, quantifying each one over its whole domain
// (edges, vertices, canonical colorings up to the caps, color sequences,
// class pairs). One outcome per checker; witnesses carry the first failure.
inline PropertyReport run_all(const Graph& g, const RunAllOptions& opts = {}) {
    ColoringEngine engine(opts.check_budget);
    PropertyReport report;
    report.verdict = opts.verdict ? *opts.verdict
                                  : double_critical_oracle(g, engine, opts.oracle_budget);
    const DoubleCriticalVerdict& v = report.verdict;
    if (v.exhausted) report.inconclusive = true;
    const int t = v.t;

    checkdetail::Fold fa("a"), fb("b"), fc("c"), fd("d"), fe("e"), ff("f"), fg("g"), fh("h"),
        fi("i"), fj("j"), fl22("l22"), fl23("l23"), fl24a("l24a"), fl24b("l24b"), fl25("l25"),
        fthm("thm14"), fcor("cor15"), ft8("t8");

    fa.add(check_prop_a(g, t, v));
    fd.add(check_prop_d(g, v));
    ff.add(check_prop_f(g, t, v));
    fj.add(check_prop_j(g, t, v));
    fl22.add(check_lemma_2_2(g, v, engine, opts.check_budget));
    fl25.add(check_lemma_2_5(g, t, v));
    fthm.add(check_theorem_1_4(g, t, v));
    fcor.add(check_corollary_1_5(g, t, v));
    ft8.add(check_t8_clawfree_claims(g, v));

    for (int x = 0; x < g.vertex_count(); ++x) {
        fg.add(check_prop_g(g, x, t, v));
        fh.add(check_prop_h(g, x, t, v, engine));
        fi.add(check_prop_i(g, x, t, v));
        fl23.add(check_lemma_2_3(g, x, v));
        if (v.is_double_critical && g.degree(x) == t + 1)
            for (int y : g.neighbors(x)) fl24b.add(check_lemma_2_4b(g, x, y, t, v));
    }

    // Per-edge facts; (e) is orientation-sensitive, so both directions run.
    for (auto [x, y] : g.edges()) {
        fe.add(check_prop_e(g, {x, y}, v));
        fe.add(check_prop_e(g, {y, x}, v));
    }

    // Coloring-quantified facts share one enumeration per edge; G \ {x,y}
    // does not depend on the orientation. Quantifying (b) over all sequences
    // covers both orientations (reverse the sequence); l24a does not, so it
    // runs both ways.
    if (v.is_double_critical && t >= 3) {
        for (auto [x, y] : g.edges()) {
            const auto ind = checkdetail::minus_edge_endpoints(g, x, y);
            EnumerationResult colorings =
                engine.enumerate_colorings(ind.graph, t - 2, opts.coloring_cap);
            if (colorings.truncated) report.truncated = true;
            fb.out.cost += colorings.nodes;
            for (const Coloring& c : colorings.colorings) {
                if (c.k != t - 2) continue;  // fewer classes: not a (t-2)-chromatic witness
                fc.add(check_prop_c(g, {x, y}, c, v));
                if (opts.include_b) {
                    const bool complete_b = checkdetail::for_each_sequence(
                        t - 2, opts.sequence_cap, [&](const std::vector<int>& seq) {
                            fb.add(check_prop_b(g, {x, y}, c, seq, v));
                        });
                    if (!complete_b) report.truncated = true;
                }
                for (int i = 1; i <= t - 2; ++i)
                    for (int j = 1; j <= t - 2; ++j)
                        if (i != j) {
                            fl24a.add(check_lemma_2_4a(g, {x, y}, c, i, j, v));
                            fl24a.add(check_lemma_2_4a(g, {y, x}, c, i, j, v));
                        }
            }
        }
    }

    for (auto* f : {&fa, &fb, &fc, &fd, &fe, &ff, &fg, &fh, &fi, &fj, &fl22, &fl23, &fl24a,
                    &fl24b, &fl25, &fthm, &fcor, &ft8}) {
        if (!f->out.decided) report.inconclusive = true;
        report.total_cost += f->out.cost;
        report.checks.push_back(std::move(f->out));
    }
    report.total_cost += v.nodes;
    return report;
}

}  // namespace dcg
