#pragma once

// Structural primitives: claw detection, triangle counts through an edge,
// and the decomposition of H = complement(G[N(x)]) into tagged components.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "dcg/clique.hpp"
#include "dcg/graph.hpp"

namespace dcg {

struct ClawWitness {
    int center = -1;
    std::array<int, 3> leaves{-1, -1, -1};
};

// First induced K_{1,3} found, scanning centers in ascending degree order
// (low-degree centers cannot host claws, so they exit cheaply).
inline std::optional<ClawWitness> find_claw(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (int v : order) {
        if (g.degree(v) < 3) continue;
        const VertexSet nv = g.neighbors(v);
        for (int a : nv) {
            const VertexSet past_a = nv - g.closed_neighborhood(a);
            for (int b : past_a) {
                if (b <= a) continue;
                for (int c : past_a - g.closed_neighborhood(b)) {
                    if (c <= b) continue;
                    return ClawWitness{v, {a, b, c}};
                }
            }
        }
    }
    return std::nullopt;
}

inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

inline int triangles_through_edge(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y)) throw std::invalid_argument("triangles_through_edge: xy is not an edge");
    return (g.neighbors(x) & g.neighbors(y)).size();
}

// BFS 2-coloring; a graph is 2-colorable iff it has no odd cycle.
inline bool is_bipartite(const Graph& g) {
    std::array<int, kMaxVertices> side{};
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[static_cast<std::size_t>(s)]) continue;
        side[static_cast<std::size_t>(s)] = 1;
        VertexSet frontier = VertexSet().with(s);
        while (!frontier.empty()) {
            VertexSet next;
            for (int u : frontier)
                for (int w : g.neighbors(u)) {
                    if (!side[static_cast<std::size_t>(w)]) {
                        side[static_cast<std::size_t>(w)] = 3 - side[static_cast<std::size_t>(u)];
                        next = next.with(w);
                    } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
                        return false;
                    }
                }
            frontier = next;
        }
    }
    return true;
}

enum class ComponentKind { kIsolatedVertex, kCycle, kOther };

inline const char* to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::kIsolatedVertex: return "isolated";
        case ComponentKind::kCycle: return "cycle";
        default: return "other";
    }
}

struct HComponent {
    ComponentKind kind = ComponentKind::kOther;
    VertexSet vertices;  // indices of h
    int size = 0;        // |vertices|; the cycle length when kind == kCycle
};

struct NeighborhoodComplementProfile {
    int center = -1;
    Graph h;                      // complement(G[N(center)])
    std::vector<int> to_parent;   // h index -> parent vertex, ascending
    std::vector<int> degrees;     // d_H by h index
    int edge_count = 0;           // e(H)
    std::vector<HComponent> components;
    bool conformant = false;  // only isolated vertices and cycles >= 5, with >= 1 cycle

    std::optional<int> h_index_of(int parent_vertex) const {
        for (std::size_t i = 0; i < to_parent.size(); ++i)
            if (to_parent[i] == parent_vertex) return static_cast<int>(i);
        return std::nullopt;
    }

    std::vector<int> cycle_lengths() const {
        std::vector<int> out;
        for (const auto& comp : components)
            if (comp.kind == ComponentKind::kCycle) out.push_back(comp.size);
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline NeighborhoodComplementProfile neighborhood_complement_profile(const Graph& g, int x) {
    if (x < 0 || x >= g.vertex_count()) throw std::out_of_range("profile center out of range");
    if (g.degree(x) == 0) throw std::invalid_argument("profile requires a center of positive degree");

    NeighborhoodComplementProfile p;
    p.center = x;
    auto ind = induced_subgraph(g, g.neighbors(x));
    p.h = complement(ind.graph);
    p.to_parent = std::move(ind.to_parent);
    p.edge_count = p.h.edge_count();
    for (int v = 0; v < p.h.vertex_count(); ++v) p.degrees.push_back(p.h.degree(v));

    VertexSet todo = p.h.vertices();
    bool shape_ok = true;
    int cycles = 0;
    while (!todo.empty()) {
        const int v = todo.first();
        HComponent comp;
        comp.vertices = reachable_within(p.h, v, p.h.vertices());
        comp.size = comp.vertices.size();
        todo = todo - comp.vertices;
        if (comp.size == 1) {
            comp.kind = ComponentKind::kIsolatedVertex;
        } else {
            bool two_regular = true;
            for (int u : comp.vertices)
                if (p.h.degree(u) != 2) two_regular = false;
            // a connected 2-regular component is a single cycle
            comp.kind = two_regular ? ComponentKind::kCycle : ComponentKind::kOther;
        }
        if (comp.kind == ComponentKind::kCycle) {
            ++cycles;
            if (comp.size < 5) shape_ok = false;
        } else if (comp.kind == ComponentKind::kOther) {
            shape_ok = false;
        }
        p.components.push_back(comp);
    }
    p.conformant = shape_ok && cycles >= 1;
    return p;
}

inline nlohmann::json to_json(const NeighborhoodComplementProfile& p) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : p.components) {
        nlohmann::json verts = nlohmann::json::array();
        for (int v : c.vertices) verts.push_back(p.to_parent[static_cast<std::size_t>(v)]);
        comps.push_back({{"kind", to_string(c.kind)}, {"size", c.size}, {"vertices", verts}});
    }
    std::vector<int> multiset = p.degrees;
    std::sort(multiset.begin(), multiset.end());
    return {{"center", p.center},
            {"edge_count", p.edge_count},
            {"degrees", p.degrees},
            {"degree_multiset", multiset},
            {"components", comps},
            {"conformant", p.conformant},
            {"cycle_lengths", p.cycle_lengths()}};
}

}  // namespace dcg
