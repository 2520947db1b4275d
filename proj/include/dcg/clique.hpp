#pragma once

// Exact maximum clique by branch and bound with a greedy-coloring bound.
// Candidate sets are single words, so the whole search state lives in
// registers; n <= 64 keeps worst cases comfortably sub-second.

#include <cstdint>

#include "dcg/graph.hpp"

namespace dcg {

struct CliqueResult {
    int size = 0;
    VertexSet witness;
    std::uint64_t nodes = 0;  // search tree nodes expanded
};

namespace cliquedetail {

struct Searcher {
    const Graph& g;
    int target;  // stop as soon as a clique this large is known; 0 = exact maximum
    int best = 0;
    VertexSet best_set{};
    std::uint64_t nodes = 0;

    bool done() const { return target > 0 && best >= target; }

    // Greedy color classes over `cand`; vertices come back ordered by class
    // with upper bounds class-index+1. Classic bound: a clique meets each
    // class at most once.
    int color_order(VertexSet cand, int out_vertex[], int out_bound[]) const {
        int count = 0;
        int color = 0;
        while (!cand.empty()) {
            ++color;
            VertexSet open = cand;
            while (!open.empty()) {
                const int v = open.first();
                open = open - g.neighbors(v);
                open = open.without(v);
                cand = cand.without(v);
                out_vertex[count] = v;
                out_bound[count] = color;
                ++count;
            }
        }
        return count;
    }

    void expand(VertexSet chosen, int chosen_size, VertexSet cand) {
        ++nodes;
        int order[kMaxVertices];
        int bound[kMaxVertices];
        const int count = color_order(cand, order, bound);
        for (int i = count - 1; i >= 0; --i) {
            if (chosen_size + bound[i] <= best) return;
            const int v = order[i];
            const VertexSet next = cand & g.neighbors(v);
            if (chosen_size + 1 > best) {
                best = chosen_size + 1;
                best_set = chosen.with(v);
                if (done()) return;
            }
            if (!next.empty()) {
                expand(chosen.with(v), chosen_size + 1, next);
                if (done()) return;
            }
            cand = cand.without(v);
        }
    }
};

}  // namespace cliquedetail

inline CliqueResult max_clique(const Graph& g) {
    cliquedetail::Searcher s{g, 0};
    if (g.vertex_count() > 0) s.expand(VertexSet(), 0, g.vertices());
    return {s.best, s.best_set, s.nodes};
}

// Early-exit clique search: true iff omega(g) >= k, with a witness clique of
// size exactly k on success.
inline bool contains_clique(const Graph& g, int k, VertexSet* witness = nullptr) {
    if (k < 1) throw std::invalid_argument("clique size must be at least 1");
    if (k > g.vertex_count()) return false;
    cliquedetail::Searcher s{g, k};
    s.expand(VertexSet(), 0, g.vertices());
    if (s.best < k) return false;
    if (witness) {
        VertexSet w = s.best_set;
        while (w.size() > k) w = w.without(w.first());
        *witness = w;
    }
    return true;
}

// alpha(g) = omega of the complement; witness is pairwise non-adjacent.
inline CliqueResult independence_number(const Graph& g) { return max_clique(complement(g)); }

// Cheap clique lower bound: grow greedily from each vertex, keeping
// highest-degree candidates first. Deterministic.
inline VertexSet greedy_clique(const Graph& g) {
    VertexSet best;
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexSet clique = VertexSet().with(v);
        VertexSet cand = g.neighbors(v);
        while (!cand.empty()) {
            int pick = -1;
            int pick_degree = -1;
            for (int u : cand) {
                const int d = (g.neighbors(u) & cand).size();
                if (d > pick_degree) {
                    pick = u;
                    pick_degree = d;
                }
            }
            clique = clique.with(pick);
            cand = cand & g.neighbors(pick);
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

}  // namespace dcg
