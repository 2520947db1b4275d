#pragma once

// Isomorph-free enumeration of connected graphs on up to eight vertices.
// Canonical form: the minimum adjacency code over all vertex orderings, the
// upper triangle read column by column so the code grows by one full column
// per placed vertex and prefix pruning applies. Graphs are grown one vertex
// at a time: every connected graph has a vertex whose removal keeps it
// connected, so attaching a new vertex to each nonempty neighbor subset of
// each (n-1)-vertex representative reaches every class.

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "dcg/graph.hpp"

namespace dcg {

constexpr int kMaxEnumerableVertices = 8;

namespace enumdetail {

struct Canonizer {
    const Graph& g;
    int n;
    int total_bits;
    std::uint64_t best = ~std::uint64_t{0};
    int perm[kMaxEnumerableVertices] = {};
    bool used[kMaxEnumerableVertices] = {};

    explicit Canonizer(const Graph& graph)
        : g(graph), n(graph.vertex_count()), total_bits(n * (n - 1) / 2) {}

    void place(int pos, std::uint64_t code, int bits) {
        if (pos == n) {
            best = code;
            return;
        }
        if (pos >= kMaxEnumerableVertices) throw std::logic_error("canonical code past vertex cap");
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint64_t column = 0;
            for (int i = 0; i < pos; ++i)
                column = column << 1 | (g.has_edge(perm[i], v) ? 1 : 0);
            const std::uint64_t next = code << pos | column;
            const int next_bits = bits + pos;
            if (next > (best >> (total_bits - next_bits))) continue;
            used[v] = true;
            perm[pos] = v;
            place(pos + 1, next, next_bits);
            used[v] = false;
        }
    }
};

}  // namespace enumdetail

// Minimum column-major upper-triangle code over all vertex orderings.
// Equal codes <=> isomorphic graphs. Factorial in n, so capped at 8.
inline std::uint64_t canonical_code(const Graph& g) {
    if (g.vertex_count() > kMaxEnumerableVertices)
        throw std::invalid_argument("canonical code limited to 8 vertices");
    enumdetail::Canonizer c(g);
    c.place(0, 0, 0);
    return c.best;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    int bit = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            --bit;
            if (code >> bit & 1) edges.push_back({i, j});
        }
    return Graph(n, std::span<const Edge>(edges.data(), edges.size()));
}

// One representative per isomorphism class of connected graphs on n
// vertices, in ascending canonical-code order.
inline std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (n > kMaxEnumerableVertices)
        throw std::invalid_argument("internal enumeration limited to 8 vertices; use an external corpus");

    std::set<std::uint64_t> level = {0};  // the one-vertex graph
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t parent_code : level) {
            const Graph parent = graph_from_code(k - 1, parent_code);
            for (std::uint64_t attach = 1; attach < (std::uint64_t{1} << (k - 1)); ++attach) {
                std::vector<std::uint64_t> rows(static_cast<std::size_t>(k));
                for (int v = 0; v < k - 1; ++v) rows[static_cast<std::size_t>(v)] = parent.neighbors(v).bits();
                rows[static_cast<std::size_t>(k - 1)] = attach;
                for (int v : VertexSet(attach)) rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << (k - 1);
                next.insert(canonical_code(Graph::from_rows(std::move(rows))));
            }
        }
        level = std::move(next);
    }

    std::vector<Graph> out;
    out.reserve(level.size());
    for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
    return out;
}

}  // namespace dcg
