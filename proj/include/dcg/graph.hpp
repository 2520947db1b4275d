#pragma once

// Immutable simple graphs on at most 64 vertices. One adjacency row is one
// machine word, so neighborhood algebra (intersections, complements, cuts)
// compiles to single-word bit operations.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcg {

constexpr int kMaxVertices = 64;

// Subset of {0,...,63} as a bitmask. Plain value type; range checks against a
// concrete graph happen at the graph operations that consume it.
class VertexSet {
public:
    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet all(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.bits_ |= bit(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    // Lowest vertex in the set, -1 if empty.
    constexpr int first() const {
        return bits_ == 0 ? -1 : std::countr_zero(bits_);
    }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

    // Iterates set members in ascending order.
    class iterator {
    public:
        explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(iterator o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

private:
    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

// Simple, undirected, loopless; immutable once constructed. Rows are kept
// symmetric and diagonal-free by construction.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::span<const Edge> edges) : n_(check_order(n)), adj_(static_cast<std::size_t>(n)) {
        for (auto [u, v] : edges) add_edge_checked(u, v);
    }

    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    // Adjacency rows as produced by parsers and set algebra. Validates
    // symmetry and a clean diagonal.
    static Graph from_rows(std::vector<std::uint64_t> rows) {
        Graph g;
        g.n_ = check_order(static_cast<int>(rows.size()));
        g.adj_ = std::move(rows);
        const std::uint64_t universe = VertexSet::all(g.n_).bits();
        for (int v = 0; v < g.n_; ++v) {
            if (g.adj_[static_cast<std::size_t>(v)] & ~universe)
                throw std::invalid_argument("adjacency row exceeds vertex range");
            if (g.adj_[static_cast<std::size_t>(v)] >> v & 1)
                throw std::invalid_argument("loop on vertex " + std::to_string(v));
            for (int u : VertexSet(g.adj_[static_cast<std::size_t>(v)]))
                if (!(g.adj_[static_cast<std::size_t>(u)] >> v & 1))
                    throw std::invalid_argument("asymmetric adjacency between " + std::to_string(u) +
                                                " and " + std::to_string(v));
        }
        return g;
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[static_cast<std::size_t>(v)]);
        return twice / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v & 1) != 0;
    }

    int degree(int v) const {
        check_vertex(v);
        return std::popcount(adj_[static_cast<std::size_t>(v)]);
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return VertexSet(adj_[static_cast<std::size_t>(v)]);
    }

    VertexSet closed_neighborhood(int v) const { return neighbors(v).with(v); }

    VertexSet vertices() const { return VertexSet::all(n_); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int v = 0; v < n_; ++v)
            for (int u : neighbors(v))
                if (u > v) out.emplace_back(v, u);
        return out;
    }

    int min_degree() const {
        int d = n_ == 0 ? 0 : kMaxVertices + 1;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return n_ == 0 ? 0 : d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    static int check_order(int n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("vertex count must be in [0, 64], got " + std::to_string(n));
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_) + ")");
    }

    void add_edge_checked(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop on vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

namespace detail {
inline void check_subset(const Graph& g, VertexSet s, const char* what) {
    if (!s.subset_of(g.vertices()))
        throw std::out_of_range(std::string(what) + " not contained in the vertex set");
}
}  // namespace detail

inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    const std::uint64_t universe = VertexSet::all(n).bits();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        rows[static_cast<std::size_t>(v)] =
            universe & ~g.neighbors(v).bits() & ~(std::uint64_t{1} << v);
    return Graph::from_rows(std::move(rows));
}

// Induced subgraph relabeled to 0..|s|-1; to_parent maps new indices back.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    detail::check_subset(g, s, "induced subgraph vertex set");
    InducedSubgraph out;
    out.to_parent = s.to_vector();
    const int m = static_cast<int>(out.to_parent.size());
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        VertexSet nbrs = g.neighbors(out.to_parent[static_cast<std::size_t>(i)]) & s;
        std::uint64_t row = 0;
        int j = 0;
        for (int v : s) {
            if (nbrs.contains(v)) row |= std::uint64_t{1} << j;
            ++j;
        }
        rows[static_cast<std::size_t>(i)] = row;
    }
    out.graph = Graph::from_rows(std::move(rows));
    return out;
}

// G \ s, keeping the index map of the survivors.
inline InducedSubgraph remove_vertices(const Graph& g, VertexSet s) {
    detail::check_subset(g, s, "removal set");
    return induced_subgraph(g, g.vertices() - s);
}

inline VertexSet neighborhood(const Graph& g, int v, bool closed) {
    return closed ? g.closed_neighborhood(v) : g.neighbors(v);
}

// e_G(A, B). For disjoint sets this is the plain cut size. When the sets
// overlap, counts edges with one end in a\b and the other in b\a, plus edges
// inside a∩b once each; a\b–a∩b and b\a–a∩b edges are not counted.
inline int edges_between(const Graph& g, VertexSet a, VertexSet b) {
    detail::check_subset(g, a, "set A");
    detail::check_subset(g, b, "set B");
    const VertexSet only_a = a - b;
    const VertexSet only_b = b - a;
    const VertexSet both = a & b;
    int cut = 0;
    for (int v : only_a) cut += (g.neighbors(v) & only_b).size();
    int inner_twice = 0;
    for (int v : both) inner_twice += (g.neighbors(v) & both).size();
    return cut + inner_twice / 2;
}

inline int edge_count_within(const Graph& g, VertexSet s) {
    detail::check_subset(g, s, "set");
    int twice = 0;
    for (int v : s) twice += (g.neighbors(v) & s).size();
    return twice / 2;
}

namespace detail {
inline void check_disjoint_pair(const Graph& g, VertexSet a, VertexSet b) {
    check_subset(g, a, "set A");
    check_subset(g, b, "set B");
    if (a.intersects(b)) throw std::invalid_argument("sets must be disjoint");
}
}  // namespace detail

inline bool is_complete_to(const Graph& g, VertexSet a, VertexSet b) {
    detail::check_disjoint_pair(g, a, b);
    for (int v : a)
        if (!b.subset_of(g.neighbors(v))) return false;
    return true;
}

inline bool is_anticomplete_to(const Graph& g, VertexSet a, VertexSet b) {
    detail::check_disjoint_pair(g, a, b);
    for (int v : a)
        if (g.neighbors(v).intersects(b)) return false;
    return true;
}

// Vertices reachable from `start` inside `within` (start must belong to it).
inline VertexSet reachable_within(const Graph& g, int start, VertexSet within) {
    VertexSet seen = VertexSet().with(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next = next | g.neighbors(v);
        frontier = (next & within) - seen;
        seen = seen | frontier;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("connectivity of the empty graph is undefined");
    return reachable_within(g, 0, g.vertices()) == g.vertices();
}

}  // namespace dcg
