#pragma once

#include "dcg/graph.hpp"

namespace dcg {

inline Graph empty_graph(int n) { return Graph(n, {}); }

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u) edges.emplace_back(v, u);
    return Graph(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

// K_{1,n}: center 0, leaves 1..n.
inline Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

// K_n minus a perfect matching {0,1},{2,3},...; n must be even.
inline Graph cocktail_party_graph(int n) {
    if (n % 2 != 0) throw std::invalid_argument("needs an even vertex count");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            if (!(u == v + 1 && v % 2 == 0)) edges.emplace_back(v, u);
    return Graph(n, edges);
}

// Hub n joined to every vertex of C_n.
inline Graph wheel_graph(int rim) {
    std::vector<Edge> edges;
    for (int v = 0; v < rim; ++v) {
        edges.emplace_back(v, (v + 1) % rim);
        edges.emplace_back(v, rim);
    }
    return Graph(rim + 1, edges);
}

}  // namespace dcg
