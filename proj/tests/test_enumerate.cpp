#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dcg/enumerate.hpp"
#include "dcg/factories.hpp"
#include "oracles.hpp"
#include "test_graphs.hpp"

using namespace dcg;

TEST_CASE("connected graph counts match the published sequence") {
    const int expected[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n)
        CHECK(enumerate_connected_graphs(n).size() == static_cast<std::size_t>(expected[n - 1]));
    CHECK_THROWS_AS(enumerate_connected_graphs(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_connected_graphs(9), std::invalid_argument);
}

TEST_CASE("canonical code is an isomorphism invariant") {
    // relabeling never changes the code
    std::uint64_t state = 31337;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(oracles::mix(state) % 6);
        const Graph g = oracles::random_graph(state, n, 45);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(oracles::mix(state) % static_cast<std::uint64_t>(i + 1))]);
        std::vector<Edge> relabeled;
        for (auto [u, v] : g.edges())
            relabeled.push_back({perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]});
        const Graph h(n, std::span<const Edge>(relabeled.data(), relabeled.size()));
        CHECK(canonical_code(g) == canonical_code(h));
        CHECK(oracles::naive_isomorphic(g, h));
    }
}

TEST_CASE("canonical code separates non-isomorphic graphs") {
    // on up to 5 vertices, codes agree exactly when a permutation matches
    for (int n = 2; n <= 5; ++n) {
        const auto reps = enumerate_connected_graphs(n);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                CHECK(canonical_code(reps[i]) != canonical_code(reps[j]));
                CHECK(!oracles::naive_isomorphic(reps[i], reps[j]));
            }
    }
}

TEST_CASE("every labeled connected graph maps to exactly one representative") {
    // all 2^10 labeled graphs on 5 vertices, bucketed by canonical code
    std::set<std::uint64_t> connected_codes;
    for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int v = 1; v < 5; ++v)
            for (int u = 0; u < v; ++u) {
                if (mask >> bit & 1) edges.push_back({u, v});
                ++bit;
            }
        const Graph g(5, std::span<const Edge>(edges.data(), edges.size()));
        if (oracles::naive_connected(g)) connected_codes.insert(canonical_code(g));
    }
    const auto reps = enumerate_connected_graphs(5);
    std::set<std::uint64_t> rep_codes;
    for (const auto& g : reps) rep_codes.insert(canonical_code(g));
    CHECK(connected_codes == rep_codes);
    CHECK(rep_codes.size() == 21);
}

TEST_CASE("representatives arrive in ascending code order and decode to themselves") {
    const auto reps = enumerate_connected_graphs(6);
    std::uint64_t prev = 0;
    bool first = true;
    for (const auto& g : reps) {
        const std::uint64_t code = canonical_code(g);
        if (!first) CHECK(prev < code);
        prev = code;
        first = false;
        const Graph back = graph_from_code(6, code);
        CHECK(canonical_code(back) == code);
        CHECK(back.edge_count() == g.edge_count());
        CHECK(is_connected(g));
    }
}

TEST_CASE("code size guard") {
    CHECK_THROWS_AS(canonical_code(complete_graph(9)), std::invalid_argument);
    CHECK(canonical_code(complete_graph(1)) == 0);
    CHECK(canonical_code(complete_graph(2)) == 1);
    CHECK(canonical_code(Graph(2, {})) == 0);
}

TEST_CASE("pentagon is self-complementary by canonical code") {
    const Graph c5 = cycle_graph(5);
    CHECK(canonical_code(c5) == canonical_code(complement(c5)));
}
