#pragma once

// Exact k-colorability and chromatic number: DSATUR-ordered backtracking with
// a precolored greedy clique and first-fresh-color symmetry breaking, plus
// canonical enumeration of proper colorings (one per class-relabeling orbit).
// Every search respects a node budget; running out is a distinct outcome,
// never a wrong answer.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcg/clique.hpp"
#include "dcg/graph.hpp"

namespace dcg {

constexpr std::uint64_t kDefaultNodeBudget = std::uint64_t{1} << 26;

// Colors run 1..k; class i is V_i. A coloring's k counts its nonempty
// classes, so canonical colorings use exactly the colors 1..k.
struct Coloring {
    std::vector<int> assignment;  // vertex -> color in 1..k
    int k = 0;

    int color_of(int v) const {
        if (v < 0 || v >= static_cast<int>(assignment.size()))
            throw std::out_of_range("vertex out of range");
        return assignment[v];
    }

    std::vector<VertexSet> classes() const {
        std::vector<VertexSet> out(static_cast<std::size_t>(k));
        for (int v = 0; v < static_cast<int>(assignment.size()); ++v)
            out[static_cast<std::size_t>(assignment[v] - 1)] =
                out[static_cast<std::size_t>(assignment[v] - 1)].with(v);
        return out;
    }

    VertexSet class_of_color(int c) const {
        if (c < 1 || c > k) throw std::out_of_range("color out of range");
        VertexSet s;
        for (int v = 0; v < static_cast<int>(assignment.size()); ++v)
            if (assignment[v] == c) s = s.with(v);
        return s;
    }

    // Structurally valid for g: right size, colors in 1..k, all k classes
    // nonempty, every class independent.
    bool is_proper_for(const Graph& g) const {
        if (static_cast<int>(assignment.size()) != g.vertex_count()) return false;
        if (k < 0 || (g.vertex_count() > 0 && k < 1)) return false;
        if (k > g.vertex_count()) return false;  // nonempty classes force k <= n
        std::uint64_t seen = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            const int c = assignment[v];
            if (c < 1 || c > k) return false;
            seen |= std::uint64_t{1} << (c - 1);
        }
        if (g.vertex_count() > 0 && seen != ((k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1))
            return false;
        for (auto [x, y] : g.edges())
            if (assignment[x] == assignment[y]) return false;
        return true;
    }
};

inline std::string to_dimacs(const Coloring& c) {
    std::ostringstream out;
    out << "p col " << c.assignment.size() << ' ' << c.k << '\n';
    for (std::size_t v = 0; v < c.assignment.size(); ++v)
        out << "v " << v + 1 << ' ' << c.assignment[v] << '\n';
    return out.str();
}

inline nlohmann::json to_json(const Coloring& c) {
    nlohmann::json m = nlohmann::json::object();
    for (std::size_t v = 0; v < c.assignment.size(); ++v)
        m[std::to_string(v)] = c.assignment[v];
    return m;
}

enum class Feasibility { kColorable, kNotColorable, kBudgetExhausted };

struct ColorabilityResult {
    Feasibility feasibility = Feasibility::kNotColorable;
    std::optional<Coloring> coloring;  // present iff kColorable
    std::uint64_t nodes = 0;

    bool colorable() const { return feasibility == Feasibility::kColorable; }
    bool exhausted() const { return feasibility == Feasibility::kBudgetExhausted; }
};

struct ChromaticResult {
    bool exact = false;
    int lower_bound = 0;  // chi >= lower_bound even when inexact
    int upper_bound = 0;  // witness realizes this bound
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;

    int chi() const {
        if (!exact) throw std::logic_error("chromatic number unresolved within node budget");
        return upper_bound;
    }
};

struct EnumerationResult {
    std::vector<Coloring> colorings;
    bool truncated = false;  // cap or budget cut the stream short
    std::uint64_t nodes = 0;
};

class ColoringEngine {
  public:
    explicit ColoringEngine(std::uint64_t node_budget = kDefaultNodeBudget)
        : budget_(node_budget) {}

    void set_node_budget(std::uint64_t b) { budget_ = b; }
    std::uint64_t node_budget() const { return budget_; }

    ColorabilityResult is_k_colorable(const Graph& g, int k) {
        if (k < 0) throw std::invalid_argument("color count must be nonnegative");
        const int n = g.vertex_count();
        if (n == 0) return {Feasibility::kColorable, Coloring{{}, 0}, 0};
        if (k == 0) return {Feasibility::kNotColorable, std::nullopt, 0};

        reset(g, k);
        const VertexSet clique = greedy_clique(g);
        if (clique.size() > k) return {Feasibility::kNotColorable, std::nullopt, 0};
        for (int v : clique) assign(v, max_used_ + 1);

        const bool found = search();
        if (exhausted_) return {Feasibility::kBudgetExhausted, std::nullopt, nodes_};
        if (!found) return {Feasibility::kNotColorable, std::nullopt, nodes_};
        return {Feasibility::kColorable, snapshot(), nodes_};
    }

    ChromaticResult chromatic_number(const Graph& g) {
        const int n = g.vertex_count();
        if (n == 0) return {true, 0, 0, Coloring{{}, 0}, 0};

        // DSATUR first descent with k = n never backtracks; its color count
        // is the greedy upper bound and its coloring the initial witness.
        reset(g, n);
        search();
        ChromaticResult r;
        if (exhausted_) {  // budget below n+1 nodes: only trivial bounds
            r.lower_bound = 1;
            r.upper_bound = n;
            r.nodes = nodes_;
            return r;
        }
        r.witness = snapshot();
        r.upper_bound = r.witness->k;
        r.nodes = nodes_;

        r.lower_bound = static_cast<int>(greedy_clique(g).size());
        if (r.lower_bound < r.upper_bound)
            r.lower_bound = std::max(r.lower_bound, max_clique(g).size);

        std::uint64_t spent = r.nodes;
        for (int k = r.lower_bound; k < r.upper_bound; ++k) {
            const std::uint64_t before = budget_;
            budget_ = (budget_ > spent) ? budget_ - spent : 0;
            ColorabilityResult step = is_k_colorable(g, k);
            budget_ = before;
            spent += step.nodes;
            r.nodes = spent;
            if (step.exhausted()) {
                r.lower_bound = k;  // chi >= k still known; k itself unresolved
                return r;
            }
            if (step.colorable()) {
                r.witness = std::move(step.coloring);
                r.upper_bound = k;
                break;
            }
            r.lower_bound = k + 1;
        }
        r.exact = true;
        r.lower_bound = r.upper_bound;
        return r;
    }

    // All proper colorings of g with at most k colors, one representative per
    // class-relabeling orbit: vertices colored in ascending order, each new
    // class opened with the least unused color. Stops at cap.
    EnumerationResult enumerate_colorings(const Graph& g, int k, std::size_t cap) {
        if (cap == 0) throw std::invalid_argument("enumeration cap must be positive");
        if (k < 0) throw std::invalid_argument("color count must be nonnegative");
        EnumerationResult out;
        const int n = g.vertex_count();
        if (n == 0) {
            out.colorings.push_back(Coloring{{}, 0});
            return out;
        }
        if (k == 0) return out;
        reset(g, k);
        enumerate(0, cap, out);
        out.nodes = nodes_;
        if (exhausted_) out.truncated = true;
        return out;
    }

  private:
    const Graph* g_ = nullptr;
    int n_ = 0;
    int k_ = 0;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    int colored_count_ = 0;
    int max_used_ = 0;
    int color_[kMaxVertices];
    std::uint64_t adjacent_colors_[kMaxVertices];
    VertexSet uncolored_;

    void reset(const Graph& g, int k) {
        g_ = &g;
        n_ = g.vertex_count();
        k_ = k;
        nodes_ = 0;
        exhausted_ = false;
        colored_count_ = 0;
        max_used_ = 0;
        uncolored_ = g.vertices();
        for (int v = 0; v < n_; ++v) {
            color_[v] = 0;
            adjacent_colors_[v] = 0;
        }
    }

    void assign(int v, int c) {
        color_[v] = c;
        uncolored_ = uncolored_.without(v);
        ++colored_count_;
        max_used_ = std::max(max_used_, c);
        for (int u : g_->neighbors(v) & uncolored_)
            adjacent_colors_[u] |= std::uint64_t{1} << (c - 1);
    }

    void unassign(int v, int prev_max) {
        const int c = color_[v];
        color_[v] = 0;
        uncolored_ = uncolored_.with(v);
        --colored_count_;
        max_used_ = prev_max;
        for (int u : g_->neighbors(v) & uncolored_) {
            bool still = false;
            for (int w : g_->neighbors(u) - uncolored_)
                if (color_[w] == c) { still = true; break; }
            if (!still) adjacent_colors_[u] &= ~(std::uint64_t{1} << (c - 1));
        }
    }

    bool charge() {
        if (nodes_ >= budget_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        return true;
    }

    // Max saturation, then max degree among uncolored, then least index.
    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v : uncolored_) {
            const int sat = std::popcount(adjacent_colors_[v]);
            const int deg = (g_->neighbors(v) & uncolored_).size();
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool search() {
        if (!charge()) return false;
        if (colored_count_ == n_) return true;
        const int v = pick();
        const std::uint64_t forbidden = adjacent_colors_[v];
        const int limit = std::min(k_, max_used_ + 1);
        const int prev_max = max_used_;
        for (int c = 1; c <= limit; ++c) {
            if ((forbidden >> (c - 1)) & 1) continue;
            assign(v, c);
            if (search()) return true;
            unassign(v, prev_max);
            if (exhausted_) return false;
        }
        return false;
    }

    void enumerate(int v, std::size_t cap, EnumerationResult& out) {
        if (out.truncated || !charge()) return;
        if (v == n_) {
            if (out.colorings.size() == cap) {
                out.truncated = true;
                return;
            }
            out.colorings.push_back(snapshot());
            return;
        }
        const std::uint64_t forbidden = adjacent_colors_[v];
        const int limit = std::min(k_, max_used_ + 1);
        const int prev_max = max_used_;
        for (int c = 1; c <= limit && !out.truncated; ++c) {
            if ((forbidden >> (c - 1)) & 1) continue;
            assign(v, c);
            enumerate(v + 1, cap, out);
            unassign(v, prev_max);
        }
    }

    Coloring snapshot() const {
        Coloring c;
        c.assignment.assign(color_, color_ + n_);
        c.k = max_used_;
        return c;
    }
};

// Convenience for one-off queries; budget per call.
inline int chromatic_number_of(const Graph& g,
                               std::uint64_t budget = kDefaultNodeBudget) {
    ColoringEngine engine(budget);
    return engine.chromatic_number(g).chi();
}

}  // namespace dcg
