#include "indmatch/oracle.hpp"

#include <algorithm>
#include <bit>

namespace indmatch {

bool ConflictGraph::conflicts(std::size_t a, std::size_t b) const {
    const auto& list = adjacency[a];
    return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(b));
}

ConflictGraph build_conflict_graph(const Graph& g) {
    ConflictGraph cg;
    cg.nodes = g.edges();
    cg.adjacency.resize(cg.nodes.size());
    std::vector<Vertex> around;
    for (std::size_t k = 0; k < cg.nodes.size(); ++k) {
        const Edge e = cg.nodes[k];
        around.clear();
        around.push_back(e.u);
        around.push_back(e.v);
        for (Vertex w : g.neighbors(e.u)) around.push_back(w);
        for (Vertex w : g.neighbors(e.v)) around.push_back(w);
        std::sort(around.begin(), around.end());
        around.erase(std::unique(around.begin(), around.end()), around.end());

        auto& out = cg.adjacency[k];
        for (Vertex x : around) {
            for (Vertex y : g.neighbors(x)) {
                const auto idx = *g.edge_index(Edge::make(x, y));
                if (idx != k) out.push_back(static_cast<std::uint32_t>(idx));
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return cg;
}

BudgetExhausted::BudgetExhausted(std::uint64_t budget)
    : std::runtime_error("branch-and-bound node budget of " + std::to_string(budget) + " exhausted"),
      budget_(budget) {}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int k) { return Mask{1} << k; }

/// Maximum independent set on at most 64 nodes.
class MisSolver {
public:
    MisSolver(std::vector<Mask> adjacency, std::uint64_t budget) : adj_(std::move(adjacency)), budget_(budget) {}

    Mask solve() {
        const int count = static_cast<int>(adj_.size());
        const Mask all = count == 64 ? ~Mask{0} : bit(count) - 1;
        search(all, 0, 0);
        return best_set_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    // Greedy clique cover of `p` in ascending node order; its size bounds
    // the independence number of p from above.
    int clique_cover(Mask p) const {
        cliques_.clear();
        while (p) {
            const int v = std::countr_zero(p);
            p &= p - 1;
            bool placed = false;
            for (Mask& c : cliques_) {
                if ((c & ~adj_[static_cast<std::size_t>(v)]) == 0) {
                    c |= bit(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) cliques_.push_back(bit(v));
        }
        return static_cast<int>(cliques_.size());
    }

    void search(Mask p, int size, Mask chosen) {
        if (++nodes_ > budget_) throw BudgetExhausted(budget_);
        if (p == 0) {
            if (size > best_) {
                best_ = size;
                best_set_ = chosen;
            }
            return;
        }
        if (size + std::popcount(p) <= best_) return;
        if (size + clique_cover(p) <= best_) return;

        int pivot = -1;
        int pivot_degree = -1;
        for (Mask rest = p; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int d = std::popcount(adj_[static_cast<std::size_t>(v)] & p);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        if (pivot_degree == 0) {
            search(0, size + std::popcount(p), chosen | p);
            return;
        }
        search(p & ~adj_[static_cast<std::size_t>(pivot)] & ~bit(pivot), size + 1, chosen | bit(pivot));
        search(p & ~bit(pivot), size, chosen);
    }

    std::vector<Mask> adj_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int best_ = 0;
    Mask best_set_ = 0;
    mutable std::vector<Mask> cliques_;
};

}  // namespace

ExactResult exact_strong_matching_number(const Graph& g, std::uint64_t node_budget) {
    if (g.size() > kOracleMaxEdges) {
        throw OracleLimitError("exact solver accepts at most " + std::to_string(kOracleMaxEdges) + " edges, got " +
                               std::to_string(g.size()));
    }
    const ConflictGraph cg = build_conflict_graph(g);
    std::vector<Mask> adjacency(cg.node_count(), 0);
    for (std::size_t k = 0; k < cg.node_count(); ++k) {
        for (std::uint32_t j : cg.adjacency[k]) adjacency[k] |= bit(static_cast<int>(j));
    }
    MisSolver solver(std::move(adjacency), node_budget);
    const Mask best = solver.solve();

    ExactResult result;
    result.nodes = solver.nodes();
    for (Mask rest = best; rest; rest &= rest - 1) {
        result.witness.edges.push_back(cg.nodes[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    result.value = static_cast<std::int64_t>(result.witness.size());
    return result;
}

}  // namespace indmatch
