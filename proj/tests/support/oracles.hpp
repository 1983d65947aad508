#pragma once

// Reference computations used only by tests. None of these go through the
// conflict graph, the branch-and-bound solver or verify_induced_matching.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "indmatch/graph.hpp"

namespace indmatch::testing {

/// Two edges may coexist in an induced matching iff their four endpoints are
/// distinct and no endpoint of one is adjacent to an endpoint of the other.
inline bool compatible(const Graph& g, const Edge& e, const Edge& f) {
    for (Vertex x : {e.u, e.v}) {
        for (Vertex y : {f.u, f.v}) {
            if (x == y || g.has_edge(x, y)) return false;
        }
    }
    return true;
}

inline bool is_induced_matching_by_definition(const Graph& g, const std::vector<Edge>& m) {
    for (std::size_t a = 0; a < m.size(); ++a) {
        if (!g.has_edge(m[a].u, m[a].v)) return false;
        for (std::size_t b = a + 1; b < m.size(); ++b) {
            if (!compatible(g, m[a], m[b])) return false;
        }
    }
    return true;
}

/// Maximum induced matching by checking every one of the 2^m edge subsets.
inline int strong_matching_by_subsets(const Graph& g) {
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    if (m > 22) throw std::invalid_argument("subset enumeration limited to 22 edges");
    std::vector<std::uint32_t> ok(m, 0);  // ok[a] bit b: edges a, b compatible
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a != b && compatible(g, edges[a], edges[b])) ok[a] |= std::uint32_t{1} << b;
        }
    }
    int best = 0;
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << m); ++subset) {
        const int size = std::popcount(subset);
        if (size <= best) continue;
        bool good = true;
        for (std::uint32_t rest = subset; rest && good; rest &= rest - 1) {
            const auto a = static_cast<std::size_t>(std::countr_zero(rest));
            good = (subset & ~(std::uint32_t{1} << a) & ~ok[a]) == 0;
        }
        if (good) best = size;
    }
    return best;
}

/// Maximum induced matching by enumerating every induced matching (include /
/// exclude each edge in order, no bounding).
inline int strong_matching_by_enumeration(const Graph& g) {
    const auto& edges = g.edges();
    std::vector<std::size_t> chosen;
    int best = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == edges.size()) {
            best = std::max(best, static_cast<int>(chosen.size()));
            return;
        }
        rec(k + 1);
        for (std::size_t c : chosen) {
            if (!compatible(g, edges[c], edges[k])) return;
        }
        chosen.push_back(k);
        rec(k + 1);
        chosen.pop_back();
    };
    rec(0);
    return best;
}

/// Shortest cycle by enumerating simple cycles with depth-first search.
inline std::optional<int> girth_by_cycle_enumeration(const Graph& g) {
    int best = 0;
    const Vertex n = g.order();
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::function<void(Vertex, Vertex, int)> dfs = [&](Vertex start, Vertex x, int len) {
        for (Vertex y : g.neighbors(x)) {
            if (y == start && len >= 3) {
                if (best == 0 || len < best) best = len;
            } else if (y > start && !on_path[static_cast<std::size_t>(y)]) {
                on_path[static_cast<std::size_t>(y)] = 1;
                dfs(start, y, len + 1);
                on_path[static_cast<std::size_t>(y)] = 0;
            }
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        on_path[static_cast<std::size_t>(s)] = 1;
        dfs(s, s, 1);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    if (best == 0) return std::nullopt;
    return best;
}

/// Generic isomorphism test against K3,3 with edge 0-3 subdivided by 6,
/// trying all 7! bijections.
inline bool isomorphic_to_k33plus_by_permutation(const Graph& g) {
    if (g.order() != 7 || g.size() != 10) return false;
    std::array<std::array<bool, 7>, 7> ref{};
    auto link = [&](int a, int b) { ref[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ref[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true; };
    for (int a = 0; a < 3; ++a) {
        for (int b = 3; b < 6; ++b) {
            if (a != 0 || b != 3) link(a, b);
        }
    }
    link(0, 6);
    link(3, 6);
    std::array<int, 7> perm{};
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = true;
        for (const Edge& e : g.edges()) {
            if (!ref[static_cast<std::size_t>(perm[static_cast<std::size_t>(e.u)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(e.v)])]) {
                same = false;
                break;
            }
        }
        if (same) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Same graph with vertex v renamed to perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back(Edge::make(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
    return Graph(g.order(), edges);
}

/// Disjoint union, second graph shifted past the first.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
    return Graph(a.order() + b.order(), edges);
}

}  // namespace indmatch::testing
