#include <algorithm>
#include <set>

#include "indmatch/bounds.hpp"
#include "indmatch/oracle.hpp"

namespace indmatch {

Matching greedy_induced_matching(const Graph& g) {
    if (g.size() == 0) throw GraphError("greedy induced matching needs at least one edge");
    const ConflictGraph cg = build_conflict_graph(g);
    const std::size_t m = cg.node_count();

    std::vector<std::size_t> conflicts(m);
    std::vector<char> alive(m, 1);
    std::set<std::pair<std::size_t, std::size_t>> queue;  // (surviving conflicts, edge index)
    for (std::size_t k = 0; k < m; ++k) {
        conflicts[k] = cg.adjacency[k].size();
        queue.emplace(conflicts[k], k);
    }

    Matching result;
    std::vector<std::size_t> dropped;
    while (!queue.empty()) {
        const std::size_t chosen = queue.begin()->second;
        result.edges.push_back(cg.nodes[chosen]);

        dropped.clear();
        dropped.push_back(chosen);
        for (std::uint32_t f : cg.adjacency[chosen]) {
            if (alive[f]) dropped.push_back(f);
        }
        for (std::size_t x : dropped) {
            alive[x] = 0;
            queue.erase({conflicts[x], x});
        }
        for (std::size_t x : dropped) {
            for (std::uint32_t y : cg.adjacency[x]) {
                if (!alive[y]) continue;
                queue.erase({conflicts[y], y});
                --conflicts[y];
                queue.emplace(conflicts[y], y);
            }
        }
    }
    return result;
}

Matching forest_greedy_induced_matching(const Graph& g) {
    if (!is_forest(g)) throw GraphError("forest greedy needs an acyclic graph");
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> depth(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> order;

    auto bfs = [&](Vertex root, std::vector<Vertex>& reached) {
        reached.assign(1, root);
        depth[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        for (std::size_t head = 0; head < reached.size(); ++head) {
            const Vertex x = reached[head];
            for (Vertex y : g.neighbors(x)) {
                if (y != parent[static_cast<std::size_t>(x)]) {
                    depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
                    parent[static_cast<std::size_t>(y)] = x;
                    reached.push_back(y);
                }
            }
        }
    };

    std::vector<Vertex> reached;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2) continue;
        // The vertex farthest from any start vertex has maximum eccentricity.
        bfs(comp.front(), reached);
        Vertex root = comp.front();
        for (Vertex v : reached) {
            const auto dv = depth[static_cast<std::size_t>(v)];
            const auto dr = depth[static_cast<std::size_t>(root)];
            if (dv > dr || (dv == dr && v < root)) root = v;
        }
        bfs(root, reached);
        for (Vertex v : reached) {
            if (v != root) order.push_back(v);
        }
    }
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        const auto da = depth[static_cast<std::size_t>(a)];
        const auto db = depth[static_cast<std::size_t>(b)];
        return da != db ? da > db : a < b;
    });

    // Every edge is identified by its child endpoint.
    std::vector<char> gone(n, 0);
    auto drop_edge = [&](Vertex y, Vertex z) {
        const Vertex child = parent[static_cast<std::size_t>(z)] == y ? z : y;
        gone[static_cast<std::size_t>(child)] = 1;
    };

    Matching result;
    for (Vertex x : order) {
        if (gone[static_cast<std::size_t>(x)]) continue;
        const Vertex p = parent[static_cast<std::size_t>(x)];
        result.edges.push_back(Edge::make(x, p));
        for (Vertex centre : {x, p}) {
            for (Vertex y : g.neighbors(centre)) {
                for (Vertex z : g.neighbors(y)) drop_edge(y, z);
            }
        }
    }
    return result;
}

}  // namespace indmatch
