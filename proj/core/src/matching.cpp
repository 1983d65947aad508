#include "indmatch/matching.hpp"

#include <algorithm>
#include <unordered_map>

namespace indmatch {

InducedCheck verify_induced_matching(const Graph& g, const Matching& m) {
    for (const Edge& e : m.edges) {
        if (!g.has_edge(e.u, e.v)) {
            throw GraphError("pair " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge");
        }
    }
    // Matching edge index owning each endpoint.
    std::unordered_map<Vertex, std::size_t> owner;
    owner.reserve(2 * m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        for (Vertex x : {m.edges[k].u, m.edges[k].v}) {
            if (!owner.emplace(x, k).second) return {false, std::pair{x, x}};
        }
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
        for (Vertex x : {m.edges[k].u, m.edges[k].v}) {
            for (Vertex y : g.neighbors(x)) {
                auto it = owner.find(y);
                if (it != owner.end() && it->second != k) return {false, std::pair{std::min(x, y), std::max(x, y)}};
            }
        }
    }
    return {true, std::nullopt};
}

}  // namespace indmatch
