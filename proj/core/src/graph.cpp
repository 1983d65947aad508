#include "indmatch/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "indmatch/k33plus.hpp"

namespace indmatch {

Graph::Graph(Vertex order, std::span<const Edge> edges) {
    if (order < 0) throw GraphError("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(order));
    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
        if (raw.u < 0 || raw.v < 0 || raw.u >= order || raw.v >= order) {
            throw GraphError("edge " + std::to_string(raw.u) + "-" + std::to_string(raw.v) +
                             " out of range for " + std::to_string(order) + " vertices");
        }
        if (raw.u == raw.v) throw GraphError("loop at vertex " + std::to_string(raw.u));
        edges_.push_back(Edge::make(raw.u, raw.v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw GraphError("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
    }
    for (const Edge& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
    const auto& list = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(list.begin(), list.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
    e = Edge::make(e.u, e.v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

int Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adjacency_) best = std::max(best, list.size());
    return static_cast<int>(best);
}

int Graph::min_degree() const {
    if (adjacency_.empty()) return 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& list : adjacency_) best = std::min(best, list.size());
    return static_cast<int>(best);
}

std::int64_t Graph::isolated_count() const {
    return std::count_if(adjacency_.begin(), adjacency_.end(), [](const auto& l) { return l.empty(); });
}

bool Graph::is_regular(int d) const {
    return std::all_of(adjacency_.begin(), adjacency_.end(),
                       [d](const auto& l) { return static_cast<int>(l.size()) == d; });
}

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw GraphError("induced_subgraph: repeated vertex");
    }
    std::vector<Vertex> local(adjacency_.size(), -1);
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        const Vertex v = sorted[k];
        if (v < 0 || v >= order()) throw GraphError("induced_subgraph: vertex out of range");
        local[static_cast<std::size_t>(v)] = static_cast<Vertex>(k);
    }
    std::vector<Edge> sub;
    for (Vertex v : sorted) {
        for (Vertex w : neighbors(v)) {
            if (v < w && local[static_cast<std::size_t>(w)] >= 0) {
                sub.push_back({local[static_cast<std::size_t>(v)], local[static_cast<std::size_t>(w)]});
            }
        }
    }
    return Graph(static_cast<Vertex>(sorted.size()), sub);
}

void Graph::check_invariants() const {
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < order(); ++v) {
        const auto& list = adjacency_[static_cast<std::size_t>(v)];
        degree_sum += list.size();
        if (!std::is_sorted(list.begin(), list.end()) ||
            std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw std::logic_error("adjacency of " + std::to_string(v) + " not strictly sorted");
        }
        for (Vertex w : list) {
            if (w == v) throw std::logic_error("loop at " + std::to_string(v));
            if (!has_edge(w, v)) throw std::logic_error("asymmetric adjacency " + std::to_string(v));
        }
    }
    if (degree_sum != 2 * edges_.size()) throw std::logic_error("degree sum mismatch");
}

namespace {

// Vertices of the 2-core; cycles live only there.
std::vector<char> two_core(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> deg(n);
    std::vector<char> in_core(n, 1);
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < g.order(); ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (g.degree(v) < 2) stack.push_back(v);
    }
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        if (!in_core[static_cast<std::size_t>(v)]) continue;
        in_core[static_cast<std::size_t>(v)] = 0;
        for (Vertex w : g.neighbors(v)) {
            if (in_core[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] < 2) stack.push_back(w);
        }
    }
    return in_core;
}

}  // namespace

Girth girth(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    const std::vector<char> core = two_core(g);
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> touched;
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (!core[static_cast<std::size_t>(root)]) continue;
        for (Vertex t : touched) dist[static_cast<std::size_t>(t)] = -1;
        touched.clear();
        queue.clear();
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        touched.push_back(root);
        queue.push_back(root);
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            const int dx = dist[static_cast<std::size_t>(x)];
            if (2 * dx >= best) break;
            for (Vertex y : g.neighbors(x)) {
                if (!core[static_cast<std::size_t>(y)]) continue;
                auto& dy = dist[static_cast<std::size_t>(y)];
                if (dy < 0) {
                    dy = dx + 1;
                    parent[static_cast<std::size_t>(y)] = x;
                    touched.push_back(y);
                    queue.push_back(y);
                } else if (parent[static_cast<std::size_t>(x)] != y) {
                    best = std::min(best, dx + dy + 1);
                }
            }
        }
        if (best == 3) break;
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> result;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

bool is_k33plus(const Graph& g, std::span<const Vertex> component) {
    if (component.empty()) throw GraphError("empty vertex set is not a component");
    std::vector<char> member(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : component) {
        if (v < 0 || v >= g.order() || member[static_cast<std::size_t>(v)]) {
            throw GraphError("vertex set is not a component: bad or repeated vertex");
        }
        member[static_cast<std::size_t>(v)] = 1;
    }
    for (Vertex v : component) {
        for (Vertex w : g.neighbors(v)) {
            if (!member[static_cast<std::size_t>(w)]) throw GraphError("vertex set is not a component: not closed");
        }
    }
    std::vector<Vertex> reached{component.front()};
    member[static_cast<std::size_t>(component.front())] = 2;
    for (std::size_t head = 0; head < reached.size(); ++head) {
        for (Vertex w : g.neighbors(reached[head])) {
            if (member[static_cast<std::size_t>(w)] == 1) {
                member[static_cast<std::size_t>(w)] = 2;
                reached.push_back(w);
            }
        }
    }
    if (reached.size() != component.size()) throw GraphError("vertex set is not a component: disconnected");

    if (component.size() != 7) return false;
    std::size_t degree_sum = 0;
    Vertex subdivision = -1;
    int twos = 0;
    for (Vertex v : component) {
        const int d = g.degree(v);
        degree_sum += static_cast<std::size_t>(d);
        if (d == 2) {
            ++twos;
            subdivision = v;
        } else if (d != 3) {
            return false;
        }
    }
    if (degree_sum != 20 || twos != 1) return false;
    return find_k33plus_at([&g](Vertex v) { return g.neighbors(v); }, subdivision).has_value();
}

std::int64_t count_k33plus_components(const Graph& g) {
    std::int64_t count = 0;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 7 && is_k33plus(g, comp)) ++count;
    }
    return count;
}

bool is_forest(const Graph& g) {
    return g.size() == static_cast<std::int64_t>(g.order()) -
                           static_cast<std::int64_t>(connected_components(g).size());
}

std::string to_string(const Girth& g) { return g ? std::to_string(*g) : std::string("acyclic"); }

}  // namespace indmatch
