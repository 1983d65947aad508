#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace indmatch {

using Vertex = std::int32_t;

/// Undirected edge stored with `u < v`.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph on vertices 0..order()-1.
///
/// Immutable after construction. Adjacency lists are sorted; the edge list is
/// sorted lexicographically with `u < v` in every edge.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on `order` vertices. Throws GraphError on loops,
    /// duplicate edges (in either orientation) or out-of-range endpoints.
    Graph(Vertex order, std::span<const Edge> edges);
    Graph(Vertex order, std::initializer_list<Edge> edges)
        : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

    Vertex order() const { return static_cast<Vertex>(adjacency_.size()); }
    std::int64_t size() const { return static_cast<std::int64_t>(edges_.size()); }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(Vertex a, Vertex b) const;

    const std::vector<Edge>& edges() const { return edges_; }

    /// Index of `e` in edges(), if present.
    std::optional<std::size_t> edge_index(Edge e) const;

    int max_degree() const;
    /// 0 for the empty graph.
    int min_degree() const;
    std::int64_t isolated_count() const;
    bool is_regular(int d) const;

    /// Subgraph induced by `vertices` (any order, no duplicates), relabeled
    /// so that the i-th smallest id becomes vertex i.
    Graph induced_subgraph(std::span<const Vertex> vertices) const;

    /// Throws std::logic_error if symmetry, simplicity or the degree-sum
    /// identity fail.
    void check_invariants() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

/// Shortest cycle length, or nullopt for forests.
using Girth = std::optional<int>;

Girth girth(const Graph& g);

/// Vertex sets of the connected components, each sorted, ordered by smallest id.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// True iff the subgraph induced by `component` is K3,3 with one edge
/// subdivided. Throws GraphError if `component` is not a connected component
/// of `g`.
bool is_k33plus(const Graph& g, std::span<const Vertex> component);

/// Number of components isomorphic to K3,3+.
std::int64_t count_k33plus_components(const Graph& g);

bool is_forest(const Graph& g);

std::string to_string(const Girth& g);

}  // namespace indmatch
