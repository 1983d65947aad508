#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "indmatch/graph.hpp"

namespace indmatch {

/// Edges of a reference graph claimed to form an induced matching.
struct Matching {
    std::vector<Edge> edges;

    std::size_t size() const { return edges.size(); }
    bool empty() const { return edges.empty(); }

    friend bool operator==(const Matching&, const Matching&) = default;
};

struct InducedCheck {
    bool valid = true;
    /// A violating vertex pair. Equal entries mean the vertex is shared by
    /// two matching edges; otherwise the two endpoints are adjacent.
    std::optional<std::pair<Vertex, Vertex>> witness;

    explicit operator bool() const { return valid; }
};

/// Decides whether `m` is an induced matching of `g`. Throws GraphError when
/// a listed pair is not an edge of `g`.
InducedCheck verify_induced_matching(const Graph& g, const Matching& m);

}  // namespace indmatch
