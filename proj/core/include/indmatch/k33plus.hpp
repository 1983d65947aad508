#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>

#include "indmatch/graph.hpp"

namespace indmatch {

/// A K3,3+ subgraph: K3,3 with sides `a` and `b` whose edge a[0]b[0] is
/// subdivided by `u`.
struct K33PlusEmbedding {
    Vertex u = -1;
    std::array<Vertex, 3> a{};
    std::array<Vertex, 3> b{};
};

namespace detail {

inline bool contains(std::span<const Vertex> list, Vertex x) {
    return std::find(list.begin(), list.end(), x) != list.end();
}

}  // namespace detail

/// Looks for a K3,3+ subgraph whose subdivision vertex is `u`, given sorted
/// neighbor lists through `neighbors(v) -> std::span<const Vertex>`.
///
/// Pairs of nonadjacent neighbors (a1, b1) of `u` are tried in lexicographic
/// order. Each branch vertex must have degree exactly 3, so in a subcubic
/// graph every edge at a branch vertex lies inside the embedding. Within each
/// side the two remaining vertices are listed in ascending order.
template <class NeighborsFn>
std::optional<K33PlusEmbedding> find_k33plus_at(NeighborsFn&& neighbors, Vertex u) {
    const std::span<const Vertex> nu = neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
        for (std::size_t j = i + 1; j < nu.size(); ++j) {
            const Vertex a1 = nu[i];
            const Vertex b1 = nu[j];
            const std::span<const Vertex> na = neighbors(a1);
            const std::span<const Vertex> nb = neighbors(b1);
            if (na.size() != 3 || nb.size() != 3 || detail::contains(na, b1)) continue;

            // N(a1) - u lies on the b side and N(b1) - u on the a side.
            std::array<Vertex, 2> b_rest{};
            std::array<Vertex, 2> a_rest{};
            std::size_t nb_rest = 0;
            std::size_t na_rest = 0;
            for (Vertex x : na) {
                if (x != u) b_rest[nb_rest++ % 2] = x;
            }
            for (Vertex x : nb) {
                if (x != u) a_rest[na_rest++ % 2] = x;
            }
            if (nb_rest != 2 || na_rest != 2) continue;

            const std::array<Vertex, 3> side_a{a1, a_rest[0], a_rest[1]};
            const std::array<Vertex, 3> side_b{b1, b_rest[0], b_rest[1]};
            std::array<Vertex, 7> all{u, side_a[0], side_a[1], side_a[2], side_b[0], side_b[1], side_b[2]};
            std::sort(all.begin(), all.end());
            if (std::adjacent_find(all.begin(), all.end()) != all.end()) continue;

            bool complete = true;
            for (std::size_t x = 0; x < 3 && complete; ++x) {
                for (std::size_t y = 0; y < 3 && complete; ++y) {
                    if (x == 0 && y == 0) continue;
                    if (!detail::contains(neighbors(side_a[x]), side_b[y])) complete = false;
                }
            }
            if (!complete) continue;

            K33PlusEmbedding h;
            h.u = u;
            h.a = side_a;
            h.b = side_b;
            std::sort(h.a.begin() + 1, h.a.end());
            std::sort(h.b.begin() + 1, h.b.end());
            return h;
        }
    }
    return std::nullopt;
}

}  // namespace indmatch
