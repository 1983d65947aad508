#pragma once

#include <cstdint>
#include <random>

#include "indmatch/graph.hpp"

namespace indmatch {

/// Portable pseudorandom source: std::mt19937_64 (fully specified by the C++
/// standard) with bounded integers drawn by rejection sampling, so a seed
/// yields the same stream on every conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound);

    template <class It>
    void shuffle(It first, It last) {
        const auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) {
            const auto j = below(i);
            std::iter_swap(first + static_cast<std::ptrdiff_t>(i - 1), first + static_cast<std::ptrdiff_t>(j));
        }
    }

private:
    std::mt19937_64 engine_;
};

class GeneratorError : public GraphError {
public:
    using GraphError::GraphError;
};

/// K3,3 with edge a1-b1 subdivided: a = {0,1,2}, b = {3,4,5}, subdivision
/// vertex 6 adjacent to 0 and 3.
Graph gen_k33plus();

/// Four K3,3+ copies (vertices 7k..7k+6) and adjacent hubs 28, 29; hub 28 is
/// joined to the degree-2 vertices of copies 0 and 1, hub 29 to those of
/// copies 2 and 3. Cubic, order 30, 45 edges.
Graph gen_extremal_cubic();

/// C5 with every vertex replaced by an independent set of delta/2 vertices.
Graph gen_c5_blowup(int delta);

/// Four copies of the C5 blow-up with class sizes r+1, r+1, r, r, r
/// (delta = 2r+1) and two adjacent hubs joined to the degree-(delta-1)
/// vertices. Copy k occupies ids [k(5r+2), (k+1)(5r+2)); hubs are the last two.
Graph gen_odd_regular_extremal(int delta);

/// Random simple graph with maximum degree at most `max_degree` and at most
/// `target_m` edges, by attempt-limited insertion of uniform vertex pairs.
Graph gen_random_bounded_degree(Vertex n, std::int64_t target_m, int max_degree, std::uint64_t seed);

Graph gen_random_subcubic(Vertex n, std::int64_t target_m, std::uint64_t seed);

/// Random 3-regular graph from the pairing model, rejecting loops and
/// parallel edges.
Graph gen_random_cubic(Vertex n, std::uint64_t seed);

/// Random graph of girth at least 6: a candidate edge is kept only if both
/// endpoints are below `max_degree` and currently at distance at least 5.
Graph gen_random_girth6(Vertex n, int max_degree, std::uint64_t seed);

/// Random forest with maximum degree at most `max_degree`, grown by
/// attempt-limited insertion of pairs from different trees.
Graph gen_random_forest(Vertex n, int max_degree, std::uint64_t seed);

Graph gen_cycle(Vertex n);
Graph gen_path(Vertex n);
Graph gen_petersen();

}  // namespace indmatch
