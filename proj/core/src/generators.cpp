#include "indmatch/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace indmatch {

std::uint64_t Rng::below(std::uint64_t bound) {
    // Reject the top 2^64 mod bound values so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold) return x % bound;
    }
}

namespace {

void join_classes(std::vector<Edge>& edges, Vertex first_a, Vertex size_a, Vertex first_b, Vertex size_b) {
    for (Vertex x = first_a; x < first_a + size_a; ++x) {
        for (Vertex y = first_b; y < first_b + size_b; ++y) edges.push_back(Edge::make(x, y));
    }
}

/// C5 blow-up with the given class sizes; returns the first id of each class.
std::array<Vertex, 5> c5_blowup_into(std::vector<Edge>& edges, Vertex offset, const std::array<Vertex, 5>& sizes) {
    std::array<Vertex, 5> first{};
    Vertex next = offset;
    for (std::size_t c = 0; c < 5; ++c) {
        first[c] = next;
        next += sizes[c];
    }
    for (std::size_t c = 0; c < 5; ++c) {
        const std::size_t d = (c + 1) % 5;
        join_classes(edges, first[c], sizes[c], first[d], sizes[d]);
    }
    return first;
}

class Adjacency {
public:
    explicit Adjacency(Vertex n) : lists_(static_cast<std::size_t>(n)) {}

    int degree(Vertex v) const { return static_cast<int>(lists_[static_cast<std::size_t>(v)].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return lists_[static_cast<std::size_t>(v)]; }
    bool adjacent(Vertex a, Vertex b) const {
        const auto& l = neighbors(a);
        return std::find(l.begin(), l.end(), b) != l.end();
    }
    void add(Vertex a, Vertex b) {
        lists_[static_cast<std::size_t>(a)].push_back(b);
        lists_[static_cast<std::size_t>(b)].push_back(a);
        edges_.push_back(Edge::make(a, b));
    }
    Graph build() const { return Graph(static_cast<Vertex>(lists_.size()), edges_); }

private:
    std::vector<std::vector<Vertex>> lists_;
    std::vector<Edge> edges_;
};

}  // namespace

Graph gen_k33plus() {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < 3; ++a) {
        for (Vertex b = 3; b < 6; ++b) {
            if (a != 0 || b != 3) edges.push_back({a, b});
        }
    }
    edges.push_back({0, 6});
    edges.push_back({3, 6});
    return Graph(7, edges);
}

Graph gen_extremal_cubic() {
    const Graph h = gen_k33plus();
    std::vector<Edge> edges;
    for (Vertex copy = 0; copy < 4; ++copy) {
        for (const Edge& e : h.edges()) edges.push_back({e.u + 7 * copy, e.v + 7 * copy});
    }
    const Vertex u = 28;
    const Vertex v = 29;
    edges.push_back({u, v});
    edges.push_back({6, u});
    edges.push_back({13, u});
    edges.push_back({20, v});
    edges.push_back({27, v});
    return Graph(30, edges);
}

Graph gen_c5_blowup(int delta) {
    if (delta < 4 || delta % 2 != 0) throw GeneratorError("c5 blow-up needs an even degree >= 4");
    const Vertex k = delta / 2;
    std::vector<Edge> edges;
    c5_blowup_into(edges, 0, {k, k, k, k, k});
    return Graph(5 * k, edges);
}

Graph gen_odd_regular_extremal(int delta) {
    if (delta < 3 || delta % 2 == 0) throw GeneratorError("odd-regular construction needs an odd degree >= 3");
    const Vertex r = (delta - 1) / 2;
    const Vertex copy_order = 5 * r + 2;
    const Vertex u = 4 * copy_order;
    const Vertex v = u + 1;
    std::vector<Edge> edges;
    for (Vertex copy = 0; copy < 4; ++copy) {
        const auto first = c5_blowup_into(edges, copy * copy_order, {r + 1, r + 1, r, r, r});
        // Class 3 sits between two classes of size r: degree delta - 1.
        const Vertex hub = copy < 2 ? u : v;
        for (Vertex x = first[3]; x < first[3] + r; ++x) edges.push_back({x, hub});
    }
    edges.push_back({u, v});
    return Graph(v + 1, edges);
}

Graph gen_random_bounded_degree(Vertex n, std::int64_t target_m, int max_degree, std::uint64_t seed) {
    if (n < 0 || target_m < 0 || max_degree < 0) throw GeneratorError("negative generator parameter");
    if (2 * target_m > static_cast<std::int64_t>(n) * max_degree) {
        throw GeneratorError("target edge count exceeds n * max_degree / 2");
    }
    Rng rng(seed);
    Adjacency adj(n);
    std::int64_t m = 0;
    const std::int64_t attempts = 20 * target_m + 20;
    for (std::int64_t t = 0; t < attempts && m < target_m && n >= 2; ++t) {
        const auto a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        const auto b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (a == b || adj.degree(a) >= max_degree || adj.degree(b) >= max_degree || adj.adjacent(a, b)) continue;
        adj.add(a, b);
        ++m;
    }
    return adj.build();
}

Graph gen_random_subcubic(Vertex n, std::int64_t target_m, std::uint64_t seed) {
    return gen_random_bounded_degree(n, target_m, 3, seed);
}

Graph gen_random_cubic(Vertex n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw GeneratorError("random cubic graph needs an even order >= 4");
    constexpr int kMaxTries = 1000;
    Rng rng(seed);
    std::vector<Vertex> points(3 * static_cast<std::size_t>(n));
    std::vector<Edge> edges(points.size() / 2);
    for (int attempt = 0; attempt < kMaxTries; ++attempt) {
        std::iota(points.begin(), points.end(), 0);
        rng.shuffle(points.begin(), points.end());
        bool simple = true;
        for (std::size_t k = 0; k < edges.size() && simple; ++k) {
            const Vertex a = points[2 * k] / 3;
            const Vertex b = points[2 * k + 1] / 3;
            simple = a != b;
            edges[k] = Edge::make(a, b);
        }
        if (!simple) continue;
        std::vector<Edge> sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        return Graph(n, sorted);
    }
    throw GeneratorError("pairing model produced no simple cubic graph in " + std::to_string(kMaxTries) + " retries");
}

Graph gen_random_girth6(Vertex n, int max_degree, std::uint64_t seed) {
    if (n < 1 || max_degree < 1) throw GeneratorError("girth-6 generator needs n >= 1 and max_degree >= 1");
    Rng rng(seed);
    Adjacency adj(n);
    std::vector<std::uint32_t> stamp(static_cast<std::size_t>(n), 0);
    std::uint32_t epoch = 0;
    std::vector<Vertex> frontier;
    std::vector<Vertex> next;

    // True if `b` is within distance 4 of `a`.
    auto near = [&](Vertex a, Vertex b) {
        ++epoch;
        frontier.assign(1, a);
        stamp[static_cast<std::size_t>(a)] = epoch;
        for (int depth = 0; depth < 4 && !frontier.empty(); ++depth) {
            next.clear();
            for (Vertex x : frontier) {
                for (Vertex y : adj.neighbors(x)) {
                    if (y == b) return true;
                    if (stamp[static_cast<std::size_t>(y)] != epoch) {
                        stamp[static_cast<std::size_t>(y)] = epoch;
                        next.push_back(y);
                    }
                }
            }
            frontier.swap(next);
        }
        return false;
    };

    const std::int64_t attempts = 10 * static_cast<std::int64_t>(n) * max_degree;
    for (std::int64_t t = 0; t < attempts && n >= 2; ++t) {
        const auto a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        const auto b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (a == b || adj.degree(a) >= max_degree || adj.degree(b) >= max_degree) continue;
        if (near(a, b)) continue;
        adj.add(a, b);
    }
    return adj.build();
}

Graph gen_random_forest(Vertex n, int max_degree, std::uint64_t seed) {
    if (n < 0 || max_degree < 1) throw GeneratorError("forest generator needs n >= 0 and max_degree >= 1");
    Rng rng(seed);
    Adjacency adj(n);
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    if (n < 2) return adj.build();
    // Between n/2 and n-1 edges, so both trees and proper forests appear.
    const std::int64_t target = n / 2 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n - n / 2)));
    const std::int64_t attempts = 10 * static_cast<std::int64_t>(n);
    std::int64_t m = 0;
    for (std::int64_t t = 0; t < attempts && m < target; ++t) {
        const auto a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        const auto b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (a == b || adj.degree(a) >= max_degree || adj.degree(b) >= max_degree) continue;
        const Vertex ra = find(a);
        const Vertex rb = find(b);
        if (ra == rb) continue;
        parent[static_cast<std::size_t>(ra)] = rb;
        adj.add(a, b);
        ++m;
    }
    return adj.build();
}

Graph gen_cycle(Vertex n) {
    if (n < 3) throw GeneratorError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.push_back(Edge::make(v, (v + 1) % n));
    return Graph(n, edges);
}

Graph gen_path(Vertex n) {
    if (n < 1) throw GeneratorError("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, edges);
}

Graph gen_petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back(Edge::make(i, (i + 1) % 5));
        edges.push_back(Edge::make(i, i + 5));
        edges.push_back(Edge::make(i + 5, (i + 2) % 5 + 5));
    }
    return Graph(10, edges);
}

}  // namespace indmatch
