#include <algorithm>
#include <set>

#include "indmatch/bounds.hpp"

namespace indmatch {

namespace {

class HighGirthReducer {
public:
    explicit HighGirthReducer(const Graph& g)
        : g_(g),
          alive_(static_cast<std::size_t>(g.order()), 0),
          degree_(static_cast<std::size_t>(g.order()), 0),
          end_neighbors_(static_cast<std::size_t>(g.order()), 0) {
        for (Vertex v = 0; v < g.order(); ++v) {
            degree_[idx(v)] = g.degree(v);
            alive_[idx(v)] = g.degree(v) > 0;
        }
        for (Vertex v = 0; v < g.order(); ++v) {
            if (alive_[idx(v)]) refresh_end_count(v);
        }
    }

    Matching run() {
        Matching result;
        std::vector<Vertex> doomed;
        for (;;) {
            doomed.clear();
            if (by_end_count_.empty()) {
                while (next_ < g_.order() && !alive_[idx(next_)]) ++next_;
                if (next_ == g_.order()) break;
                const Vertex u = next_;
                const Vertex v = first_alive_neighbor(u, [](int) { return true; });
                result.edges.push_back(Edge::make(u, v));
                closed_neighborhood(u, doomed);
                closed_neighborhood(v, doomed);
            } else {
                // v has the most end-vertex neighbors; ties by smallest id.
                const Vertex v = by_end_count_.begin()->second;
                const Vertex u = first_alive_neighbor(v, [](int d) { return d == 1; });
                result.edges.push_back(Edge::make(u, v));
                closed_neighborhood(v, doomed);
            }
            remove(doomed);
        }
        return result;
    }

private:
    static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

    template <class Pred>
    Vertex first_alive_neighbor(Vertex v, Pred pred) const {
        for (Vertex w : g_.neighbors(v)) {
            if (alive_[idx(w)] && pred(degree_[idx(w)])) return w;
        }
        throw std::logic_error("girth-6 reducer lost track of a neighbor");
    }

    void closed_neighborhood(Vertex v, std::vector<Vertex>& out) const {
        out.push_back(v);
        for (Vertex w : g_.neighbors(v)) {
            if (alive_[idx(w)]) out.push_back(w);
        }
    }

    void set_end_count(Vertex v, int count) {
        auto& current = end_neighbors_[idx(v)];
        if (current > 0) by_end_count_.erase({-current, v});
        current = count;
        if (current > 0) by_end_count_.emplace(-current, v);
    }

    void refresh_end_count(Vertex v) {
        int count = 0;
        for (Vertex w : g_.neighbors(v)) {
            if (alive_[idx(w)] && degree_[idx(w)] == 1) ++count;
        }
        set_end_count(v, count);
    }

    void kill(Vertex v) {
        alive_[idx(v)] = 0;
        degree_[idx(v)] = 0;
        set_end_count(v, 0);
    }

    void remove(std::vector<Vertex>& doomed) {
        std::sort(doomed.begin(), doomed.end());
        doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
        for (Vertex x : doomed) kill(x);

        std::vector<Vertex> boundary;
        for (Vertex x : doomed) {
            for (Vertex y : g_.neighbors(x)) {
                if (alive_[idx(y)]) boundary.push_back(y);
            }
        }
        std::sort(boundary.begin(), boundary.end());
        boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());

        std::vector<Vertex> touched;
        for (Vertex b : boundary) {
            int d = 0;
            for (Vertex w : g_.neighbors(b)) d += alive_[idx(w)];
            degree_[idx(b)] = d;
            if (d == 0) {
                kill(b);
                continue;
            }
            touched.push_back(b);
            for (Vertex w : g_.neighbors(b)) {
                if (alive_[idx(w)]) touched.push_back(w);
            }
        }
        for (Vertex t : touched) {
            if (alive_[idx(t)]) refresh_end_count(t);
        }
    }

    const Graph& g_;
    std::vector<char> alive_;
    std::vector<int> degree_;
    std::vector<int> end_neighbors_;
    std::set<std::pair<int, Vertex>> by_end_count_;  // (-count, vertex)
    Vertex next_ = 0;
};

}  // namespace

Matching girth6_induced_matching(const Graph& g) {
    const Girth gg = girth(g);
    if (gg && *gg < 6) throw GraphError("girth-6 algorithm needs girth >= 6, got " + std::to_string(*gg));
    return HighGirthReducer(g).run();
}

}  // namespace indmatch
