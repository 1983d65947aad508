#include "indmatch/reduction.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "indmatch/bounds.hpp"
#include "indmatch/k33plus.hpp"
#include "indmatch/oracle.hpp"

namespace indmatch {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

/// Subcubic graph under vertex deletion. Neighbor lists stay sorted.
class DynamicSubcubic {
public:
    explicit DynamicSubcubic(const Graph& g)
        : nbr_(idx(g.order())), deg_(idx(g.order()), 0), alive_(idx(g.order()), 1) {
        for (Vertex v = 0; v < g.order(); ++v) {
            for (Vertex w : g.neighbors(v)) nbr_[idx(v)][deg_[idx(v)]++] = w;
        }
    }

    Vertex order() const { return static_cast<Vertex>(deg_.size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return {nbr_[idx(v)].data(), deg_[idx(v)]}; }
    int degree(Vertex v) const { return deg_[idx(v)]; }
    bool alive(Vertex v) const { return alive_[idx(v)] != 0; }
    bool adjacent(Vertex a, Vertex b) const { return detail::contains(neighbors(a), b); }

    void remove(Vertex v) {
        for (Vertex w : neighbors(v)) {
            auto& list = nbr_[idx(w)];
            auto& d = deg_[idx(w)];
            auto* end = list.data() + d;
            std::copy(std::find(list.data(), end, v) + 1, end, std::find(list.data(), end, v));
            --d;
        }
        deg_[idx(v)] = 0;
        alive_[idx(v)] = 0;
    }

private:
    std::vector<std::array<Vertex, 3>> nbr_;
    std::vector<std::uint8_t> deg_;
    std::vector<char> alive_;
};

struct Plan {
    Rule rule = Rule::R12;
    std::vector<Vertex> removed;
    std::vector<Edge> added;
    std::vector<Vertex> isolated;
    std::vector<Vertex> boundary;  // surviving neighbors of removed vertices

    std::size_t charged() const { return removed.size() + isolated.size(); }
    bool within_ledger() const { return charged() <= 6 * added.size(); }
};

// Low-degree rule classes are R2..R9; 0 means none.
constexpr int kNoClass = 0;

class Engine {
public:
    Engine(const Graph& g, const ReductionOptions& options)
        : g_(g),
          opt_(options),
          dg_(g),
          cls_(idx(g.order()), kNoClass),
          stamp_(idx(g.order()), 0),
          sweep_stamp_(idx(g.order()), 0),
          depth_(idx(g.order()), 0) {}

    ReductionTrace run() {
        ReductionTrace trace;
        trace.original_order = g_.order();
        trace.required_size = order_bound(g_.order(), g_.isolated_count(), count_k33plus_components(g_));

        for (Vertex v = 0; v < g_.order(); ++v) {
            if (dg_.degree(v) == 0) dg_.remove(v);
        }
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (!dg_.alive(v)) continue;
            if (auto comp = bounded_component(v, opt_.brute_force_max_order); !comp.empty()) solve_component(std::move(comp));
        }

        // K3,3+ subgraphs are never created by deletions, so one ascending
        // sweep exhausts the first rule before any other rule fires.
        for (Vertex u = 0; u < g_.order(); ++u) {
            if (!dg_.alive(u) || dg_.degree(u) < 2) continue;
            if (auto h = find_k33plus_at([this](Vertex v) { return dg_.neighbors(v); }, u)) {
                std::vector<Vertex> branch{h->a[0], h->a[1], h->a[2], h->b[0], h->b[1], h->b[2]};
                execute(make_plan(Rule::R1, std::move(branch), {Edge::make(h->a[1], h->b[1])}), u);
            }
        }

        rules_active_ = true;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (!dg_.alive(v)) continue;
            reclassify(v);
            if (triangle_at(v)) triangles_.insert(v);
            if (four_cycle_at(v)) four_cycles_.insert(v);
        }

        while (step_once()) {
            if (opt_.self_check) self_check();
        }

        trace.steps = std::move(steps_);
        return trace;
    }

private:
    // ---- step selection ------------------------------------------------

    bool step_once() {
        for (int r = 2; r <= 9; ++r) {
            auto& bucket = low_[static_cast<std::size_t>(r)];
            if (!bucket.empty()) {
                apply_low_degree_rule(r, *bucket.begin());
                return true;
            }
        }
        while (!triangles_.empty()) {
            const Vertex v = *triangles_.begin();
            if (auto t = dg_.alive(v) ? triangle_at(v) : std::nullopt) {
                require_cubic(v, Rule::R10);
                const auto [a, b] = *t;
                (void)b;
                execute(make_plan(Rule::R10, union_closed({v, a}), {Edge::make(v, a)}), v);
                return true;
            }
            triangles_.erase(triangles_.begin());
        }
        while (!four_cycles_.empty()) {
            const Vertex v = *four_cycles_.begin();
            if (auto c = dg_.alive(v) ? four_cycle_at(v) : std::nullopt) {
                require_cubic(v, Rule::R11);
                apply_four_cycle(v, *c);
                return true;
            }
            four_cycles_.erase(four_cycles_.begin());
        }
        while (next_alive_ < g_.order() && !dg_.alive(next_alive_)) ++next_alive_;
        if (next_alive_ == g_.order()) return false;
        const Vertex u = next_alive_;
        require_cubic(u, Rule::R12);
        const Vertex v = dg_.neighbors(u).front();
        execute(make_plan(Rule::R12, union_closed({u, v}), {Edge::make(u, v)}), u);
        return true;
    }

    void require_cubic(Vertex v, Rule r) const {
        if (dg_.degree(v) != 3) {
            throw std::logic_error(std::string(rule_name(r)) + " reached with vertex " + std::to_string(v) +
                                   " of degree " + std::to_string(dg_.degree(v)));
        }
    }

    void apply_low_degree_rule(int r, Vertex v) {
        const auto nv = dg_.neighbors(v);
        switch (r) {
            case 2:
            case 3:
            case 5: {
                const Vertex w = nv[0];
                execute(make_plan(static_cast<Rule>(r), union_closed({w}), {Edge::make(v, w)}), v);
                return;
            }
            case 4: {
                const Vertex u2 = *end_vertex_at_distance4(v);
                const Vertex v1 = nv[0];
                const Vertex v2 = dg_.neighbors(u2)[0];
                execute(make_plan(Rule::R4, union_closed({v1, v2}), {Edge::make(v, v1), Edge::make(u2, v2)}), v);
                return;
            }
            case 6: {
                const Vertex u2 = dg_.degree(nv[0]) == 2 ? nv[0] : nv[1];
                execute(make_plan(Rule::R6, union_closed({v, u2}), {Edge::make(v, u2)}), v);
                return;
            }
            case 7:
                execute(make_plan(Rule::R7, union_closed({nv[0]}), {Edge::make(v, nv[0])}), v);
                return;
            case 8:
            case 9: {
                // Take the first side whose deletion isolates at most one vertex.
                const std::array<Vertex, 2> sides{nv[0], nv[1]};
                for (Vertex v1 : sides) {
                    Plan p = make_plan(static_cast<Rule>(r), union_closed({v1, v}), {Edge::make(v, v1)});
                    if (p.isolated.size() <= 1) {
                        execute(std::move(p), v);
                        return;
                    }
                }
                fallback(v, static_cast<Rule>(r), "both sides isolate two or more vertices");
                return;
            }
            default:
                throw std::logic_error("unknown low-degree rule class");
        }
    }

    void apply_four_cycle(Vertex v, const std::array<Vertex, 3>& rest) {
        const std::array<Vertex, 4> cycle{v, rest[0], rest[1], rest[2]};
        for (std::size_t k = 0; k < 4; ++k) {
            const Vertex x = cycle[k];
            const Vertex y = cycle[(k + 1) % 4];
            Plan p = make_plan(Rule::R11, union_closed({x, y}), {Edge::make(x, y)});
            if (p.isolated.empty()) {
                execute(std::move(p), v);
                return;
            }
        }
        fallback(v, Rule::R11, "every 4-cycle edge isolates a vertex");
    }

    // ---- plans and their execution -------------------------------------

    std::vector<Vertex> union_closed(std::initializer_list<Vertex> centres) const {
        std::vector<Vertex> out;
        for (Vertex c : centres) {
            out.push_back(c);
            for (Vertex w : dg_.neighbors(c)) out.push_back(w);
        }
        return out;
    }

    Plan make_plan(Rule r, std::vector<Vertex> removed, std::vector<Edge> added) {
        Plan p;
        p.rule = r;
        p.added = std::move(added);
        std::sort(removed.begin(), removed.end());
        removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
        p.removed = std::move(removed);

        const std::uint32_t mark = ++epoch_;
        for (Vertex x : p.removed) stamp_[idx(x)] = mark;
        std::vector<Vertex> around;
        for (Vertex x : p.removed) {
            for (Vertex w : dg_.neighbors(x)) {
                if (stamp_[idx(w)] != mark) around.push_back(w);
            }
        }
        std::sort(around.begin(), around.end());
        around.erase(std::unique(around.begin(), around.end()), around.end());
        for (Vertex b : around) {
            const auto nb = dg_.neighbors(b);
            const bool isolated = std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return stamp_[idx(w)] == mark; });
            (isolated ? p.isolated : p.boundary).push_back(b);
        }
        return p;
    }

    void execute(Plan p, Vertex anchor) {
        if (!p.within_ledger()) {
            fallback(anchor, p.rule,
                     "charged " + std::to_string(p.charged()) + " vertices for " + std::to_string(p.added.size()) +
                         " edges");
            return;
        }
        for (Vertex x : p.removed) kill(x);
        for (Vertex x : p.isolated) kill(x);
        steps_.push_back({p.rule, std::move(p.removed), std::move(p.added), std::move(p.isolated)});
        after_deletion(p.boundary);
    }

    void kill(Vertex v) {
        unclassify(v);
        dg_.remove(v);
    }

    /// Exact or K3,3+ treatment of a whole component; `comp` sorted.
    void solve_component(std::vector<Vertex> comp) {
        ReductionStep step;
        step.removed = comp;
        if (is_k33plus_component(comp)) {
            step.rule = Rule::ComponentK33Plus;
            step.added.push_back(smallest_edge(comp));
        } else {
            step.rule = Rule::ComponentBrute;
            std::vector<Edge> local_edges;
            for (std::size_t k = 0; k < comp.size(); ++k) {
                for (Vertex w : dg_.neighbors(comp[k])) {
                    const auto j = static_cast<std::size_t>(std::lower_bound(comp.begin(), comp.end(), w) - comp.begin());
                    if (k < j) local_edges.push_back({static_cast<Vertex>(k), static_cast<Vertex>(j)});
                }
            }
            const Graph local(static_cast<Vertex>(comp.size()), local_edges);
            const ExactResult exact = exact_strong_matching_number(local);
            for (const Edge& e : exact.witness.edges) {
                step.added.push_back(Edge::make(comp[idx(e.u)], comp[idx(e.v)]));
            }
        }
        for (Vertex x : comp) kill(x);
        steps_.push_back(std::move(step));
    }

    bool is_k33plus_component(const std::vector<Vertex>& comp) const {
        if (comp.size() != 7) return false;
        Vertex subdivision = -1;
        int degree_sum = 0;
        for (Vertex v : comp) {
            degree_sum += dg_.degree(v);
            if (dg_.degree(v) == 2) {
                if (subdivision >= 0) return false;
                subdivision = v;
            } else if (dg_.degree(v) != 3) {
                return false;
            }
        }
        if (degree_sum != 20 || subdivision < 0) return false;
        return find_k33plus_at([this](Vertex v) { return dg_.neighbors(v); }, subdivision).has_value();
    }

    Edge smallest_edge(const std::vector<Vertex>& comp) const {
        for (Vertex v : comp) {
            for (Vertex w : dg_.neighbors(v)) {
                if (w > v) return {v, w};
            }
        }
        throw std::logic_error("component without edges");
    }

    /// The component of `start` if it has at most `limit` vertices, sorted;
    /// empty otherwise.
    std::vector<Vertex> bounded_component(Vertex start, Vertex limit) {
        const std::uint32_t mark = ++epoch_;
        auto& comp = component_scratch_;
        comp.assign(1, start);
        stamp_[idx(start)] = mark;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : dg_.neighbors(comp[head])) {
                if (stamp_[idx(w)] == mark) continue;
                if (static_cast<Vertex>(comp.size()) >= limit) return {};
                stamp_[idx(w)] = mark;
                comp.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        return comp;
    }

    void fallback(Vertex anchor, Rule r, const std::string& why) {
        const auto comp = bounded_component(anchor, std::max(opt_.fallback_max_order, opt_.brute_force_max_order));
        if (!comp.empty()) {
            solve_component(comp);
            return;
        }
        std::ostringstream msg;
        msg << "rule " << rule_name(r) << " at vertex " << anchor << ": " << why
            << "; component exceeds the exact fallback limit of " << opt_.fallback_max_order << " vertices";
        throw LedgerViolation(msg.str());
    }

    void after_deletion(const std::vector<Vertex>& boundary) {
        for (Vertex b : boundary) {
            if (!dg_.alive(b)) continue;
            if (auto comp = bounded_component(b, opt_.brute_force_max_order); !comp.empty()) solve_component(std::move(comp));
        }
        if (!rules_active_) return;

        // End-vertex classes look up to distance 4 (two end-vertices at
        // distance 4 and the degrees there); degree-2 classes look up to
        // distance 2. Deletions only lengthen distances, so anything whose
        // class may change lies within those radii of the boundary.
        const std::uint32_t mark = ++sweep_epoch_;
        std::vector<Vertex> frontier;
        for (Vertex b : boundary) {
            if (dg_.alive(b) && sweep_stamp_[idx(b)] != mark) {
                sweep_stamp_[idx(b)] = mark;
                depth_[idx(b)] = 0;
                frontier.push_back(b);
            }
        }
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            const Vertex x = frontier[head];
            const int d = depth_[idx(x)];
            if (dg_.degree(x) == 1 || (dg_.degree(x) == 2 && d <= 2)) reclassify(x);
            if (d == 4) continue;
            for (Vertex w : dg_.neighbors(x)) {
                if (sweep_stamp_[idx(w)] != mark) {
                    sweep_stamp_[idx(w)] = mark;
                    depth_[idx(w)] = d + 1;
                    frontier.push_back(w);
                }
            }
        }
    }

    // ---- rule classification -------------------------------------------

    int classify(Vertex v) const {
        const auto nv = dg_.neighbors(v);
        if (nv.size() == 1) {
            const Vertex w = nv[0];
            if (dg_.degree(w) == 2) return 2;
            for (Vertex x : dg_.neighbors(w)) {
                if (x != v && dg_.degree(x) == 1) return 3;
            }
            if (end_vertex_at_distance4(v)) return 4;
            return 5;
        }
        if (nv.size() == 2) {
            const Vertex v1 = nv[0];
            const Vertex v2 = nv[1];
            if (dg_.degree(v1) == 2 || dg_.degree(v2) == 2) return 6;
            if (dg_.adjacent(v1, v2)) return 7;
            for (Vertex w : dg_.neighbors(v1)) {
                if (w != v && dg_.adjacent(w, v2)) return 8;
            }
            return 9;
        }
        return kNoClass;
    }

    void reclassify(Vertex v) {
        const int c = classify(v);
        if (c == cls_[idx(v)]) return;
        unclassify(v);
        cls_[idx(v)] = static_cast<std::int8_t>(c);
        if (c != kNoClass) low_[static_cast<std::size_t>(c)].insert(v);
    }

    void unclassify(Vertex v) {
        auto& c = cls_[idx(v)];
        if (c != kNoClass) low_[static_cast<std::size_t>(c)].erase(v);
        c = kNoClass;
    }

    /// Smallest end-vertex at distance exactly 4 from end-vertex `u`.
    std::optional<Vertex> end_vertex_at_distance4(Vertex u) const {
        const std::uint32_t mark = ++epoch_;
        std::array<Vertex, 32> layer{};
        std::array<Vertex, 32> next{};
        std::size_t layer_size = 1;
        layer[0] = u;
        stamp_[idx(u)] = mark;
        for (int depth = 1; depth <= 4; ++depth) {
            std::size_t next_size = 0;
            for (std::size_t k = 0; k < layer_size; ++k) {
                for (Vertex w : dg_.neighbors(layer[k])) {
                    if (stamp_[idx(w)] == mark) continue;
                    stamp_[idx(w)] = mark;
                    next[next_size++] = w;
                }
            }
            std::copy(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(next_size), layer.begin());
            layer_size = next_size;
        }
        std::optional<Vertex> best;
        for (std::size_t k = 0; k < layer_size; ++k) {
            if (dg_.degree(layer[k]) == 1 && (!best || layer[k] < *best)) best = layer[k];
        }
        return best;
    }

    /// Lexicographically smallest pair a < b of adjacent neighbors of v.
    std::optional<std::pair<Vertex, Vertex>> triangle_at(Vertex v) const {
        const auto nv = dg_.neighbors(v);
        for (std::size_t i = 0; i < nv.size(); ++i) {
            for (std::size_t j = i + 1; j < nv.size(); ++j) {
                if (dg_.adjacent(nv[i], nv[j])) return std::pair{nv[i], nv[j]};
            }
        }
        return std::nullopt;
    }

    /// (a, w, b) with v-a-w-b-v a 4-cycle, a < b, smallest in that order.
    std::optional<std::array<Vertex, 3>> four_cycle_at(Vertex v) const {
        const auto nv = dg_.neighbors(v);
        for (std::size_t i = 0; i < nv.size(); ++i) {
            for (std::size_t j = i + 1; j < nv.size(); ++j) {
                for (Vertex w : dg_.neighbors(nv[i])) {
                    if (w != v && dg_.adjacent(w, nv[j])) return std::array<Vertex, 3>{nv[i], w, nv[j]};
                }
            }
        }
        return std::nullopt;
    }

    void self_check() const {
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (!dg_.alive(v)) continue;
            if (dg_.degree(v) == 0) throw std::logic_error("isolated vertex left alive: " + std::to_string(v));
            if (classify(v) != cls_[idx(v)]) {
                throw std::logic_error("stale rule class at vertex " + std::to_string(v) + ": cached " +
                                       std::to_string(cls_[idx(v)]) + ", actual " + std::to_string(classify(v)));
            }
            if (triangle_at(v) && !triangles_.count(v)) throw std::logic_error("untracked triangle");
            if (four_cycle_at(v) && !four_cycles_.count(v)) throw std::logic_error("untracked 4-cycle");
            if (find_k33plus_at([this](Vertex x) { return dg_.neighbors(x); }, v)) {
                throw std::logic_error("K3,3+ subgraph survived the first rule");
            }
        }
    }

    const Graph& g_;
    const ReductionOptions opt_;
    DynamicSubcubic dg_;
    std::vector<ReductionStep> steps_;

    std::vector<std::int8_t> cls_;
    std::array<std::set<Vertex>, 10> low_;
    std::set<Vertex> triangles_;
    std::set<Vertex> four_cycles_;
    Vertex next_alive_ = 0;
    bool rules_active_ = false;

    mutable std::vector<std::uint32_t> stamp_;
    mutable std::uint32_t epoch_ = 0;
    // Separate marks for the reclassification sweep, which calls
    // classify() and therefore the stamp_-based searches mid-traversal.
    std::vector<std::uint32_t> sweep_stamp_;
    std::vector<Vertex> component_scratch_;
    std::uint32_t sweep_epoch_ = 0;
    std::vector<int> depth_;
};

}  // namespace

ReductionResult find_induced_matching_subcubic(const Graph& g, const ReductionOptions& options) {
    if (g.max_degree() > 3) {
        throw NotSubcubicError("reduction needs maximum degree <= 3, got " + std::to_string(g.max_degree()));
    }
    ReductionResult result;
    result.trace = Engine(g, options).run();
    result.matching = result.trace.matching();
    if (const LedgerResult check = ledger_check(result.trace); !check) {
        throw LedgerViolation("ledger check failed: " + check.reason);
    }
    return result;
}

Matching ReductionTrace::matching() const {
    Matching m;
    for (const auto& step : steps) m.edges.insert(m.edges.end(), step.added.begin(), step.added.end());
    return m;
}

LedgerResult ledger_check(const ReductionTrace& trace) {
    std::int64_t total = 0;
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const ReductionStep& s = trace.steps[k];
        if (s.added.empty()) return {false, k, "step " + std::to_string(k) + " adds no edge"};
        if (is_local_rule(s.rule) && s.removed.size() + s.isolated.size() > 6 * s.added.size()) {
            return {false, k,
                    "step " + std::to_string(k) + " (" + std::string(rule_name(s.rule)) + ") charges " +
                        std::to_string(s.removed.size() + s.isolated.size()) + " vertices to " +
                        std::to_string(s.added.size()) + " edges"};
        }
        total += static_cast<std::int64_t>(s.added.size());
    }
    if (total < trace.required_size) {
        return {false, trace.steps.size(),
                "matching has " + std::to_string(total) + " edges, guarantee is " + std::to_string(trace.required_size)};
    }
    return {true, std::nullopt, {}};
}

}  // namespace indmatch
