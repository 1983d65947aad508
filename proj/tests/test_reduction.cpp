#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "indmatch/bounds.hpp"
#include "indmatch/generators.hpp"
#include "indmatch/graph_io.hpp"
#include "indmatch/oracle.hpp"
#include "indmatch/reduction.hpp"
#include "support/oracles.hpp"

using namespace indmatch;

namespace {

Graph edge_list(std::string_view text) { return parse_graph(text, GraphFormat::EdgeList); }

ReductionResult reduce(const Graph& g, ReductionOptions opt = {}) {
    ReductionResult r = find_induced_matching_subcubic(g, opt);
    REQUIRE(verify_induced_matching(g, r.matching).valid);
    REQUIRE(r.matching.edges == r.trace.matching().edges);
    const LedgerResult ledger = ledger_check(r.trace);
    INFO(ledger.reason);
    REQUIRE(ledger.ok);
    return r;
}

/// Replays a trace on the input graph and checks that every step was legal
/// in the graph that remained when it fired.
void replay(const Graph& g, const ReductionTrace& trace) {
    std::vector<char> alive(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v) alive[static_cast<std::size_t>(v)] = g.degree(v) > 0;
    auto is_alive = [&](Vertex v) { return alive[static_cast<std::size_t>(v)] != 0; };
    auto current_degree = [&](Vertex v) {
        return static_cast<int>(std::count_if(g.neighbors(v).begin(), g.neighbors(v).end(), is_alive));
    };

    REQUIRE(trace.steps.size() <= static_cast<std::size_t>(g.order()));
    for (const ReductionStep& s : trace.steps) {
        INFO(format_step(s));
        REQUIRE(std::is_sorted(s.removed.begin(), s.removed.end()));
        const std::set<Vertex> gone(s.removed.begin(), s.removed.end());
        REQUIRE(gone.size() == s.removed.size());
        for (Vertex x : s.removed) REQUIRE(is_alive(x));
        for (Vertex x : s.isolated) {
            REQUIRE(is_alive(x));
            REQUIRE_FALSE(gone.count(x));
        }
        for (const Edge& e : s.added) {
            REQUIRE(g.has_edge(e.u, e.v));
            REQUIRE(gone.count(e.u));
            REQUIRE(gone.count(e.v));
            // No surviving vertex may see the new edge.
            for (Vertex x : {e.u, e.v}) {
                for (Vertex y : g.neighbors(x)) {
                    if (is_alive(y)) REQUIRE(gone.count(y));
                }
            }
        }

        if (is_local_rule(s.rule)) {
            // Isolated vertices are exactly the survivors whose neighbors all went.
            std::set<Vertex> expected;
            for (Vertex x : s.removed) {
                for (Vertex y : g.neighbors(x)) {
                    if (!is_alive(y) || gone.count(y)) continue;
                    const auto nb = g.neighbors(y);
                    if (std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return !is_alive(w) || gone.count(w); })) {
                        expected.insert(y);
                    }
                }
            }
            REQUIRE(std::vector<Vertex>(expected.begin(), expected.end()) == s.isolated);
            if (s.rule >= Rule::R10) {
                for (Vertex x : s.removed) REQUIRE(current_degree(x) == 3);
            }
        } else {
            // A whole component of the current graph.
            REQUIRE(s.isolated.empty());
            for (Vertex x : s.removed) {
                for (Vertex y : g.neighbors(x)) {
                    if (is_alive(y)) REQUIRE(gone.count(y));
                }
            }
            std::vector<Edge> local;
            std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
            for (std::size_t k = 0; k < s.removed.size(); ++k) index[static_cast<std::size_t>(s.removed[k])] = static_cast<Vertex>(k);
            for (Vertex x : s.removed) {
                for (Vertex y : g.neighbors(x)) {
                    if (x < y && gone.count(y)) local.push_back({index[static_cast<std::size_t>(x)], index[static_cast<std::size_t>(y)]});
                }
            }
            const Graph comp(static_cast<Vertex>(s.removed.size()), local);
            if (s.rule == Rule::ComponentK33Plus) {
                REQUIRE(testing::isomorphic_to_k33plus_by_permutation(comp));
                REQUIRE(s.added.size() == 1);
            } else {
                REQUIRE(comp.order() <= 30);
                REQUIRE(static_cast<std::int64_t>(s.added.size()) == testing::strong_matching_by_enumeration(comp));
            }
        }
        for (Vertex x : s.removed) alive[static_cast<std::size_t>(x)] = 0;
        for (Vertex x : s.isolated) alive[static_cast<std::size_t>(x)] = 0;
    }
    for (Vertex v = 0; v < g.order(); ++v) REQUIRE_FALSE(is_alive(v));
}

std::string trace_text(const ReductionTrace& t) {
    std::ostringstream out;
    write_trace(out, t);
    return out.str();
}

}  // namespace

TEST_CASE("reduction examples") {
    const ReductionResult k = reduce(gen_k33plus());
    CHECK(k.matching.size() == 1);
    REQUIRE(k.trace.steps.size() == 1);
    CHECK(k.trace.steps[0].rule == Rule::ComponentK33Plus);

    CHECK(reduce(gen_extremal_cubic()).matching.size() == 5);
    CHECK(reduce(gen_cycle(5)).matching.size() == 1);
    CHECK(reduce(gen_petersen()).matching.size() >= 2);
    CHECK(reduce(gen_path(4)).matching.size() == 1);
    CHECK(reduce(Graph()).matching.empty());
    CHECK(reduce(edge_list("n 4")).matching.empty());
    CHECK_THROWS_AS(find_induced_matching_subcubic(edge_list("0 1\n0 2\n0 3\n0 4\n")), NotSubcubicError);
}

TEST_CASE("C5 with exact solving disabled is one R6 step") {
    ReductionOptions opt;
    opt.brute_force_max_order = 4;
    const ReductionResult r = reduce(gen_cycle(5), opt);
    REQUIRE(r.trace.steps.size() == 1);
    const ReductionStep& s = r.trace.steps[0];
    CHECK(s.rule == Rule::R6);
    CHECK(s.removed.size() == 4);
    CHECK(s.isolated_created() == 1);
    CHECK(s.added.size() == 1);
    CHECK(format_step(s) == "rule=R6 removed=0,1,2,4 added=0-1 isolated=1");
}

TEST_CASE("ledger_check") {
    ReductionTrace t = reduce(gen_k33plus()).trace;
    CHECK(ledger_check(t).ok);
    t.steps[0].added.clear();
    const LedgerResult bad = ledger_check(t);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation == 0);

    ReductionTrace over = reduce(gen_random_cubic(40, 1)).trace;
    over.steps.back().removed.insert(over.steps.back().removed.end(), 7, 0);
    if (is_local_rule(over.steps.back().rule)) CHECK(ledger_check(over).violation == over.steps.size() - 1);

    ReductionTrace short_trace = reduce(gen_extremal_cubic()).trace;
    short_trace.required_size = 99;
    CHECK(ledger_check(short_trace).violation == short_trace.steps.size());
}

TEST_CASE("trace text format") {
    const ReductionResult r = reduce(gen_k33plus());
    CHECK(trace_text(r.trace) == "rule=COMPONENT-K33PLUS removed=0,1,2,3,4,5,6 added=0-4 isolated=0\nmatching=1 bound=1 ok=true\n");
    for (Rule rule : {Rule::R1, Rule::R9, Rule::R12, Rule::ComponentK33Plus, Rule::ComponentBrute}) {
        CHECK(parse_rule_name(rule_name(rule)) == rule);
    }
    CHECK_FALSE(parse_rule_name("R13").has_value());
}

TEST_CASE("every rule fires on some input and every trace replays") {
    std::set<Rule> fired;
    auto run = [&](const Graph& g) {
        ReductionOptions opt;
        opt.self_check = true;
        const ReductionResult r = reduce(g, opt);
        replay(g, r.trace);
        for (const auto& s : r.trace.steps) fired.insert(s.rule);
    };
    Rng rng(41);
    for (int trial = 0; trial < 1500; ++trial) {
        const auto n = static_cast<Vertex>(1 + rng.below(80));
        const auto m = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(3 * n / 2 + 1)));
        run(gen_random_subcubic(n, m, rng.next()));
    }
    for (int trial = 0; trial < 200; ++trial) run(gen_random_cubic(4 + 2 * static_cast<Vertex>(rng.below(40)), rng.next()));
    for (int trial = 0; trial < 100; ++trial) run(gen_random_girth6(60, 3, rng.next()));
    // K3,3+ hanging off a long cycle.
    Graph hang = testing::disjoint_union(gen_k33plus(), gen_cycle(10));
    std::vector<Edge> edges = hang.edges();
    edges.push_back({6, 7});
    run(Graph(hang.order(), edges));
    run(testing::disjoint_union(gen_extremal_cubic(), gen_petersen()));
    run(testing::disjoint_union(gen_cycle(20), gen_k33plus()));

    for (int r = static_cast<int>(Rule::R1); r <= static_cast<int>(Rule::ComponentBrute); ++r) {
        INFO(rule_name(static_cast<Rule>(r)));
        CHECK(fired.count(static_cast<Rule>(r)));
    }
}

TEST_CASE("guarantees on random subcubic and cubic graphs") {
    Rng rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto n = static_cast<Vertex>(1 + rng.below(200));
        const auto m = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(3 * n / 2 + 1)));
        const Graph g = gen_random_subcubic(n, m, rng.next());
        const ReductionResult r = reduce(g);
        REQUIRE(static_cast<std::int64_t>(r.matching.size()) >= bound_values(g).thm2_bound);
    }
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = gen_random_cubic(4 + 2 * static_cast<Vertex>(rng.below(99)), rng.next());
        REQUIRE(static_cast<std::int64_t>(reduce(g).matching.size()) >= cubic_size_bound(g.size()));
    }
}

TEST_CASE("reduction never beats the oracle") {
    Rng rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = static_cast<Vertex>(2 + rng.below(24));
        const auto m = std::min<std::int64_t>(25, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(3 * n / 2 + 1))));
        const Graph g = gen_random_subcubic(n, m, rng.next());
        REQUIRE(static_cast<std::int64_t>(reduce(g).matching.size()) <= exact_strong_matching_number(g).value);
    }
}

TEST_CASE("reduction is deterministic") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g = gen_random_subcubic(150, 200, seed);
        const Graph again = edge_list(to_edge_list(g));
        CHECK(trace_text(reduce(g).trace) == trace_text(reduce(again).trace));
    }
}
