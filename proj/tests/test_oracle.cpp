#include <doctest.h>

#include "indmatch/generators.hpp"
#include "indmatch/graph_io.hpp"
#include "indmatch/oracle.hpp"
#include "support/oracles.hpp"

using namespace indmatch;

namespace {

std::int64_t nu(const Graph& g) {
    const ExactResult r = exact_strong_matching_number(g);
    REQUIRE(verify_induced_matching(g, r.witness).valid);
    REQUIRE(static_cast<std::int64_t>(r.witness.size()) == r.value);
    return r.value;
}

Graph spider() { return parse_graph("0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n", GraphFormat::EdgeList); }

std::vector<Vertex> random_permutation(Vertex n, Rng& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    rng.shuffle(perm.begin(), perm.end());
    return perm;
}

}  // namespace

TEST_CASE("conflict graph examples") {
    const ConflictGraph p4 = build_conflict_graph(gen_path(4));
    REQUIRE(p4.node_count() == 3);
    CHECK(p4.conflicts(0, 1));
    CHECK(p4.conflicts(1, 2));
    CHECK(p4.conflicts(0, 2));

    const ConflictGraph one = build_conflict_graph(gen_path(2));
    REQUIRE(one.node_count() == 1);
    CHECK(one.adjacency[0].empty());

    const ConflictGraph apart = build_conflict_graph(parse_graph("0 1\n2 3\n", GraphFormat::EdgeList));
    REQUIRE(apart.node_count() == 2);
    CHECK_FALSE(apart.conflicts(0, 1));
}

TEST_CASE("conflict graph is symmetric and loop-free") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = gen_random_bounded_degree(20, 30, 5, rng.next());
        const ConflictGraph cg = build_conflict_graph(g);
        CHECK(cg.nodes == g.edges());
        for (std::size_t a = 0; a < cg.node_count(); ++a) {
            CHECK_FALSE(cg.conflicts(a, a));
            for (std::uint32_t b : cg.adjacency[a]) REQUIRE(cg.conflicts(b, a));
            for (std::size_t b = 0; b < cg.node_count(); ++b) {
                if (a == b) continue;
                REQUIRE(cg.conflicts(a, b) == !testing::compatible(g, cg.nodes[a], cg.nodes[b]));
            }
        }
    }
}

TEST_CASE("strong matching numbers of named graphs") {
    CHECK(nu(gen_extremal_cubic()) == 5);
    CHECK(nu(gen_k33plus()) == 1);
    CHECK(nu(gen_petersen()) == 3);
    CHECK(nu(gen_path(5)) == 2);
    CHECK(nu(gen_path(7)) == 2);
    CHECK(nu(gen_cycle(5)) == 1);
    CHECK(nu(gen_cycle(6)) == 2);
    CHECK(nu(gen_cycle(7)) == 2);
    CHECK(nu(spider()) == 3);
    CHECK(nu(gen_c5_blowup(4)) == 1);
    CHECK(nu(gen_odd_regular_extremal(3)) == 5);
    CHECK(nu(Graph()) == 0);
    CHECK(nu(parse_graph("n 4\n", GraphFormat::EdgeList)) == 0);
}

TEST_CASE("reference enumerations agree on the named graphs") {
    CHECK(testing::strong_matching_by_subsets(gen_k33plus()) == 1);
    CHECK(testing::strong_matching_by_subsets(gen_petersen()) == 3);
    CHECK(testing::strong_matching_by_subsets(spider()) == 3);
    CHECK(testing::strong_matching_by_subsets(gen_cycle(7)) == 2);
    CHECK(testing::strong_matching_by_enumeration(gen_c5_blowup(4)) == 1);
    CHECK(testing::strong_matching_by_enumeration(gen_extremal_cubic()) == 5);
}

TEST_CASE("branch-and-bound matches subset enumeration for m <= 14") {
    Rng rng(11);
    for (int trial = 0; trial < 1500; ++trial) {
        const auto n = static_cast<Vertex>(2 + rng.below(14));
        const int cap = 2 + static_cast<int>(rng.below(4));
        const auto target = std::min<std::int64_t>(static_cast<std::int64_t>(rng.below(15)), std::int64_t{n} * cap / 2);
        const Graph g = gen_random_bounded_degree(n, target, cap, rng.next());
        REQUIRE(g.size() <= 14);
        const std::int64_t expected = testing::strong_matching_by_subsets(g);
        REQUIRE(nu(g) == expected);
    }
}

TEST_CASE("strong matching number is invariant under relabeling") {
    Rng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = gen_random_subcubic(16, 20, rng.next());
        const std::int64_t base = nu(g);
        for (int k = 0; k < 10; ++k) {
            REQUIRE(nu(testing::relabel(g, random_permutation(g.order(), rng))) == base);
        }
    }
}

TEST_CASE("oracle limits") {
    const Graph big = gen_random_cubic(44, 3);  // 66 edges
    CHECK_THROWS_AS(exact_strong_matching_number(big), OracleLimitError);
    CHECK_THROWS_AS(exact_strong_matching_number(gen_extremal_cubic(), 3), BudgetExhausted);
    try {
        exact_strong_matching_number(gen_extremal_cubic(), 3);
    } catch (const BudgetExhausted& e) {
        CHECK(e.budget() == 3);
    }
}

TEST_CASE("oracle is deterministic") {
    const ExactResult a = exact_strong_matching_number(gen_extremal_cubic());
    const ExactResult b = exact_strong_matching_number(gen_extremal_cubic());
    CHECK(a.witness.edges == b.witness.edges);
    CHECK(a.nodes == b.nodes);
}
