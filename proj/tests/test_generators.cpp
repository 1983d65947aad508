#include <doctest.h>

#include <algorithm>

#include "indmatch/bounds.hpp"
#include "indmatch/generators.hpp"
#include "indmatch/oracle.hpp"

using namespace indmatch;

namespace {

std::vector<int> degree_multiset(const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

bool connected(const Graph& g) { return connected_components(g).size() == 1; }

}  // namespace

TEST_CASE("K3,3+") {
    const Graph g = gen_k33plus();
    CHECK(g.order() == 7);
    CHECK(g.size() == 10);
    CHECK(degree_multiset(g) == std::vector<int>{2, 3, 3, 3, 3, 3, 3});
    CHECK(is_k33plus(g, std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6}));
    CHECK(exact_strong_matching_number(g).value == 1);
}

TEST_CASE("extremal cubic graph") {
    const Graph g = gen_extremal_cubic();
    CHECK(g.order() == 30);
    CHECK(g.size() == 45);
    CHECK(g.is_regular(3));
    CHECK(connected(g));
    CHECK(g.has_edge(28, 29));
    CHECK(exact_strong_matching_number(g).value == 5);
    CHECK(bound_values(g).thm1_bound == 5);
}

TEST_CASE("C5 blow-ups") {
    const Graph g4 = gen_c5_blowup(4);
    CHECK(g4.order() == 10);
    CHECK(g4.is_regular(4));
    CHECK(g4.size() == 20);
    CHECK(exact_strong_matching_number(g4).value == 1);

    const Graph g6 = gen_c5_blowup(6);
    CHECK(g6.order() == 15);
    CHECK(g6.is_regular(6));

    CHECK_THROWS_AS(gen_c5_blowup(5), GeneratorError);
    CHECK_THROWS_AS(gen_c5_blowup(2), GeneratorError);
}

TEST_CASE("odd regular extremal graphs") {
    const Graph g3 = gen_odd_regular_extremal(3);
    CHECK(g3.order() == 30);
    CHECK(g3.size() == 45);
    CHECK(g3.is_regular(3));
    CHECK(connected(g3));
    CHECK(exact_strong_matching_number(g3).value == 5);

    for (int delta : {5, 7}) {
        const Graph g = gen_odd_regular_extremal(delta);
        CHECK(g.order() == 10 * delta);
        CHECK(g.is_regular(delta));
        CHECK(connected(g));
        CHECK(g.has_edge(g.order() - 2, g.order() - 1));
    }
    CHECK_THROWS_AS(gen_odd_regular_extremal(4), GeneratorError);
    CHECK_THROWS_AS(gen_odd_regular_extremal(1), GeneratorError);
}

TEST_CASE("random subcubic graphs") {
    CHECK(gen_random_subcubic(0, 0, 1).order() == 0);
    CHECK(gen_random_subcubic(50, 60, 1) == gen_random_subcubic(50, 60, 1));
    CHECK_FALSE(gen_random_subcubic(50, 60, 1) == gen_random_subcubic(50, 60, 2));
    CHECK_THROWS_AS(gen_random_subcubic(10, 16, 1), GeneratorError);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = gen_random_subcubic(40, 55, seed);
        CHECK_NOTHROW(g.check_invariants());
        REQUIRE(g.max_degree() <= 3);
        REQUIRE(g.size() <= 55);
    }
}

TEST_CASE("random cubic graphs") {
    CHECK(gen_random_cubic(10, 4).size() == 15);
    CHECK_THROWS_AS(gen_random_cubic(11, 4), GeneratorError);
    CHECK_THROWS_AS(gen_random_cubic(2, 4), GeneratorError);
    CHECK(gen_random_cubic(100, 9) == gen_random_cubic(100, 9));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = gen_random_cubic(4 + 2 * static_cast<Vertex>(seed % 40), seed);
        CHECK_NOTHROW(g.check_invariants());
        REQUIRE(g.is_regular(3));
    }
}

TEST_CASE("random girth-6 graphs") {
    bool saw_c6 = false;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Graph g = gen_random_girth6(6, 2, seed);
        saw_c6 = saw_c6 || (g.size() == 6 && girth(g) == 6);
    }
    CHECK(saw_c6);
    CHECK(gen_random_girth6(60, 4, 3) == gen_random_girth6(60, 4, 3));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = gen_random_girth6(80, 1 + static_cast<int>(seed % 5), seed);
        CHECK_NOTHROW(g.check_invariants());
        const Girth gg = girth(g);
        REQUIRE((!gg || *gg >= 6));
        REQUIRE(g.max_degree() <= 1 + static_cast<int>(seed % 5));
    }
}

TEST_CASE("random forests") {
    CHECK(gen_random_forest(50, 3, 5) == gen_random_forest(50, 3, 5));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = gen_random_forest(1 + static_cast<Vertex>(seed % 90), 1 + static_cast<int>(seed % 6), seed);
        REQUIRE(is_forest(g));
        REQUIRE(g.max_degree() <= 1 + static_cast<int>(seed % 6));
    }
}

TEST_CASE("rng is portable") {
    // mt19937_64 reference value: the 10000th output for the default seed.
    std::mt19937_64 reference;
    reference.discard(9999);
    CHECK(reference() == 9981545732273789042ull);

    Rng a(42);
    Rng b(42);
    for (int k = 0; k < 1000; ++k) REQUIRE(a.below(17) == b.below(17));
    Rng c(1);
    for (int k = 0; k < 1000; ++k) REQUIRE(c.below(5) < 5);
}
