#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "indmatch/graph.hpp"
#include "indmatch/matching.hpp"

namespace indmatch {

using Rational = boost::rational<std::int64_t>;

std::int64_t ceil_of(const Rational& r);
std::string to_string(const Rational& r);

// Lower bounds on the strong matching number.

/// ceil((n - i - n33plus) / 6), clamped at 0. Subcubic graphs.
std::int64_t order_bound(std::int64_t n, std::int64_t isolated, std::int64_t n33plus);
/// ceil(m / 9). Cubic graphs.
std::int64_t cubic_size_bound(std::int64_t m);
/// (n - i) / (D^2/4 + D + 1). Graphs of girth at least 6.
Rational high_girth_bound(std::int64_t n, std::int64_t isolated, int max_degree);
/// m / (2D(D-1) + 1). Any graph.
Rational greedy_general_bound(std::int64_t m, int max_degree);
/// m / (2D - 1). Forests; 0 when there are no edges.
Rational greedy_forest_bound(std::int64_t m, int max_degree);

struct BoundReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t i = 0;
    std::int64_t n33plus = 0;
    int max_degree = 0;
    int min_degree = 0;
    std::int64_t components = 0;
    Girth girth;

    std::int64_t thm2_bound = 0;
    std::optional<std::int64_t> thm1_bound;   // cubic only
    std::optional<std::int64_t> prop1_bound;  // girth >= 6 or acyclic
    Rational greedy_general_bound{0};
    std::optional<Rational> greedy_forest_bound;  // forests only

    // Why an optional field above is absent; empty when present.
    std::string thm1_absent;
    std::string prop1_absent;
    std::string forest_absent;
};

/// Structural counts plus every applicable bound, computed exactly.
BoundReport count_invariants(const Graph& g);

/// Same report; the entry point used by callers that only want the bounds.
BoundReport bound_values(const Graph& g);

/// Repeatedly commits the edge with the fewest surviving conflicts (ties by
/// lexicographic order) and discards everything it conflicts with. Size is
/// at least ceil(m / (2D(D-1)+1)). Throws GraphError on an edgeless graph.
Matching greedy_induced_matching(const Graph& g);

/// Roots every tree at a vertex of maximum eccentricity and repeatedly commits
/// the parent edge of a deepest remaining vertex. Size is at least
/// ceil(m / (2D-1)). Throws GraphError if `g` has a cycle.
Matching forest_greedy_induced_matching(const Graph& g);

/// Induced matching of size at least ceil((n-i) / (D^2/4 + D + 1)) for graphs
/// of girth at least 6. Throws GraphError on shorter cycles.
Matching girth6_induced_matching(const Graph& g);

}  // namespace indmatch
