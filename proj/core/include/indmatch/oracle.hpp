#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "indmatch/graph.hpp"
#include "indmatch/matching.hpp"

namespace indmatch {

/// Graph on the edges of G: node k is G.edges()[k]; two nodes are adjacent
/// when their edges share an endpoint or have adjacent endpoints.
struct ConflictGraph {
    std::vector<Edge> nodes;
    std::vector<std::vector<std::uint32_t>> adjacency;  // sorted

    std::size_t node_count() const { return nodes.size(); }
    bool conflicts(std::size_t a, std::size_t b) const;
};

ConflictGraph build_conflict_graph(const Graph& g);

inline constexpr std::int64_t kOracleMaxEdges = 64;
inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

class OracleLimitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(std::uint64_t budget);
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

struct ExactResult {
    std::int64_t value = 0;
    Matching witness;
    std::uint64_t nodes = 0;  // branch-and-bound nodes visited
};

/// Strong matching number by branch-and-bound maximum independent set on the
/// conflict graph. Throws OracleLimitError when m > kOracleMaxEdges and
/// BudgetExhausted when more than `node_budget` nodes are needed.
ExactResult exact_strong_matching_number(const Graph& g,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace indmatch
