#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indmatch/graph.hpp"
#include "indmatch/matching.hpp"

namespace indmatch {

/// Reduction rules in priority order, followed by the whole-component steps.
enum class Rule : std::uint8_t {
    R1 = 1,  // K3,3+ subgraph
    R2,      // end-vertex whose neighbor has degree 2
    R3,      // two end-vertices with a common neighbor
    R4,      // two end-vertices at distance 4
    R5,      // any remaining end-vertex
    R6,      // adjacent degree-2 vertices
    R7,      // degree-2 vertex in a triangle
    R8,      // degree-2 vertex on a 4-cycle
    R9,      // any remaining degree-2 vertex
    R10,     // triangle in a cubic component
    R11,     // 4-cycle in a cubic component
    R12,     // cubic, girth >= 5
    ComponentK33Plus,
    ComponentBrute,
};

std::string_view rule_name(Rule r);
std::optional<Rule> parse_rule_name(std::string_view name);
bool is_local_rule(Rule r);

struct ReductionStep {
    Rule rule = Rule::R12;
    std::vector<Vertex> removed;   // sorted, ids of the input graph
    std::vector<Edge> added;
    std::vector<Vertex> isolated;  // vertices left without neighbors, sorted

    std::size_t isolated_created() const { return isolated.size(); }
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::int64_t original_order = 0;
    /// ceil((n - i - n33plus) / 6) of the input graph.
    std::int64_t required_size = 0;

    Matching matching() const;
};

struct ReductionResult {
    Matching matching;
    ReductionTrace trace;
};

struct ReductionOptions {
    /// Components of at most this order are solved exactly.
    Vertex brute_force_max_order = 12;
    /// Components up to this order are solved exactly when a local rule
    /// would break its accounting.
    Vertex fallback_max_order = 30;
    /// Recompute every rule candidate from scratch after each step and fail
    /// if the incremental bookkeeping disagrees. Quadratic; tests only.
    bool self_check = false;
};

class NotSubcubicError : public GraphError {
public:
    using GraphError::GraphError;
};

/// Raised when a step or the final matching breaks the size guarantee and
/// no exact fallback is possible.
class LedgerViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Induced matching of size at least ceil((n - i - n33plus) / 6) for a graph
/// of maximum degree at most 3, with the trace of the rules that produced it.
ReductionResult find_induced_matching_subcubic(const Graph& g, const ReductionOptions& options = {});

struct LedgerResult {
    bool ok = true;
    /// Index of the first offending step; steps.size() when only the final
    /// size requirement fails.
    std::optional<std::size_t> violation;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Checks removed + isolated <= 6 * added for every local rule step and the
/// overall size requirement.
LedgerResult ledger_check(const ReductionTrace& trace);

/// One line per step followed by the summary line.
void write_trace(std::ostream& out, const ReductionTrace& trace);
std::string format_step(const ReductionStep& step);
std::string format_trace_summary(const ReductionTrace& trace);

}  // namespace indmatch
