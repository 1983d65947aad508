#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "indmatch/graph.hpp"

namespace indmatch {

enum class GraphFormat { EdgeList, Dimacs };

std::optional<GraphFormat> parse_format_name(std::string_view name);

class ParseError : public GraphError {
public:
    ParseError(std::size_t line, const std::string& what);

    /// 1-based line number the error refers to.
    std::size_t line() const { return line_; }
    /// The message without the line prefix.
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

/// Edge-list format:
///   # comment
///   n 5          optional, first non-comment line only
///   0 1          0-based ids
/// Without the directive the order is max id + 1.
///
/// DIMACS format:
///   c comment
///   p edge <n> <m>
///   e <u> <v>    1-based ids
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(std::string_view text, GraphFormat format);

/// "n <order>" followed by the sorted edges, one "u v" per line.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace indmatch
