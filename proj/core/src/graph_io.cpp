#include "indmatch/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace indmatch {

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line), reason_(what) {}

std::optional<GraphFormat> parse_format_name(std::string_view name) {
    if (name == "edge-list") return GraphFormat::EdgeList;
    if (name == "dimacs") return GraphFormat::Dimacs;
    return std::nullopt;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t parse_int(std::string_view token, std::size_t line, std::int64_t min, std::int64_t max) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    }
    if (value < min || value > max) {
        throw ParseError(line, "integer " + std::string(token) + " out of range");
    }
    return value;
}

struct LineEdge {
    Edge edge;
    std::size_t line;
};

void reject_duplicates(std::vector<LineEdge>& edges) {
    std::stable_sort(edges.begin(), edges.end(), [](const LineEdge& a, const LineEdge& b) { return a.edge < b.edge; });
    std::size_t worst = 0;
    for (std::size_t k = 1; k < edges.size(); ++k) {
        if (edges[k].edge == edges[k - 1].edge) {
            // Report the first line at which a repeat occurs.
            const std::size_t line = std::max(edges[k].line, edges[k - 1].line);
            if (worst == 0 || line < worst) worst = line;
        }
    }
    if (worst != 0) throw ParseError(worst, "duplicate edge");
}

Graph assemble(Vertex order, std::vector<LineEdge>& line_edges) {
    reject_duplicates(line_edges);
    std::vector<Edge> edges;
    edges.reserve(line_edges.size());
    for (const auto& le : line_edges) edges.push_back(le.edge);
    return Graph(order, edges);
}

constexpr std::int64_t kMaxVertex = std::numeric_limits<Vertex>::max();

Graph parse_edge_list(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool content_seen = false;
    std::optional<std::int64_t> declared;
    std::int64_t max_id = -1;
    std::vector<LineEdge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto tokens = split_ws(raw);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.front() == "n") {
            if (content_seen) throw ParseError(line_no, "'n' directive must be the first non-comment line");
            if (tokens.size() != 2) throw ParseError(line_no, "malformed 'n' directive");
            declared = parse_int(tokens[1], line_no, 0, kMaxVertex);
            content_seen = true;
            continue;
        }
        content_seen = true;
        if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
        const auto u = parse_int(tokens[0], line_no, 0, kMaxVertex - 1);
        const auto v = parse_int(tokens[1], line_no, 0, kMaxVertex - 1);
        if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
        if (declared && (u >= *declared || v >= *declared)) {
            throw ParseError(line_no, "vertex id exceeds declared count " + std::to_string(*declared));
        }
        max_id = std::max({max_id, u, v});
        edges.push_back({Edge::make(static_cast<Vertex>(u), static_cast<Vertex>(v)), line_no});
    }
    const auto order = static_cast<Vertex>(declared ? *declared : max_id + 1);
    return assemble(order, edges);
}

Graph parse_dimacs(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::int64_t> n;
    std::int64_t declared_m = 0;
    std::vector<LineEdge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto tokens = split_ws(raw);
        if (tokens.empty() || tokens.front() == "c") continue;
        if (tokens.front() == "p") {
            if (n) throw ParseError(line_no, "repeated problem line");
            if (tokens.size() != 4 || tokens[1] != "edge") throw ParseError(line_no, "expected 'p edge <n> <m>'");
            n = parse_int(tokens[2], line_no, 0, kMaxVertex);
            declared_m = parse_int(tokens[3], line_no, 0, std::numeric_limits<std::int64_t>::max());
            continue;
        }
        if (tokens.front() == "e") {
            if (!n) throw ParseError(line_no, "edge line before problem line");
            if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
            const auto u = parse_int(tokens[1], line_no, 1, std::numeric_limits<std::int64_t>::max());
            const auto v = parse_int(tokens[2], line_no, 1, std::numeric_limits<std::int64_t>::max());
            if (u > *n || v > *n) throw ParseError(line_no, "vertex id exceeds declared count " + std::to_string(*n));
            if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
            edges.push_back({Edge::make(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)), line_no});
            continue;
        }
        throw ParseError(line_no, "unrecognized line");
    }
    if (!n) throw ParseError(line_no, "missing problem line");
    if (static_cast<std::int64_t>(edges.size()) != declared_m) {
        throw ParseError(line_no, "problem line declares " + std::to_string(declared_m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    return assemble(static_cast<Vertex>(*n), edges);
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
    Graph g = format == GraphFormat::EdgeList ? parse_edge_list(in) : parse_dimacs(in);
    g.check_invariants();
    return g;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    std::istringstream in{std::string(text)};
    return parse_graph(in, format);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.order() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace indmatch
