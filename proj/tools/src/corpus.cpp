#include "indmatch/cli/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "indmatch/generators.hpp"
#include "indmatch/graph_io.hpp"

namespace indmatch::cli {

namespace {

constexpr std::array<std::string_view, 6> kFamilies{"subcubic", "cubic", "girth6", "forest", "general", "named"};

Vertex pick(Rng& rng, Vertex lo, Vertex hi) { return lo + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))); }

Graph named(std::uint64_t which) {
    switch (which % 8) {
        case 0: return gen_k33plus();
        case 1: return gen_petersen();
        case 2: return gen_cycle(5);
        case 3: return gen_cycle(6);
        case 4: return gen_cycle(7);
        case 5: return gen_path(5);
        case 6: return gen_path(7);
        default: return gen_c5_blowup(4);
    }
}

Graph make_instance(std::string_view family, std::uint64_t seed, std::int64_t max_edges) {
    Rng rng(seed);
    if (family == "subcubic") {
        const Vertex n = pick(rng, 1, 22);
        const std::int64_t cap = std::min<std::int64_t>(max_edges, 3 * std::int64_t{n} / 2);
        return gen_random_subcubic(n, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cap) + 1)), rng.next());
    }
    if (family == "cubic") {
        const Vertex top = static_cast<Vertex>(std::max<std::int64_t>(4, max_edges * 2 / 3));
        return gen_random_cubic(2 * pick(rng, 2, top / 2), rng.next());
    }
    if (family == "girth6") return gen_random_girth6(pick(rng, 1, 30), static_cast<int>(pick(rng, 1, 5)), rng.next());
    if (family == "forest") {
        return gen_random_forest(pick(rng, 1, static_cast<Vertex>(max_edges + 1)), static_cast<int>(pick(rng, 1, 6)), rng.next());
    }
    if (family == "general") {
        const Vertex n = pick(rng, 2, 16);
        const int max_degree = static_cast<int>(pick(rng, 2, 6));
        const std::int64_t cap = std::min<std::int64_t>({max_edges, std::int64_t{n} * max_degree / 2, std::int64_t{n} * (n - 1) / 2});
        return gen_random_bounded_degree(n, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cap) + 1)), max_degree, rng.next());
    }
    return named(seed);
}

}  // namespace

std::vector<CorpusEntry> make_corpus(std::size_t count, std::int64_t max_edges, std::uint64_t seed) {
    Rng master(seed);
    std::vector<CorpusEntry> out;
    out.reserve(count);
    while (out.size() < count) {
        const std::string_view family = kFamilies[out.size() % kFamilies.size()];
        const std::uint64_t instance_seed = master.next();
        Graph g = make_instance(family, instance_seed, max_edges);
        if (g.size() > max_edges) continue;
        out.push_back({std::string(family), instance_seed, std::move(g)});
    }
    return out;
}

std::string entry_text(const CorpusEntry& entry) {
    return "# family=" + entry.family + " seed=" + std::to_string(entry.seed) + "\n" + to_edge_list(entry.graph);
}

void write_corpus(std::ostream& out, const std::vector<CorpusEntry>& entries) {
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k) out << "---\n";
        out << entry_text(entries[k]);
    }
}

std::vector<CorpusEntry> read_corpus(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string block;
    std::size_t block_start = 1;
    std::size_t line_no = 0;
    auto flush = [&] {
        CorpusEntry entry;
        std::istringstream header(block.substr(0, block.find('\n')));
        std::string hash;
        std::string family;
        std::string seed;
        if (header >> hash >> family >> seed && hash == "#" && family.rfind("family=", 0) == 0 && seed.rfind("seed=", 0) == 0) {
            entry.family = family.substr(7);
            entry.seed = std::stoull(seed.substr(5));
        }
        try {
            entry.graph = parse_graph(block, GraphFormat::EdgeList);
        } catch (const ParseError& e) {
            throw ParseError(block_start + e.line() - 1, e.reason());
        }
        out.push_back(std::move(entry));
        block.clear();
    };
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line == "---") {
            flush();
            block_start = line_no + 1;
            continue;
        }
        block += line;
        block += '\n';
    }
    if (!block.empty() || !out.empty()) flush();
    return out;
}

}  // namespace indmatch::cli
