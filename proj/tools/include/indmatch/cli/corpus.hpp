#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "indmatch/graph.hpp"

namespace indmatch::cli {

// A corpus file is a sequence of edge-list blocks separated by lines that
// read "---". Each block starts with a "# family=<name> seed=<u64>" comment.

struct CorpusEntry {
    std::string family;
    std::uint64_t seed = 0;
    Graph graph;
};

/// Deterministic mix of small instances with at most `max_edges` edges.
std::vector<CorpusEntry> make_corpus(std::size_t count, std::int64_t max_edges, std::uint64_t seed);

void write_corpus(std::ostream& out, const std::vector<CorpusEntry>& entries);

/// Throws ParseError with the line number inside the whole file.
std::vector<CorpusEntry> read_corpus(std::istream& in);

/// Edge-list text of one entry, as the CLI would read it from a file.
std::string entry_text(const CorpusEntry& entry);

}  // namespace indmatch::cli
