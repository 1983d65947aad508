#include "indmatch/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "indmatch/bounds.hpp"
#include "indmatch/cli/corpus.hpp"
#include "indmatch/generators.hpp"
#include "indmatch/graph_io.hpp"
#include "indmatch/oracle.hpp"
#include "indmatch/reduction.hpp"

namespace indmatch::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Ends the command with `code` after printing `message` to the error stream.
struct Failure {
    int code;
    std::string message;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

struct InputOptions {
    std::string path;
    std::string format = "edge-list";
    bool json = false;
};

void add_input_options(CLI::App& cmd, InputOptions& opt) {
    cmd.add_option("input", opt.path, "Graph file, or - for standard input")->required();
    cmd.add_option("--format", opt.format, "Input format")
        ->check(CLI::IsMember({"edge-list", "dimacs"}))
        ->capture_default_str();
    cmd.add_flag("--json", opt.json, "Print one JSON object");
}

Graph read_graph_file(const std::string& path, const std::string& format_name, std::istream& in) {
    const GraphFormat format = parse_format_name(format_name).value_or(GraphFormat::EdgeList);
    try {
        if (path == "-") return parse_graph(in, format);
        std::ifstream file(path);
        if (!file) throw Failure{kInputError, "cannot open " + path};
        return parse_graph(file, format);
    } catch (const ParseError& e) {
        throw Failure{kInputError, (path == "-" ? std::string("<stdin>") : path) + ":" + std::to_string(e.line()) + ": " + e.reason()};
    } catch (const GraphError& e) {
        throw Failure{kInputError, path + ": " + e.what()};
    }
}

Json girth_json(const Girth& g) { return g ? Json(*g) : Json("acyclic"); }

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json matching_json(const Matching& m) {
    Json edges = Json::array();
    for (const Edge& e : m.edges) edges.push_back({e.u, e.v});
    return edges;
}

Json step_json(const ReductionStep& s) {
    Json added = Json::array();
    for (const Edge& e : s.added) added.push_back({e.u, e.v});
    return {{"rule", rule_name(s.rule)}, {"removed", s.removed}, {"added", added}, {"isolated", s.isolated_created()}};
}

std::optional<std::int64_t> subcubic_bound(const BoundReport& r) {
    if (r.max_degree > 3) return std::nullopt;
    return r.thm2_bound;
}

/// Bound fields shared by the stats and match outputs.
void put_bounds(Json& j, const BoundReport& r) {
    j["bound_thm1"] = optional_json(r.thm1_bound);
    j["bound_thm2"] = optional_json(subcubic_bound(r));
    j["bound_prop1"] = optional_json(r.prop1_bound);
}

void write_edges(std::ostream& out, const Matching& m) {
    for (const Edge& e : m.edges) out << e.u << ' ' << e.v << '\n';
}

// ---- stats ---------------------------------------------------------------

int cmd_stats(const InputOptions& opt, Io io) {
    const Graph g = read_graph_file(opt.path, opt.format, io.in);
    const BoundReport r = count_invariants(g);
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["i"] = r.i;
    j["n33plus"] = r.n33plus;
    j["max_degree"] = r.max_degree;
    j["min_degree"] = r.min_degree;
    j["girth"] = girth_json(r.girth);
    j["components"] = r.components;
    put_bounds(j, r);
    j["bound_greedy"] = to_string(r.greedy_general_bound);
    j["bound_forest"] = r.greedy_forest_bound ? Json(to_string(*r.greedy_forest_bound)) : Json(nullptr);
    if (opt.json) {
        io.out << j.dump() << '\n';
        return kOk;
    }
    for (const auto& [key, value] : j.items()) {
        io.out << key << '=' << (value.is_string() ? value.get<std::string>() : value.is_null() ? "none" : value.dump()) << '\n';
    }
    return kOk;
}

// ---- match ---------------------------------------------------------------

struct MatchOptions {
    InputOptions input;
    std::string algorithm = "reduction";
    bool trace = false;
};

int cmd_match(const MatchOptions& opt, Io io) {
    const Graph g = read_graph_file(opt.input.path, opt.input.format, io.in);
    const BoundReport r = count_invariants(g);

    Matching m;
    std::int64_t bound = 0;
    std::optional<ReductionTrace> trace;
    try {
        if (opt.algorithm == "reduction") {
            ReductionResult result = find_induced_matching_subcubic(g);
            m = std::move(result.matching);
            trace = std::move(result.trace);
            bound = r.thm2_bound;
        } else if (opt.algorithm == "greedy") {
            if (g.size() > 0) m = greedy_induced_matching(g);
            bound = ceil_of(r.greedy_general_bound);
        } else if (opt.algorithm == "forest") {
            m = forest_greedy_induced_matching(g);
            bound = ceil_of(greedy_forest_bound(r.m, r.max_degree));
        } else {
            m = girth6_induced_matching(g);
            bound = ceil_of(high_girth_bound(r.n, r.i, r.max_degree));
        }
    } catch (const LedgerViolation& e) {
        throw Failure{kViolation, e.what()};
    } catch (const GraphError& e) {
        throw Failure{kInputError, e.what()};
    }

    const InducedCheck check = verify_induced_matching(g, m);
    if (!check.valid) {
        throw Failure{kViolation, "internal verification failed at vertices " + std::to_string(check.witness->first) + "," +
                                      std::to_string(check.witness->second)};
    }
    const bool meets_bound = static_cast<std::int64_t>(m.size()) >= bound;

    if (opt.input.json) {
        Json j;
        j["n"] = r.n;
        j["m"] = r.m;
        j["i"] = r.i;
        j["n33plus"] = r.n33plus;
        j["girth"] = girth_json(r.girth);
        put_bounds(j, r);
        j["algorithm"] = opt.algorithm;
        j["bound"] = bound;
        j["matching"] = matching_json(m);
        j["size"] = m.size();
        j["verified"] = true;
        if (opt.trace && trace) {
            Json steps = Json::array();
            for (const auto& s : trace->steps) steps.push_back(step_json(s));
            j["trace"] = steps;
        } else {
            j["trace"] = nullptr;
        }
        io.out << j.dump() << '\n';
    } else {
        if (opt.trace && trace) {
            for (const auto& s : trace->steps) io.out << "# " << format_step(s) << '\n';
            io.out << "# " << format_trace_summary(*trace) << '\n';
        }
        write_edges(io.out, m);
        io.out << "# size=" << m.size() << " bound=" << bound << " verified=true\n";
    }
    if (!meets_bound) {
        io.err << "error: matching of size " << m.size() << " is below the guaranteed " << bound << '\n';
        return kViolation;
    }
    return kOk;
}

// ---- exact ---------------------------------------------------------------

struct ExactOptions {
    InputOptions input;
    std::uint64_t budget = kDefaultNodeBudget;
};

int cmd_exact(const ExactOptions& opt, Io io) {
    const Graph g = read_graph_file(opt.input.path, opt.input.format, io.in);
    ExactResult r;
    try {
        r = exact_strong_matching_number(g, opt.budget);
    } catch (const OracleLimitError& e) {
        throw Failure{kInputError, e.what()};
    } catch (const BudgetExhausted& e) {
        throw Failure{kBudgetExceeded, e.what()};
    }
    if (opt.input.json) {
        Json j;
        j["n"] = g.order();
        j["m"] = g.size();
        j["size"] = r.value;
        j["matching"] = matching_json(r.witness);
        j["nodes"] = r.nodes;
        io.out << j.dump() << '\n';
    } else {
        io.out << "nu_s=" << r.value << '\n';
        write_edges(io.out, r.witness);
    }
    return kOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyOptions {
    InputOptions input;
    std::string matching_path;
};

int cmd_verify(const VerifyOptions& opt, Io io) {
    if (opt.input.path == "-" && opt.matching_path == "-") throw Failure{kInputError, "only one input may be standard input"};
    const Graph g = read_graph_file(opt.input.path, opt.input.format, io.in);
    const Graph listed = read_graph_file(opt.matching_path, "edge-list", io.in);
    const Matching m{listed.edges()};
    InducedCheck check;
    try {
        check = verify_induced_matching(g, m);
    } catch (const GraphError& e) {
        throw Failure{kInputError, e.what()};
    }
    if (opt.input.json) {
        Json j;
        j["valid"] = check.valid;
        j["size"] = m.size();
        j["witness"] = check.witness ? Json{check.witness->first, check.witness->second} : Json(nullptr);
        io.out << j.dump() << '\n';
    } else if (check.valid) {
        io.out << "valid size=" << m.size() << '\n';
    } else {
        io.out << "invalid witness=" << check.witness->first << ',' << check.witness->second << '\n';
    }
    return check.valid ? kOk : kViolation;
}

// ---- fuzz ----------------------------------------------------------------

struct FuzzOptions {
    std::string family = "subcubic";
    std::size_t count = 100;
    Vertex size = 60;
    std::uint64_t seed = 1;
    bool json = false;
};

Graph fuzz_instance(const FuzzOptions& opt, std::uint64_t seed) {
    Rng rng(seed);
    const Vertex n = opt.size;
    if (opt.family == "subcubic") {
        return gen_random_subcubic(n, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(3 * std::int64_t{n} / 2 + 1))), rng.next());
    }
    if (opt.family == "cubic") return gen_random_cubic(n, rng.next());
    if (opt.family == "girth6") return gen_random_girth6(n, 1 + static_cast<int>(rng.below(5)), rng.next());
    if (opt.family == "forest") return gen_random_forest(n, 1 + static_cast<int>(rng.below(6)), rng.next());
    const int max_degree = 1 + static_cast<int>(rng.below(6));
    const std::int64_t cap = std::min(std::int64_t{n} * max_degree / 2, std::int64_t{n} * (n - 1) / 2);
    return gen_random_bounded_degree(n, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cap) + 1)), max_degree, rng.next());
}

/// Every applicable algorithm, bound and oracle cross-check; returns the
/// first problem found.
std::optional<std::string> check_instance(const Graph& g, bool& used_oracle) {
    const BoundReport r = count_invariants(g);
    std::vector<std::pair<std::string, std::int64_t>> sizes;
    auto record = [&](const std::string& name, const Matching& m, std::int64_t bound) -> std::optional<std::string> {
        if (!verify_induced_matching(g, m).valid) return name + " output is not an induced matching";
        const auto size = static_cast<std::int64_t>(m.size());
        if (size < bound) return name + " size " + std::to_string(size) + " below bound " + std::to_string(bound);
        sizes.emplace_back(name, size);
        return std::nullopt;
    };

    try {
        if (r.max_degree <= 3) {
            const ReductionResult red = find_induced_matching_subcubic(g);
            if (!ledger_check(red.trace)) return std::string("ledger check failed");
            if (auto bad = record("reduction", red.matching, std::max(r.thm2_bound, r.thm1_bound.value_or(0)))) return bad;
        }
        if (r.m > 0) {
            if (auto bad = record("greedy", greedy_induced_matching(g), ceil_of(r.greedy_general_bound))) return bad;
        }
        if (r.greedy_forest_bound) {
            if (auto bad = record("forest", forest_greedy_induced_matching(g), ceil_of(*r.greedy_forest_bound))) return bad;
        }
        if (r.prop1_bound) {
            if (auto bad = record("girth6", girth6_induced_matching(g), *r.prop1_bound)) return bad;
        }
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }

    used_oracle = r.m <= 25;
    if (!used_oracle) return std::nullopt;
    const std::int64_t nu = exact_strong_matching_number(g).value;
    for (const auto& [name, size] : sizes) {
        if (size > nu) return name + " size exceeds the strong matching number " + std::to_string(nu);
    }
    std::vector<std::int64_t> bounds{ceil_of(r.greedy_general_bound)};
    if (r.max_degree <= 3) bounds.push_back(r.thm2_bound);
    if (r.thm1_bound) bounds.push_back(*r.thm1_bound);
    if (r.prop1_bound) bounds.push_back(*r.prop1_bound);
    if (r.greedy_forest_bound) bounds.push_back(ceil_of(*r.greedy_forest_bound));
    for (std::int64_t b : bounds) {
        if (b > nu) return "bound " + std::to_string(b) + " exceeds the strong matching number " + std::to_string(nu);
    }
    return std::nullopt;
}

int cmd_fuzz(const FuzzOptions& opt, Io io) {
    if (opt.family == "cubic" && (opt.size < 4 || opt.size % 2 != 0)) throw Failure{kInputError, "cubic family needs an even size >= 4"};
    if (opt.size < 1) throw Failure{kInputError, "size must be positive"};
    std::size_t failed = 0;
    std::size_t oracle_checked = 0;
    std::optional<std::uint64_t> first_seed;
    std::string first_failure;
    for (std::size_t k = 0; k < opt.count; ++k) {
        const std::uint64_t seed = opt.seed + k;
        bool used_oracle = false;
        std::optional<std::string> problem;
        try {
            problem = check_instance(fuzz_instance(opt, seed), used_oracle);
        } catch (const std::exception& e) {
            problem = std::string("generator failed: ") + e.what();
        }
        oracle_checked += used_oracle;
        if (problem) {
            io.err << "seed " << seed << ": " << *problem << '\n';
            if (!first_seed) {
                first_seed = seed;
                first_failure = *problem;
            }
            ++failed;
        }
    }
    if (opt.json) {
        Json j;
        j["family"] = opt.family;
        j["count"] = opt.count;
        j["size"] = opt.size;
        j["seed"] = opt.seed;
        j["passed"] = opt.count - failed;
        j["failed"] = failed;
        j["oracle_checked"] = oracle_checked;
        j["first_failing_seed"] = optional_json(first_seed);
        j["first_failure"] = first_seed ? Json(first_failure) : Json(nullptr);
        io.out << j.dump() << '\n';
    } else {
        io.out << "family=" << opt.family << " count=" << opt.count << " size=" << opt.size << " seed=" << opt.seed
               << " passed=" << opt.count - failed << " failed=" << failed << " oracle_checked=" << oracle_checked
               << " first_failing_seed=" << (first_seed ? std::to_string(*first_seed) : "none") << '\n';
    }
    return failed ? kViolation : kOk;
}

// ---- gen / corpus ----------------------------------------------------------

struct GenOptions {
    std::string family;
    Vertex n = 20;
    std::int64_t m = -1;
    int delta = 3;
    int max_degree = 3;
    std::uint64_t seed = 1;
};

int cmd_gen(const GenOptions& opt, Io io) {
    std::ostringstream header;
    header << "# family=" << opt.family;
    Graph g;
    try {
        const std::string& f = opt.family;
        if (f == "k33plus") {
            g = gen_k33plus();
        } else if (f == "extremal-cubic") {
            g = gen_extremal_cubic();
        } else if (f == "c5-blowup") {
            g = gen_c5_blowup(opt.delta);
            header << " delta=" << opt.delta;
        } else if (f == "odd-regular") {
            g = gen_odd_regular_extremal(opt.delta);
            const Vertex u = g.order() - 2;
            header << " delta=" << opt.delta << "\n# hubs " << u << ' ' << u + 1
                   << ": copy k occupies ids [k*(5r+2), (k+1)*(5r+2)), r=(delta-1)/2; hub " << u
                   << " joins the degree-(delta-1) class of copies 0 and 1, hub " << u + 1 << " of copies 2 and 3";
        } else if (f == "subcubic") {
            const std::int64_t m = opt.m >= 0 ? opt.m : 3 * std::int64_t{opt.n} / 2;
            g = gen_random_subcubic(opt.n, m, opt.seed);
            header << " n=" << opt.n << " m=" << m << " seed=" << opt.seed;
        } else if (f == "cubic") {
            g = gen_random_cubic(opt.n, opt.seed);
            header << " n=" << opt.n << " seed=" << opt.seed;
        } else if (f == "girth6" || f == "forest" || f == "bounded") {
            if (f == "girth6") {
                g = gen_random_girth6(opt.n, opt.max_degree, opt.seed);
            } else if (f == "forest") {
                g = gen_random_forest(opt.n, opt.max_degree, opt.seed);
            } else {
                const std::int64_t m = opt.m >= 0 ? opt.m : std::int64_t{opt.n} * opt.max_degree / 2;
                g = gen_random_bounded_degree(opt.n, m, opt.max_degree, opt.seed);
                header << " m=" << m;
            }
            header << " n=" << opt.n << " max_degree=" << opt.max_degree << " seed=" << opt.seed;
        } else if (f == "cycle") {
            g = gen_cycle(opt.n);
            header << " n=" << opt.n;
        } else if (f == "path") {
            g = gen_path(opt.n);
            header << " n=" << opt.n;
        } else {
            g = gen_petersen();
        }
    } catch (const GraphError& e) {
        throw Failure{kInputError, e.what()};
    }
    io.out << header.str() << '\n';
    write_edge_list(io.out, g);
    return kOk;
}

struct CorpusOptions {
    std::size_t count = 2400;
    std::int64_t max_edges = 25;
    std::uint64_t seed = 1;
};

int cmd_corpus(const CorpusOptions& opt, Io io) {
    write_corpus(io.out, make_corpus(opt.count, opt.max_edges, opt.seed));
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Large induced matchings in graphs of bounded degree", "indmatch"};
    app.require_subcommand(1);

    InputOptions stats;
    auto* stats_cmd = app.add_subcommand("stats", "Structural counts and lower bounds");
    add_input_options(*stats_cmd, stats);

    MatchOptions match;
    auto* match_cmd = app.add_subcommand("match", "Compute and verify an induced matching");
    add_input_options(*match_cmd, match.input);
    match_cmd->add_option("--algorithm,-a", match.algorithm, "Algorithm")
        ->check(CLI::IsMember({"reduction", "greedy", "forest", "girth6"}))
        ->capture_default_str();
    match_cmd->add_flag("--trace", match.trace, "Include the reduction trace");

    ExactOptions exact;
    auto* exact_cmd = app.add_subcommand("exact", "Strong matching number by branch and bound");
    add_input_options(*exact_cmd, exact.input);
    exact_cmd->add_option("--budget", exact.budget, "Branch-and-bound node budget")->capture_default_str();

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check that a list of edges is an induced matching");
    add_input_options(*verify_cmd, verify.input);
    verify_cmd->add_option("matching", verify.matching_path, "Matching file in edge-list format")->required();

    FuzzOptions fuzz;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Check every guarantee on random instances");
    fuzz_cmd->add_option("--family", fuzz.family, "Instance family")
        ->check(CLI::IsMember({"subcubic", "cubic", "girth6", "forest", "general"}))
        ->capture_default_str();
    fuzz_cmd->add_option("--count", fuzz.count, "Number of instances")->capture_default_str();
    fuzz_cmd->add_option("--size", fuzz.size, "Vertices per instance")->capture_default_str();
    fuzz_cmd->add_option("--seed", fuzz.seed, "Seed of the first instance; instance k uses seed+k")->capture_default_str();
    fuzz_cmd->add_flag("--json", fuzz.json, "Print one JSON object");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph in edge-list format");
    gen_cmd->add_option("family", gen.family, "Graph family")
        ->required()
        ->check(CLI::IsMember({"k33plus", "extremal-cubic", "c5-blowup", "odd-regular", "subcubic", "cubic", "girth6",
                               "forest", "bounded", "cycle", "path", "petersen"}));
    gen_cmd->add_option("--n", gen.n, "Order")->capture_default_str();
    gen_cmd->add_option("--m", gen.m, "Target size (random families)");
    gen_cmd->add_option("--delta", gen.delta, "Degree (c5-blowup, odd-regular)")->capture_default_str();
    gen_cmd->add_option("--max-degree", gen.max_degree, "Degree cap (girth6, forest, bounded)")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "Seed")->capture_default_str();

    CorpusOptions corpus;
    auto* corpus_cmd = app.add_subcommand("corpus", "Write a corpus of small instances");
    corpus_cmd->add_option("--count", corpus.count, "Number of instances")->capture_default_str();
    corpus_cmd->add_option("--max-edges", corpus.max_edges, "Edge cap per instance")->capture_default_str();
    corpus_cmd->add_option("--seed", corpus.seed, "Seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    const Io io{in, out, err};
    try {
        if (*stats_cmd) return cmd_stats(stats, io);
        if (*match_cmd) return cmd_match(match, io);
        if (*exact_cmd) return cmd_exact(exact, io);
        if (*verify_cmd) return cmd_verify(verify, io);
        if (*fuzz_cmd) return cmd_fuzz(fuzz, io);
        if (*gen_cmd) return cmd_gen(gen, io);
        return cmd_corpus(corpus, io);
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    }
}

}  // namespace indmatch::cli
