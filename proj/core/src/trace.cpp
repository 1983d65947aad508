#include <array>
#include <ostream>
#include <sstream>

#include "indmatch/reduction.hpp"

namespace indmatch {

namespace {

constexpr std::array<std::string_view, 14> kRuleNames{
    "R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10", "R11", "R12", "COMPONENT-K33PLUS", "COMPONENT-BRUTE",
};

}  // namespace

std::string_view rule_name(Rule r) { return kRuleNames[static_cast<std::size_t>(r) - 1]; }

std::optional<Rule> parse_rule_name(std::string_view name) {
    for (std::size_t k = 0; k < kRuleNames.size(); ++k) {
        if (kRuleNames[k] == name) return static_cast<Rule>(k + 1);
    }
    return std::nullopt;
}

bool is_local_rule(Rule r) { return r >= Rule::R1 && r <= Rule::R12; }

std::string format_step(const ReductionStep& step) {
    std::ostringstream out;
    out << "rule=" << rule_name(step.rule) << " removed=";
    for (std::size_t k = 0; k < step.removed.size(); ++k) out << (k ? "," : "") << step.removed[k];
    out << " added=";
    for (std::size_t k = 0; k < step.added.size(); ++k) {
        out << (k ? "," : "") << step.added[k].u << '-' << step.added[k].v;
    }
    out << " isolated=" << step.isolated_created();
    return out.str();
}

std::string format_trace_summary(const ReductionTrace& trace) {
    std::ostringstream out;
    out << "matching=" << trace.matching().size() << " bound=" << trace.required_size
        << " ok=" << (ledger_check(trace).ok ? "true" : "false");
    return out.str();
}

void write_trace(std::ostream& out, const ReductionTrace& trace) {
    for (const auto& step : trace.steps) out << format_step(step) << '\n';
    out << format_trace_summary(trace) << '\n';
}

}  // namespace indmatch
