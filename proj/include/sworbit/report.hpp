#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sworbit/integers.hpp"
#include "sworbit/orbit_space.hpp"
#include "sworbit/reduce.hpp"

namespace sworbit {

inline std::string trace_step_line(const RewriteStep& step, std::size_t position) {
    std::ostringstream out;
    out << "step " << position << ": " << rewrite_rule_name(step.rule);
    if (step.circle_id) out << " circle=" << *step.circle_id;
    if (step.cut_point) out << " cut=" << *step.cut_point;
    for (const std::string& item : step.involved) out << " [" << item << "]";
    out << " chi " << euler_characteristic(step.before) << " -> "
        << euler_characteristic(step.after);
    if (step.emitted) out << ", emits chi " << euler_characteristic(*step.emitted);
    return out.str();
}

inline std::vector<std::string> trace_lines(const ReductionTrace& trace) {
    std::vector<std::string> out;
    out.reserve(trace.steps.size());
    for (std::size_t i = 0; i < trace.steps.size(); ++i)
        out.push_back(trace_step_line(trace.steps[i], i + 1));
    return out;
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}
}  // namespace detail

/// Renders the trace as a directed graph: one node per main-line state, one
/// edge per step, and a standalone dashed node per emitted summand.  The
/// result is always acyclic with edge count equal to the step count.
inline std::string render_dot(const ReductionTrace& trace, const std::string& graph_name = "reduction") {
    std::ostringstream out;
    out << "digraph \"" << detail::dot_escape(graph_name) << "\" {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";

    if (trace.steps.empty()) {
        std::string label = "input";
        for (const auto& [piece, kind] : trace.summands)
            if (kind == SummandKind::MainPiece) label = summary(piece);
        out << "  s0 [label=\"" << detail::dot_escape(label) << "\"];\n";
    } else {
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            out << "  s" << i << " [label=\"" << detail::dot_escape(summary(trace.steps[i].before))
                << "\"];\n";
        }
        out << "  s" << trace.steps.size() << " [label=\""
            << detail::dot_escape(summary(trace.steps.back().after)) << "\"];\n";
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            out << "  s" << i << " -> s" << i + 1 << " [label=\""
                << rewrite_rule_name(trace.steps[i].rule) << "\"];\n";
        }
    }

    std::size_t emitted = 0;
    for (const auto& [piece, kind] : trace.summands) {
        if (kind == SummandKind::MainPiece) continue;
        out << "  n" << emitted++ << " [style=dashed, label=\"" << summand_kind_name(kind) << "\\n"
            << detail::dot_escape(summary(piece)) << "\"];\n";
    }

    out << "}\n";
    return out.str();
}

/// Uniform result document for the command-line surface.  Human and machine
/// renderings read the same fields, so their numbers agree by construction.
struct Report {
    std::string name;
    std::optional<BettiData> invariants;
    std::string verdict_kind;
    std::string verdict_detail;
    std::optional<Int> value;
    std::optional<SphereCertificate> certificate;
    std::vector<std::string> step_lines;
    std::vector<std::pair<std::string, std::string>> summand_lines;  // (kind, summary)
    std::vector<std::string> candidates;
    std::vector<std::string> violations;

    std::string render_human() const {
        std::ostringstream out;
        out << "== " << (name.empty() ? "report" : name) << " ==\n";
        if (invariants) {
            out << "invariants: chi=" << invariants->chi << " b1=" << invariants->b1
                << " b2=" << invariants->b2 << " b+=" << invariants->b_plus
                << " b-=" << invariants->b_minus << "\n";
        }
        if (!violations.empty()) {
            out << "violations:\n";
            for (const std::string& v : violations) out << "  - " << v << "\n";
        }
        if (!verdict_kind.empty()) {
            out << "verdict: " << verdict_kind;
            if (!verdict_detail.empty()) out << " (" << verdict_detail << ")";
            out << "\n";
        }
        if (value) out << "value: " << int_to_string(*value) << "\n";
        if (certificate) {
            out << "certificate: " << sphere_kind_name(certificate->kind)
                << " square=" << certificate->self_intersection << "\n";
            if (!certificate->provenance.empty())
                out << "  via " << certificate->provenance << "\n";
        }
        if (!candidates.empty()) {
            out << "candidates:\n";
            for (const std::string& c : candidates) out << "  - " << c << "\n";
        }
        if (!step_lines.empty()) {
            out << "trace (" << step_lines.size() << " steps):\n";
            for (const std::string& s : step_lines) out << "  " << s << "\n";
        }
        if (!summand_lines.empty()) {
            out << "pieces:\n";
            for (const auto& [kind, text] : summand_lines)
                out << "  - " << kind << ": " << text << "\n";
        }
        return out.str();
    }

    std::string render_machine() const {
        std::ostringstream out;
        out << "report " << (name.empty() ? "unnamed" : name) << "\n";
        if (invariants) {
            out << "chi " << invariants->chi << "\n";
            out << "b1 " << invariants->b1 << "\n";
            out << "b2 " << invariants->b2 << "\n";
            out << "b_plus " << invariants->b_plus << "\n";
            out << "b_minus " << invariants->b_minus << "\n";
        }
        for (const std::string& v : violations) out << "violation " << v << "\n";
        if (!verdict_kind.empty()) out << "verdict " << verdict_kind << "\n";
        if (!verdict_detail.empty()) out << "detail " << verdict_detail << "\n";
        if (value) out << "value " << int_to_string(*value) << "\n";
        if (certificate) {
            out << "certificate " << sphere_kind_name(certificate->kind) << "\n";
            out << "square " << certificate->self_intersection << "\n";
        }
        for (const std::string& c : candidates) out << "candidate " << c << "\n";
        out << "steps " << step_lines.size() << "\n";
        for (const std::string& s : step_lines) out << "trace " << s << "\n";
        for (const auto& [kind, text] : summand_lines)
            out << "piece " << kind << " " << text << "\n";
        return out.str();
    }
};

}  // namespace sworbit
