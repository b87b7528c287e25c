// Command-line surface over the sworbit library: validation, invariants,
// reduction with trace/DOT output, vanishing verdicts, and the summand
// classifier.  Exit codes: 0 success, 1 input or computation errors, 2
// usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sworbit/sworbit.hpp"

namespace {

using namespace sworbit;

std::vector<Int> parse_coord_string(const std::string& text) {
    std::vector<Int> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        try {
            out.emplace_back(tok);
        } catch (const std::exception&) {
            raise(errc::invalid_input, "bad coordinate '" + tok + "'");
        }
    }
    return out;
}

void emit(const Report& report, bool machine) {
    std::cout << (machine ? report.render_machine() : report.render_human());
}

int cmd_validate(const std::string& path, bool machine) {
    Report report;
    try {
        WeightedOrbitSpace y = parse_presentation_file(path);
        report.name = y.name;
        report.verdict_kind = "Valid";
        report.verdict_detail = summary(y);
        emit(report, machine);
        return 0;
    } catch (const semantic_error& e) {
        report.name = "invalid";
        report.verdict_kind = "Invalid";
        for (const Violation& v : e.violations()) report.violations.push_back(v.to_string());
        emit(report, machine);
        return 1;
    }
}

int cmd_invariants(const std::string& path, std::int64_t b_plus, bool machine) {
    WeightedOrbitSpace y = parse_presentation_file(path);
    Report report;
    report.name = y.name;
    report.invariants = betti_data(y, b_plus);
    report.verdict_kind = "Invariants";
    report.verdict_detail = summary(y);
    emit(report, machine);
    return 0;
}

int cmd_reduce(const std::string& path, std::int64_t b_plus, bool want_trace,
               const std::string& dot_path, bool machine) {
    WeightedOrbitSpace y = parse_presentation_file(path);
    Report report;
    report.name = y.name;
    try {
        report.invariants = betti_data(y, b_plus);
    } catch (const engine_error&) {
        // b2 bookkeeping can be inconsistent for out-of-scope inputs; the
        // reduction itself re-checks when it needs the data.
    }

    auto [verdict, trace] = reduce(y, b_plus);
    report.verdict_kind = verdict_kind_name(verdict.kind);
    report.verdict_detail = verdict.note;
    report.certificate = verdict.certificate;
    if (verdict.kind == VerdictKind::SummandSphere && verdict.summand_square) {
        SphereCertificate cert;
        cert.kind = SphereKind::TorusSplitting;
        cert.self_intersection = *verdict.summand_square;
        cert.provenance = verdict.note;
        report.certificate = cert;
    }
    // machine consumers always get the replayable trace; the human rendering
    // includes it on request
    if (want_trace || machine) report.step_lines = trace_lines(trace);
    for (const auto& [piece, kind] : trace.summands)
        report.summand_lines.emplace_back(summand_kind_name(kind), summary(piece));

    if (!dot_path.empty()) {
        std::ofstream out(dot_path, std::ios::binary);
        if (!out) raise(errc::invalid_input, "cannot write '" + dot_path + "'");
        out << render_dot(trace, y.name.empty() ? "reduction" : y.name);
    }

    emit(report, machine);
    return 0;
}

int cmd_sw(const std::string& path, std::int64_t b_plus, const std::string& table_path,
           const std::string& xi0_str, bool machine) {
    WeightedOrbitSpace y = parse_presentation_file(path);
    Report report;
    report.name = y.name;
    try {
        report.invariants = betti_data(y, b_plus);
    } catch (const engine_error&) {
    }

    if (!has_fixed_points(y) && !table_path.empty()) {
        if (!y.pic_group || !y.euler_class)
            raise(errc::invalid_input,
                  "the pullback sum needs pic_t and euler_class in the presentation");
        Sw3Table table = parse_sw3_table_file(table_path, *y.pic_group);
        GroupElement xi0 = xi0_str.empty()
                               ? y.pic_group->identity()
                               : element_from_coords(*y.pic_group, parse_coord_string(xi0_str));
        Int sum = sw_pullback_sum(*y.pic_group, *y.euler_class, xi0, table);
        report.verdict_kind = sw_verdict_kind_name(SwVerdictKind::FixedPointFreeValue);
        report.value = sum;
        report.verdict_detail =
            b_plus == 1 ? "b+ = 1: wall crossing makes the value chamber-dependent"
                        : "sum over the coset of pulled-back structures; structures that do not "
                          "pull back have invariant 0";
        emit(report, machine);
        return 0;
    }

    SwVerdict verdict = sw_vanishing(y, b_plus);
    report.verdict_kind = sw_verdict_kind_name(verdict.kind);
    report.verdict_detail = verdict.note;
    if (verdict.reason)
        report.verdict_detail = std::string(sw_reason_name(*verdict.reason)) + ": " + verdict.note;
    if (verdict.value) report.value = verdict.value;
    emit(report, machine);
    return 0;
}

int cmd_classify(std::int64_t b2, std::int64_t sigma, bool spin, bool machine) {
    FintushelSummands fs = fintushel_summands(b2, sigma, spin);
    Report report;
    report.name = "classify";
    report.verdict_kind = "Classified";
    report.verdict_detail = fs.to_string();
    report.summand_lines.emplace_back("CP^2", std::to_string(fs.cp2));
    report.summand_lines.emplace_back("~CP^2", std::to_string(fs.cp2_bar));
    report.summand_lines.emplace_back("S^2xS^2", std::to_string(fs.s2xs2));
    emit(report, machine);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted orbit-space toolkit for circle actions on 4-manifolds"};
    app.require_subcommand(1);

    std::string file;
    std::string table_path;
    std::string dot_path;
    std::string xi0_str;
    std::int64_t b_plus = 0;
    std::int64_t b2 = 0;
    std::int64_t sigma = 0;
    bool spin = false;
    bool machine = false;
    bool want_trace = false;

    CLI::App* validate_cmd = app.add_subcommand("validate", "check that a presentation is legal");
    validate_cmd->add_option("file", file, "presentation file")->required();
    validate_cmd->add_flag("--machine", machine, "machine-readable report");

    CLI::App* invariants_cmd =
        app.add_subcommand("invariants", "chi, b1, b2 and the signature split");
    invariants_cmd->add_option("file", file, "presentation file")->required();
    invariants_cmd->add_option("--b-plus", b_plus, "b+ of the 4-manifold")->required();
    invariants_cmd->add_flag("--machine", machine, "machine-readable report");

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "run the sphere-finding reduction");
    reduce_cmd->add_option("file", file, "presentation file")->required();
    reduce_cmd->add_option("--b-plus", b_plus, "b+ of the 4-manifold")->required();
    reduce_cmd->add_flag("--trace", want_trace, "print every rewrite step");
    reduce_cmd->add_option("--dot", dot_path, "write the decomposition graph to this file");
    reduce_cmd->add_flag("--machine", machine, "machine-readable report");

    CLI::App* sw_cmd = app.add_subcommand("sw", "vanishing verdict or fixed-point-free value");
    sw_cmd->add_option("file", file, "presentation file")->required();
    sw_cmd->add_option("--b-plus", b_plus, "b+ of the 4-manifold")->required();
    sw_cmd->add_option("--table", table_path, "table of quotient invariants (coords : value)");
    sw_cmd->add_option("--xi0", xi0_str, "base structure coordinates, e.g. \"1 0\"");
    sw_cmd->add_flag("--machine", machine, "machine-readable report");

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "summands of a simply connected piece");
    classify_cmd->add_option("--b2", b2, "second Betti number")->required();
    classify_cmd->add_option("--sigma", sigma, "signature")->required();
    classify_cmd->add_option("--spin", spin, "spin (true/false)");
    classify_cmd->add_flag("--machine", machine, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return cmd_validate(file, machine);
        if (app.got_subcommand(invariants_cmd)) return cmd_invariants(file, b_plus, machine);
        if (app.got_subcommand(reduce_cmd))
            return cmd_reduce(file, b_plus, want_trace, dot_path, machine);
        if (app.got_subcommand(sw_cmd)) return cmd_sw(file, b_plus, table_path, xi0_str, machine);
        if (app.got_subcommand(classify_cmd)) return cmd_classify(b2, sigma, spin, machine);
    } catch (const syntax_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const semantic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const engine_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
