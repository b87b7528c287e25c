#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sworbit/errors.hpp"
#include "sworbit/orbit_space.hpp"

namespace sworbit {

enum class SphereKind {
    BoundaryToBoundaryArc,
    ArcBetweenTwoFixedPoints,
    ArcFixedPointToBoundary,
    TorusSplitting,
};

inline const char* sphere_kind_name(SphereKind kind) {
    switch (kind) {
        case SphereKind::BoundaryToBoundaryArc: return "BoundaryToBoundaryArc";
        case SphereKind::ArcBetweenTwoFixedPoints: return "ArcBetweenTwoFixedPoints";
        case SphereKind::ArcFixedPointToBoundary: return "ArcFixedPointToBoundary";
        case SphereKind::TorusSplitting: return "TorusSplitting";
    }
    return "UnknownSphereKind";
}

/// Witness for an essential embedded sphere of nonnegative square, recorded
/// as the preimage of the named arc or splitting surface in the quotient.
struct SphereCertificate {
    SphereKind kind = SphereKind::ArcBetweenTwoFixedPoints;
    std::int64_t self_intersection = 0;
    std::string provenance;

    bool operator==(const SphereCertificate&) const = default;
};

enum class RewriteRule {
    SplitCircle,
    PaoReplaceA,
    PaoReplaceB,
    BoundaryArcSphere,
    BallFiberSumSplit,
    OneBoundaryAnalysis,
    FinalTwoFixedPoints,
};

inline const char* rewrite_rule_name(RewriteRule rule) {
    switch (rule) {
        case RewriteRule::SplitCircle: return "SplitCircle";
        case RewriteRule::PaoReplaceA: return "PaoReplaceA";
        case RewriteRule::PaoReplaceB: return "PaoReplaceB";
        case RewriteRule::BoundaryArcSphere: return "BoundaryArcSphere";
        case RewriteRule::BallFiberSumSplit: return "BallFiberSumSplit";
        case RewriteRule::OneBoundaryAnalysis: return "OneBoundaryAnalysis";
        case RewriteRule::FinalTwoFixedPoints: return "FinalTwoFixedPoints";
    }
    return "UnknownRule";
}

/// One application of a rewrite rule.  `after` is what the main line
/// continues with; `emitted` is a summand set aside by the step, if any.
/// For BallFiberSumSplit, `after` is the fixed-point-free piece with the two
/// isolated fixed points of the re-glued trivial factor restored.
struct RewriteStep {
    RewriteRule rule;
    std::optional<std::size_t> circle_id;
    std::optional<std::int64_t> cut_point;
    std::vector<std::string> involved;
    WeightedOrbitSpace before;
    WeightedOrbitSpace after;
    std::optional<WeightedOrbitSpace> emitted;
};

enum class SummandKind { MainPiece, SimplyConnectedPiece, FixedPointFreePiece };

inline const char* summand_kind_name(SummandKind kind) {
    switch (kind) {
        case SummandKind::MainPiece: return "MainPiece";
        case SummandKind::SimplyConnectedPiece: return "SimplyConnectedPiece";
        case SummandKind::FixedPointFreePiece: return "FixedPointFreePiece";
    }
    return "UnknownSummandKind";
}

struct ReductionTrace {
    std::vector<RewriteStep> steps;
    std::vector<std::pair<WeightedOrbitSpace, SummandKind>> summands;
};

/// Closed simply connected summands decompose into copies of CP^2, its
/// reverse-oriented copy, and S^2 x S^2; counts below, S^4 factors dropped.
struct FintushelSummands {
    std::int64_t cp2 = 0;
    std::int64_t cp2_bar = 0;
    std::int64_t s2xs2 = 0;

    std::int64_t total() const { return cp2 + cp2_bar + s2xs2; }
    std::int64_t b2_sum() const { return cp2 + cp2_bar + 2 * s2xs2; }
    std::int64_t sigma_sum() const { return cp2 - cp2_bar; }
    bool has_nonnegative_sphere() const { return cp2 > 0 || s2xs2 > 0; }

    bool operator==(const FintushelSummands&) const = default;

    std::string to_string() const {
        if (total() == 0) return "S^4";
        std::ostringstream out;
        bool first = true;
        auto emit = [&](std::int64_t count, const char* label) {
            if (count == 0) return;
            if (!first) out << " # ";
            first = false;
            if (count > 1) out << count << "*";
            out << label;
        };
        emit(cp2, "CP^2");
        emit(cp2_bar, "~CP^2");
        emit(s2xs2, "S^2xS^2");
        return out.str();
    }
};

inline FintushelSummands fintushel_summands(std::int64_t b2, std::int64_t sigma, bool spin) {
    if (b2 < 0) raise(errc::invalid_input, "b2 must be nonnegative");
    if (sigma > b2 || sigma < -b2)
        raise(errc::signature_out_of_range,
              "|sigma| = " + std::to_string(sigma < 0 ? -sigma : sigma) + " exceeds b2 = " +
                  std::to_string(b2));
    FintushelSummands out;
    if (spin) {
        if (sigma != 0)
            raise(errc::spin_parity_violation, "a spin connect sum of these factors has signature 0");
        if (b2 % 2 != 0)
            raise(errc::spin_parity_violation, "a spin connect sum of these factors has even b2");
        out.s2xs2 = b2 / 2;
        return out;
    }
    if ((b2 + sigma) % 2 != 0)
        raise(errc::parity_violation,
              "b2 and sigma must have equal parity to split into intersection-form summands");
    out.cp2 = (b2 + sigma) / 2;
    out.cp2_bar = (b2 - sigma) / 2;
    return out;
}

/// Caller-known topology of an emitted simply connected summand, used to
/// classify it during reduction.
struct SummandTopology {
    std::int64_t b2 = 0;
    std::int64_t sigma = 0;
    bool spin = false;
};

enum class PaoPolicy {
    IndexDriven,     // branch A when the circle's index is 0, branch B otherwise
    PreferBoundary,  // always branch B
};

struct ReduceOptions {
    PaoPolicy pao = PaoPolicy::IndexDriven;
    std::vector<SummandTopology> summand_topology;  // consumed in emission order
};

enum class VerdictKind { SphereFound, SummandSphere, OutOfScope };

inline const char* verdict_kind_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::SphereFound: return "SphereFound";
        case VerdictKind::SummandSphere: return "SummandSphere";
        case VerdictKind::OutOfScope: return "OutOfScope";
    }
    return "UnknownVerdict";
}

struct Verdict {
    VerdictKind kind = VerdictKind::OutOfScope;
    std::optional<SphereCertificate> certificate;      // SphereFound
    std::optional<std::int64_t> summand_square;        // SummandSphere
    std::string note;

    std::optional<std::int64_t> square() const {
        if (certificate) return certificate->self_intersection;
        return summand_square;
    }
};

namespace detail {
inline std::string weight_list_string(const std::vector<Weight>& ws) {
    std::string s = "[";
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) s += " ";
        s += "(" + std::to_string(ws[i].alpha) + "," + std::to_string(ws[i].beta) + ")";
    }
    return s + "]";
}
}  // namespace detail

/// Equivariant connect-sum split at a fixed point of a multiply weighted
/// circle.  The emitted piece N1 is a trivial quotient carrying the whole
/// circle; the residual circle in Y0 keeps the two segments adjacent to the
/// cut point.  The circle's index stays on the residual so both pieces keep
/// index sum 0, and chi(before) = chi(Y0) + chi(N1) - 2 holds exactly.
inline std::pair<WeightedOrbitSpace, WeightedOrbitSpace> split_circle(const WeightedOrbitSpace& y,
                                                                      std::size_t circle_id,
                                                                      std::int64_t cut_fixed_point) {
    if (circle_id >= y.circles.size())
        raise(errc::invalid_input, "no circle with id " + std::to_string(circle_id));
    const WeightedCircle& c = y.circles[circle_id];
    if (c.is_simply_weighted())
        raise(errc::not_multiply_weighted,
              "circle " + std::to_string(circle_id) + " has no fixed points to cut at");
    if (c.fixed_point_count < 3)
        raise(errc::too_few_fixed_points, "circle " + std::to_string(circle_id) + " has only " +
                                              std::to_string(c.fixed_point_count) + " fixed points");
    if (cut_fixed_point < 0 || cut_fixed_point >= c.fixed_point_count)
        raise(errc::invalid_input, "cut point " + std::to_string(cut_fixed_point) + " out of range");

    std::size_t s = c.segments.size();
    std::size_t cut = static_cast<std::size_t>(cut_fixed_point);

    WeightedCircle residual;
    residual.segments = {c.segments[(cut + s - 1) % s], c.segments[cut % s]};
    residual.fixed_point_count = 2;
    residual.index = c.index;

    WeightedOrbitSpace y0 = y;
    y0.circles[circle_id] = residual;

    WeightedCircle full = c;
    full.index = 0;

    WeightedOrbitSpace n1;
    n1.name = y.name.empty() ? "summand" : y.name + ".summand";
    n1.b1 = 0;
    n1.circles.push_back(full);
    return {std::move(y0), std::move(n1)};
}

enum class PaoBranch { A, B };

/// Replace a two-fixed-point circle: branch A trades it for a pair of
/// isolated fixed points with indices +1 and -1 (so the circle's index must
/// be 0); branch B trades it for a genus-0 boundary carrying the index.
inline WeightedOrbitSpace pao_replace(const WeightedOrbitSpace& y, std::size_t circle_id,
                                      PaoBranch branch) {
    if (circle_id >= y.circles.size())
        raise(errc::invalid_input, "no circle with id " + std::to_string(circle_id));
    const WeightedCircle& c = y.circles[circle_id];
    if (c.fixed_point_count != 2)
        raise(errc::wrong_fixed_point_count, "circle " + std::to_string(circle_id) + " has " +
                                                 std::to_string(c.fixed_point_count) +
                                                 " fixed points, need exactly 2");
    WeightedOrbitSpace out = y;
    out.circles.erase(out.circles.begin() + static_cast<std::ptrdiff_t>(circle_id));
    if (branch == PaoBranch::A) {
        if (c.index != 0)
            raise(errc::index_unassignable,
                  "branch A emits a +1/-1 pair, so the circle's index must be 0, not " +
                      std::to_string(c.index));
        out.isolated.push_back({+1});
        out.isolated.push_back({-1});
    } else {
        out.boundaries.push_back({0, c.index});
    }
    return out;
}

/// With two or more boundary components, the preimage of an arc joining two
/// of them is already the desired sphere.
inline std::optional<SphereCertificate> find_boundary_arc_sphere(const WeightedOrbitSpace& y) {
    if (y.boundaries.size() < 2) return std::nullopt;
    SphereCertificate cert;
    cert.kind = SphereKind::BoundaryToBoundaryArc;
    cert.self_intersection = 0;
    cert.provenance = "preimage of an arc joining boundary 0 and boundary 1";
    return cert;
}

/// Pure arithmetic of the one-boundary case: b1 = (b2 - n + 2g) / 2, defined
/// only when b2 > n and the numerator is even.
inline std::int64_t lemma_boundary_b1(std::int64_t n, std::int64_t g, std::int64_t b2) {
    if (n < 0 || g < 0) raise(errc::invalid_input, "counts must be nonnegative");
    if (b2 <= n)
        raise(errc::not_enough_topology,
              "b2 = " + std::to_string(b2) + " must exceed the fixed point count n = " +
                  std::to_string(n) + " (the intersection form is not negative definite)");
    std::int64_t numerator = b2 - n + 2 * g;
    if (numerator % 2 != 0)
        raise(errc::parity_violation, "b2 - n + 2g = " + std::to_string(numerator) + " is odd");
    return numerator / 2;
}

/// Terminal analysis when exactly one boundary remains: n isolated +1 points
/// against a boundary of index -n.  Verifies the b1 formula, then certifies
/// the sphere obtained from the essential torus over a loop missing the
/// Euler class.
inline SphereCertificate one_boundary_analysis(const WeightedOrbitSpace& y, std::int64_t b_plus) {
    if (y.boundaries.size() != 1)
        raise(errc::precondition_violated,
              "need exactly one boundary component, found " + std::to_string(y.boundaries.size()));
    if (!y.arcs.empty())
        raise(errc::precondition_violated, "weighted arcs must be eliminated before this analysis");
    for (const auto& c : y.circles)
        if (!c.is_simply_weighted())
            raise(errc::precondition_violated,
                  "multiply weighted circles must be eliminated before this analysis");
    std::int64_t n = static_cast<std::int64_t>(y.isolated.size());
    for (const auto& p : y.isolated)
        if (p.index != +1)
            raise(errc::precondition_violated, "every isolated fixed point must carry index +1");
    if (y.boundaries[0].index != -n)
        raise(errc::precondition_violated, "boundary index must be -n = " + std::to_string(-n) +
                                               ", found " + std::to_string(y.boundaries[0].index));
    if (b_plus <= 1)
        raise(errc::precondition_violated, "this analysis needs b+ > 1");

    BettiData betti = betti_data(y, b_plus);
    std::int64_t g = y.boundaries[0].genus;
    std::int64_t b1 = lemma_boundary_b1(n, g, betti.b2);
    if (b1 != y.b1)
        raise(errc::inconsistent_betti, "presentation claims b1 = " + std::to_string(y.b1) +
                                            " but the boundary formula gives " + std::to_string(b1));

    SphereCertificate cert;
    cert.kind = SphereKind::ArcFixedPointToBoundary;
    cert.self_intersection = 0;
    cert.provenance = "preimage of an arc meeting the boundary, homologous to the essential torus "
                      "over a loop that is not a multiple of the Euler class (b1 = " +
                      std::to_string(b1) + " > g = " + std::to_string(g) + ")";
    return cert;
}

/// Enclose all arcs and isolated fixed points in a ball; index sum 0 inside
/// makes the preimage of its boundary sphere trivial, splitting X as a fiber
/// sum of a fixed-point-free piece X1 and a simply connected piece N.
/// chi(before) = chi(X1) + chi(N) holds exactly since chi(X1) = 0.
inline std::pair<WeightedOrbitSpace, WeightedOrbitSpace> ball_fiber_sum_split(
    const WeightedOrbitSpace& y) {
    for (const auto& c : y.circles)
        if (!c.is_simply_weighted())
            raise(errc::multiply_weighted_circle_present,
                  "multiply weighted circles must be split before the fiber-sum step");
    if (!y.boundaries.empty())
        raise(errc::boundary_present, "boundary components must be handled before the fiber-sum step");

    std::int64_t enclosed = 0;
    for (const auto& a : y.arcs) enclosed += a.index;
    for (const auto& p : y.isolated) enclosed += p.index;
    if (enclosed != 0)
        raise(errc::enclosed_index_nonzero,
              "arcs and isolated points have index sum " + std::to_string(enclosed) +
                  "; the enclosing sphere's preimage is not trivial");

    WeightedOrbitSpace x1;
    x1.name = y.name.empty() ? "free-part" : y.name + ".free";
    x1.b1 = y.b1;
    x1.circles = y.circles;

    WeightedOrbitSpace n;
    n.name = y.name.empty() ? "summand" : y.name + ".summand";
    n.b1 = 0;
    n.arcs = y.arcs;
    n.isolated = y.isolated;
    return {std::move(x1), std::move(n)};
}

/// Terminal configuration: two isolated fixed points of index +1 and -1 and
/// nothing else singular.  b+ > 0 forces b1(Y) > 0, which yields a loop that
/// is not a multiple of the Euler class; the preimages of the two arcs it
/// splits into are spheres of square 0 and one of them is essential.
inline SphereCertificate final_two_fixed_points(const WeightedOrbitSpace& y, std::int64_t b_plus) {
    if (b_plus <= 0) raise(errc::precondition_violated, "this analysis needs b+ > 0");
    if (!y.arcs.empty() || !y.boundaries.empty())
        raise(errc::precondition_violated,
              "only isolated fixed points and simply weighted circles may remain");
    for (const auto& c : y.circles)
        if (!c.is_simply_weighted())
            raise(errc::precondition_violated,
                  "only isolated fixed points and simply weighted circles may remain");
    if (y.isolated.size() != 2)
        raise(errc::precondition_violated,
              "need exactly two isolated fixed points, found " + std::to_string(y.isolated.size()));
    std::int64_t lo = std::min(y.isolated[0].index, y.isolated[1].index);
    std::int64_t hi = std::max(y.isolated[0].index, y.isolated[1].index);
    if (lo != -1 || hi != +1)
        raise(errc::precondition_violated, "the two fixed points must carry indices +1 and -1");
    if (y.b1 <= 0)
        raise(errc::b1_not_positive,
              "b+ > 0 forces b1 > 0 through chi = 2 - 2*b1 + b2, but the presentation has b1 = " +
                  std::to_string(y.b1));

    SphereCertificate cert;
    cert.kind = SphereKind::ArcBetweenTwoFixedPoints;
    cert.self_intersection = 0;
    cert.provenance = "preimage of one of the two arcs joining the fixed points, obtained by "
                      "isotoping a loop that is not a multiple of the Euler class";
    return cert;
}

namespace detail {

inline void append_step(ReductionTrace& trace, RewriteStep step) {
    trace.steps.push_back(std::move(step));
}

/// Classify an emitted summand if the caller supplied its topology; returns
/// a verdict when the classification yields a sphere of nonnegative square.
inline std::optional<Verdict> classify_emission(const ReduceOptions& options,
                                                std::size_t emission_index) {
    if (emission_index >= options.summand_topology.size()) return std::nullopt;
    const SummandTopology& top = options.summand_topology[emission_index];
    FintushelSummands factors = fintushel_summands(top.b2, top.sigma, top.spin);
    if (!factors.has_nonnegative_sphere()) return std::nullopt;
    Verdict v;
    v.kind = VerdictKind::SummandSphere;
    v.summand_square = factors.cp2 > 0 ? 1 : 0;
    v.note = "emitted summand " + std::to_string(emission_index) + " classified as " +
             factors.to_string() +
             (factors.cp2 > 0 ? "; a projective line has square 1" : "; a sphere factor has square 0");
    return v;
}

}  // namespace detail

/// Run the full reduction.  Rule order is fixed: split every circle with at
/// least three fixed points, replace every two-fixed-point circle, then
/// resolve boundaries or perform the fiber-sum split and the final
/// two-fixed-point analysis.  Returns the verdict and the replayable trace.
inline std::pair<Verdict, ReductionTrace> reduce(const WeightedOrbitSpace& input,
                                                 std::int64_t b_plus,
                                                 const ReduceOptions& options = {}) {
    {
        std::vector<Violation> violations = validate(input);
        if (!violations.empty())
            raise(errc::invalid_input, "presentation is not legally weighted: " +
                                           violations.front().to_string());
    }
    if (b_plus < 0) raise(errc::invalid_input, "b+ must be nonnegative");

    ReductionTrace trace;

    if (!has_fixed_points(input)) {
        Verdict v;
        v.kind = VerdictKind::OutOfScope;
        v.note = "fixed-point-free action: no reduction applies; use the pullback-sum formula";
        trace.summands.emplace_back(input, SummandKind::MainPiece);
        return {std::move(v), std::move(trace)};
    }
    if (b_plus == 0) {
        Verdict v;
        v.kind = VerdictKind::OutOfScope;
        v.note = "hypothesis b+ > 0 unmet; no vanishing claim";
        trace.summands.emplace_back(input, SummandKind::MainPiece);
        return {std::move(v), std::move(trace)};
    }

    WeightedOrbitSpace current = input;
    std::size_t emissions = 0;

    // Phase 1: equivariant connect-sum splits.
    for (std::size_t i = 0; i < current.circles.size(); ++i) {
        if (current.circles[i].fixed_point_count < 3) continue;
        auto [y0, n1] = split_circle(current, i, 0);
        RewriteStep step;
        step.rule = RewriteRule::SplitCircle;
        step.circle_id = i;
        step.cut_point = 0;
        step.involved = {"circle " + std::to_string(i) + " " +
                         detail::weight_list_string(current.circles[i].segments)};
        step.before = current;
        step.after = y0;
        step.emitted = n1;
        detail::append_step(trace, std::move(step));
        trace.summands.emplace_back(n1, SummandKind::SimplyConnectedPiece);
        current = std::move(y0);
        std::optional<Verdict> short_circuit = detail::classify_emission(options, emissions++);
        if (short_circuit) {
            trace.summands.emplace_back(current, SummandKind::MainPiece);
            return {std::move(*short_circuit), std::move(trace)};
        }
    }

    // Phase 2: replace every two-fixed-point circle.
    for (std::size_t i = 0; i < current.circles.size();) {
        const WeightedCircle& c = current.circles[i];
        if (c.fixed_point_count != 2) {
            ++i;
            continue;
        }
        PaoBranch branch = PaoBranch::B;
        if (options.pao == PaoPolicy::IndexDriven && c.index == 0) branch = PaoBranch::A;
        WeightedOrbitSpace next = pao_replace(current, i, branch);
        RewriteStep step;
        step.rule = branch == PaoBranch::A ? RewriteRule::PaoReplaceA : RewriteRule::PaoReplaceB;
        step.circle_id = i;
        step.involved = {"circle " + std::to_string(i) + " " +
                         detail::weight_list_string(c.segments)};
        step.before = current;
        step.after = next;
        detail::append_step(trace, std::move(step));
        current = std::move(next);
    }

    // Phase 3: boundary resolution.
    if (std::optional<SphereCertificate> cert = find_boundary_arc_sphere(current)) {
        RewriteStep step;
        step.rule = RewriteRule::BoundaryArcSphere;
        step.involved = {"boundary 0", "boundary 1"};
        step.before = current;
        step.after = current;
        detail::append_step(trace, std::move(step));
        trace.summands.emplace_back(current, SummandKind::MainPiece);
        Verdict v;
        v.kind = VerdictKind::SphereFound;
        v.certificate = *cert;
        return {std::move(v), std::move(trace)};
    }
    if (current.boundaries.size() == 1) {
        SphereCertificate cert = one_boundary_analysis(current, b_plus);
        RewriteStep step;
        step.rule = RewriteRule::OneBoundaryAnalysis;
        step.involved = {"boundary 0"};
        step.before = current;
        step.after = current;
        detail::append_step(trace, std::move(step));
        trace.summands.emplace_back(current, SummandKind::MainPiece);
        Verdict v;
        v.kind = VerdictKind::SphereFound;
        v.certificate = cert;
        return {std::move(v), std::move(trace)};
    }

    // Phase 4: fiber-sum split, then the terminal two-fixed-point analysis.
    auto [x1, n] = ball_fiber_sum_split(current);
    WeightedOrbitSpace recomposed = x1;
    recomposed.name = current.name;
    recomposed.isolated.push_back({+1});
    recomposed.isolated.push_back({-1});
    {
        RewriteStep step;
        step.rule = RewriteRule::BallFiberSumSplit;
        for (std::size_t i = 0; i < current.arcs.size(); ++i)
            step.involved.push_back("arc " + std::to_string(i));
        for (std::size_t i = 0; i < current.isolated.size(); ++i)
            step.involved.push_back("isolated " + std::to_string(i));
        step.before = current;
        step.after = recomposed;
        step.emitted = n;
        detail::append_step(trace, std::move(step));
    }
    trace.summands.emplace_back(n, SummandKind::SimplyConnectedPiece);
    trace.summands.emplace_back(x1, SummandKind::FixedPointFreePiece);
    {
        std::optional<Verdict> short_circuit = detail::classify_emission(options, emissions++);
        if (short_circuit) {
            trace.summands.emplace_back(recomposed, SummandKind::MainPiece);
            return {std::move(*short_circuit), std::move(trace)};
        }
    }
    current = std::move(recomposed);

    SphereCertificate cert = final_two_fixed_points(current, b_plus);
    RewriteStep step;
    step.rule = RewriteRule::FinalTwoFixedPoints;
    step.involved = {"isolated +1", "isolated -1"};
    step.before = current;
    step.after = current;
    detail::append_step(trace, std::move(step));
    trace.summands.emplace_back(current, SummandKind::MainPiece);
    Verdict v;
    v.kind = VerdictKind::SphereFound;
    v.certificate = cert;
    return {std::move(v), std::move(trace)};
}

/// Termination bound: total fixed points sitting on circles, plus the at
/// most three bookkeeping phases that each apply once.
inline std::int64_t step_bound(const WeightedOrbitSpace& y) {
    std::int64_t circle_points = 0;
    for (const auto& c : y.circles) circle_points += c.fixed_point_count;
    return circle_points + 3;
}

}  // namespace sworbit
