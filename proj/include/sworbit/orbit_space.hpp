#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sworbit/abelian_group.hpp"
#include "sworbit/errors.hpp"

namespace sworbit {

/// Local isotropy datum along an exceptional orbit segment.  A legal weight
/// is coprime and normalized to 0 <= beta < alpha; (1, 0) is trivial isotropy.
struct Weight {
    std::int64_t alpha = 1;
    std::int64_t beta = 0;

    auto operator<=>(const Weight&) const = default;
};

inline bool weight_is_coprime(const Weight& w) {
    return std::gcd(w.alpha, w.beta) == 1;
}

inline bool weight_is_normalized(const Weight& w) {
    return w.alpha >= 1 && w.beta >= 0 && w.beta < w.alpha;
}

inline Weight normalize_weight(Weight w) {
    if (w.alpha < 1) raise(errc::invalid_input, "weight alpha must be at least 1");
    w.beta %= w.alpha;
    if (w.beta < 0) w.beta += w.alpha;
    return w;
}

/// Weighted arc: s segments between consecutive fixed points, hence
/// 2 endpoint fixed points and s-1 interior ones.
struct WeightedArc {
    std::vector<Weight> segments;
    std::int64_t index = 0;

    std::int64_t fixed_point_count() const { return static_cast<std::int64_t>(segments.size()) + 1; }

    bool operator==(const WeightedArc&) const = default;
};

/// Weighted circle.  Simply weighted (no fixed points) carries exactly one
/// weight; multiply weighted carries one segment per fixed point, cyclically.
struct WeightedCircle {
    std::vector<Weight> segments;
    std::int64_t fixed_point_count = 0;
    std::int64_t index = 0;

    bool is_simply_weighted() const { return fixed_point_count == 0; }

    bool operator==(const WeightedCircle&) const = default;
};

struct IsolatedFixedPoint {
    std::int64_t index = 0;

    bool operator==(const IsolatedFixedPoint&) const = default;
};

/// Fixed surface in the 4-manifold, seen as a boundary component of the
/// quotient.  Contributes 2 - 2*genus to the Euler characteristic.
struct BoundarySurface {
    std::int64_t genus = 0;
    std::int64_t index = 0;

    bool operator==(const BoundarySurface&) const = default;
};

/// A weighted presentation of the quotient 3-manifold Y of a circle action:
/// singular orbit data, per-component indices, first Betti number of Y, and
/// optionally the group of local line-bundle data with the Euler class in it.
struct WeightedOrbitSpace {
    std::string name;
    std::int64_t b1 = 0;
    std::vector<WeightedArc> arcs;
    std::vector<WeightedCircle> circles;
    std::vector<IsolatedFixedPoint> isolated;
    std::vector<BoundarySurface> boundaries;
    std::optional<FgAbelianGroup> pic_group;
    std::optional<GroupElement> euler_class;

    bool operator==(const WeightedOrbitSpace&) const = default;
};

enum class ViolationKind {
    IndexSumNonzero,
    WeightAlphaNotPositive,
    WeightNotCoprime,
    WeightNotNormalized,
    EmptySegments,
    CircleFixedPointMismatch,
    NegativeFixedPointCount,
    NegativeGenus,
    NegativeB1,
    EulerClassGroupMismatch,
};

inline const char* violation_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::IndexSumNonzero: return "IndexSumNonzero";
        case ViolationKind::WeightAlphaNotPositive: return "WeightAlphaNotPositive";
        case ViolationKind::WeightNotCoprime: return "WeightNotCoprime";
        case ViolationKind::WeightNotNormalized: return "WeightNotNormalized";
        case ViolationKind::EmptySegments: return "EmptySegments";
        case ViolationKind::CircleFixedPointMismatch: return "CircleFixedPointMismatch";
        case ViolationKind::NegativeFixedPointCount: return "NegativeFixedPointCount";
        case ViolationKind::NegativeGenus: return "NegativeGenus";
        case ViolationKind::NegativeB1: return "NegativeB1";
        case ViolationKind::EulerClassGroupMismatch: return "EulerClassGroupMismatch";
    }
    return "UnknownViolation";
}

struct Violation {
    ViolationKind kind;
    std::string where;
    std::string detail;

    std::string to_string() const {
        std::string s = violation_name(kind);
        if (!where.empty()) s += " at " + where;
        if (!detail.empty()) s += ": " + detail;
        return s;
    }
};

inline std::int64_t index_sum(const WeightedOrbitSpace& y) {
    std::int64_t sum = 0;
    for (const auto& a : y.arcs) sum += a.index;
    for (const auto& c : y.circles) sum += c.index;
    for (const auto& p : y.isolated) sum += p.index;
    for (const auto& b : y.boundaries) sum += b.index;
    return sum;
}

namespace detail {
inline void check_weights(const std::vector<Weight>& segments, const std::string& where,
                          std::vector<Violation>& out) {
    if (segments.empty()) {
        out.push_back({ViolationKind::EmptySegments, where, "component carries no weights"});
        return;
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const Weight& w = segments[i];
        std::string at = where + " weight " + std::to_string(i);
        std::string pair = "(" + std::to_string(w.alpha) + "," + std::to_string(w.beta) + ")";
        if (w.alpha < 1) {
            out.push_back({ViolationKind::WeightAlphaNotPositive, at, pair});
            continue;
        }
        if (!weight_is_coprime(w)) out.push_back({ViolationKind::WeightNotCoprime, at, pair});
        if (!weight_is_normalized(w)) out.push_back({ViolationKind::WeightNotNormalized, at, pair});
    }
}
}  // namespace detail

/// Legality check.  An empty result means: the indices sum to zero, every
/// weight is coprime and normalized, circles are shaped consistently with
/// their fixed-point counts, and counts/genera are in range.
inline std::vector<Violation> validate(const WeightedOrbitSpace& y) {
    std::vector<Violation> out;

    if (y.b1 < 0) out.push_back({ViolationKind::NegativeB1, "header", std::to_string(y.b1)});

    for (std::size_t i = 0; i < y.arcs.size(); ++i)
        detail::check_weights(y.arcs[i].segments, "arc " + std::to_string(i), out);

    for (std::size_t i = 0; i < y.circles.size(); ++i) {
        const auto& c = y.circles[i];
        std::string where = "circle " + std::to_string(i);
        detail::check_weights(c.segments, where, out);
        if (c.fixed_point_count < 0) {
            out.push_back({ViolationKind::NegativeFixedPointCount, where,
                           std::to_string(c.fixed_point_count)});
            continue;
        }
        if (c.fixed_point_count == 0) {
            if (c.segments.size() != 1)
                out.push_back({ViolationKind::CircleFixedPointMismatch, where,
                               "simply weighted circle must carry exactly one weight"});
        } else if (c.fixed_point_count != static_cast<std::int64_t>(c.segments.size())) {
            out.push_back({ViolationKind::CircleFixedPointMismatch, where,
                           "multiply weighted circle needs one segment per fixed point"});
        }
    }

    for (std::size_t i = 0; i < y.boundaries.size(); ++i)
        if (y.boundaries[i].genus < 0)
            out.push_back({ViolationKind::NegativeGenus, "boundary " + std::to_string(i),
                           std::to_string(y.boundaries[i].genus)});

    if (y.euler_class) {
        if (!y.pic_group || !(y.euler_class->group() == *y.pic_group))
            out.push_back({ViolationKind::EulerClassGroupMismatch, "euler_class",
                           "euler class does not live in the presentation's group"});
    }

    std::int64_t sum = index_sum(y);
    if (sum != 0)
        out.push_back({ViolationKind::IndexSumNonzero, "", "indices sum to " + std::to_string(sum)});

    return out;
}

inline bool is_valid(const WeightedOrbitSpace& y) { return validate(y).empty(); }

struct FixedPointSummary {
    std::int64_t isolated_total = 0;          // isolated points, arc fixed points, circle fixed points
    std::vector<std::int64_t> surface_genera; // one entry per fixed surface
};

inline FixedPointSummary fixed_point_summary(const WeightedOrbitSpace& y) {
    FixedPointSummary s;
    s.isolated_total = static_cast<std::int64_t>(y.isolated.size());
    for (const auto& a : y.arcs) s.isolated_total += a.fixed_point_count();
    for (const auto& c : y.circles) s.isolated_total += c.fixed_point_count;
    for (const auto& b : y.boundaries) s.surface_genera.push_back(b.genus);
    return s;
}

inline bool has_fixed_points(const WeightedOrbitSpace& y) {
    FixedPointSummary s = fixed_point_summary(y);
    return s.isolated_total > 0 || !s.surface_genera.empty();
}

/// chi(X) computed as chi of the fixed-point set: one per point-like fixed
/// point plus 2 - 2g per fixed surface.
inline std::int64_t euler_characteristic(const WeightedOrbitSpace& y) {
    FixedPointSummary s = fixed_point_summary(y);
    std::int64_t chi = s.isolated_total;
    for (std::int64_t g : s.surface_genera) chi += 2 - 2 * g;
    return chi;
}

struct BettiData {
    std::int64_t chi = 0;
    std::int64_t b1 = 0;
    std::int64_t b2 = 0;
    std::int64_t b_plus = 0;
    std::int64_t b_minus = 0;

    bool operator==(const BettiData&) const = default;
};

/// Homology summary of the 4-manifold: b1(X) = b1(Y), and b2 follows from
/// chi(X) = 2 - 2*b1 + b2.  The signature split b2 = b+ + b- needs the
/// caller-supplied b+.
inline BettiData betti_data(const WeightedOrbitSpace& y, std::int64_t b_plus) {
    if (b_plus < 0) raise(errc::invalid_input, "b+ must be nonnegative");
    BettiData d;
    d.chi = euler_characteristic(y);
    d.b1 = y.b1;
    d.b2 = d.chi - 2 + 2 * d.b1;
    if (d.b2 < 0)
        raise(errc::inconsistent_betti,
              "chi = " + std::to_string(d.chi) + " and b1 = " + std::to_string(d.b1) +
                  " force negative b2");
    d.b_plus = b_plus;
    d.b_minus = d.b2 - b_plus;
    if (d.b_minus < 0)
        raise(errc::inconsistent_betti, "b2 = " + std::to_string(d.b2) +
                                            " is smaller than the requested b+ = " +
                                            std::to_string(b_plus));
    return d;
}

/// Stable component order plus weight normalization; the serialized form of
/// a canonicalized presentation round-trips byte for byte.
inline WeightedOrbitSpace canonicalize(WeightedOrbitSpace y) {
    auto normalize_all = [](std::vector<Weight>& ws) {
        for (Weight& w : ws)
            if (w.alpha >= 1) w = normalize_weight(w);
    };
    for (auto& a : y.arcs) normalize_all(a.segments);
    for (auto& c : y.circles) normalize_all(c.segments);

    std::sort(y.arcs.begin(), y.arcs.end(), [](const WeightedArc& a, const WeightedArc& b) {
        return std::tie(a.index, a.segments) < std::tie(b.index, b.segments);
    });
    std::sort(y.circles.begin(), y.circles.end(), [](const WeightedCircle& a, const WeightedCircle& b) {
        return std::tie(a.index, a.segments, a.fixed_point_count) <
               std::tie(b.index, b.segments, b.fixed_point_count);
    });
    std::sort(y.isolated.begin(), y.isolated.end(),
              [](const IsolatedFixedPoint& a, const IsolatedFixedPoint& b) { return a.index < b.index; });
    std::sort(y.boundaries.begin(), y.boundaries.end(),
              [](const BoundarySurface& a, const BoundarySurface& b) {
                  return std::tie(a.genus, a.index) < std::tie(b.genus, b.index);
              });
    return y;
}

inline std::string summary(const WeightedOrbitSpace& y) {
    std::ostringstream out;
    out << y.name << ": b1=" << y.b1 << " arcs=" << y.arcs.size() << " circles=" << y.circles.size()
        << " isolated=" << y.isolated.size() << " boundaries=" << y.boundaries.size()
        << " chi=" << euler_characteristic(y);
    return out.str();
}

}  // namespace sworbit
