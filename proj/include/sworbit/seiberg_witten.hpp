#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sworbit/abelian_group.hpp"
#include "sworbit/errors.hpp"
#include "sworbit/orbit_space.hpp"
#include "sworbit/reduce.hpp"

namespace sworbit {

/// Finitely supported integer-valued table over a group modeling the
/// gauge-theoretic invariants of the quotient; absent keys read as 0.
class Sw3Table {
public:
    explicit Sw3Table(FgAbelianGroup group) : group_(std::move(group)) {}

    const FgAbelianGroup& group() const { return group_; }
    const std::vector<std::pair<GroupElement, Int>>& entries() const { return entries_; }

    void set(const GroupElement& key, Int value) {
        if (!(key.group() == group_))
            raise(errc::group_mismatch, "table key lives in " + key.group().to_string() +
                                            ", table is over " + group_.to_string());
        for (auto& [k, v] : entries_) {
            if (k == key) {
                v = std::move(value);
                return;
            }
        }
        if (value != 0) entries_.emplace_back(key, std::move(value));
    }

    Int get(const GroupElement& key) const {
        for (const auto& [k, v] : entries_)
            if (k == key) return v;
        return 0;
    }

private:
    FgAbelianGroup group_;
    std::vector<std::pair<GroupElement, Int>> entries_;
};

enum class SwReason {
    FixedPointAndBPlusGreaterThanOne,
    EssentialSphereAndBPlusGreaterThanOne,
};

inline const char* sw_reason_name(SwReason reason) {
    switch (reason) {
        case SwReason::FixedPointAndBPlusGreaterThanOne:
            return "FixedPointAndBPlusGreaterThanOne";
        case SwReason::EssentialSphereAndBPlusGreaterThanOne:
            return "EssentialSphereAndBPlusGreaterThanOne";
    }
    return "UnknownReason";
}

enum class SwVerdictKind { Vanishes, BPlusOneCase, FixedPointFreeValue, OutOfScope };

inline const char* sw_verdict_kind_name(SwVerdictKind kind) {
    switch (kind) {
        case SwVerdictKind::Vanishes: return "Vanishes";
        case SwVerdictKind::BPlusOneCase: return "BPlusOneCase";
        case SwVerdictKind::FixedPointFreeValue: return "FixedPointFreeValue";
        case SwVerdictKind::OutOfScope: return "OutOfScope";
    }
    return "UnknownVerdict";
}

struct SwVerdict {
    SwVerdictKind kind = SwVerdictKind::OutOfScope;
    std::optional<SwReason> reason;  // set iff kind == Vanishes
    std::optional<Int> value;        // set iff kind == FixedPointFreeValue
    std::string note;
};

/// Vanishing verdict for an action with fixed points.  With b+ > 1 the
/// invariant vanishes for every structure on the total space; b+ = 1 is the
/// wall-crossing regime and gets no claim.
inline SwVerdict sw_vanishing(const WeightedOrbitSpace& y, std::int64_t b_plus) {
    {
        std::vector<Violation> violations = validate(y);
        if (!violations.empty())
            raise(errc::invalid_input,
                  "presentation is not legally weighted: " + violations.front().to_string());
    }
    if (b_plus < 0) raise(errc::invalid_input, "b+ must be nonnegative");

    SwVerdict v;
    if (!has_fixed_points(y)) {
        v.kind = SwVerdictKind::OutOfScope;
        v.note = "fixed-point-free action: evaluate the pullback sum over the quotient's table";
        return v;
    }
    if (b_plus > 1) {
        v.kind = SwVerdictKind::Vanishes;
        v.reason = SwReason::FixedPointAndBPlusGreaterThanOne;
        v.note = "circle action with a fixed point and b+ > 1: the invariant vanishes for all "
                 "Spin^c structures";
        return v;
    }
    if (b_plus == 1) {
        v.kind = SwVerdictKind::BPlusOneCase;
        v.note = "b+ = 1: wall crossing makes the invariant chamber-dependent; no vanishing claim";
        return v;
    }
    v.kind = SwVerdictKind::OutOfScope;
    v.note = "hypothesis b+ > 0 unmet; no vanishing claim";
    return v;
}

/// Same vanishing conclusion reached through an essential sphere of
/// nonnegative square instead of a fixed point.
inline SwVerdict sw_vanishing_from_sphere(const SphereCertificate& cert, std::int64_t b_plus) {
    if (cert.self_intersection < 0)
        raise(errc::invalid_input, "certificate square must be nonnegative");
    if (b_plus < 0) raise(errc::invalid_input, "b+ must be nonnegative");

    SwVerdict v;
    if (b_plus > 1) {
        v.kind = SwVerdictKind::Vanishes;
        v.reason = SwReason::EssentialSphereAndBPlusGreaterThanOne;
        v.note = "essential sphere of square " + std::to_string(cert.self_intersection) +
                 " and b+ > 1: the invariant vanishes for all Spin^c structures";
        return v;
    }
    if (b_plus == 1) {
        v.kind = SwVerdictKind::BPlusOneCase;
        v.note = "b+ = 1: wall crossing makes the invariant chamber-dependent; no vanishing claim";
        return v;
    }
    v.kind = SwVerdictKind::OutOfScope;
    v.note = "hypothesis b+ > 0 unmet; no vanishing claim";
    return v;
}

/// Fixed-point-free formula: the invariant upstairs at a pulled-back
/// structure is the sum of the table over the coset xi0 + <chi>.
inline Int sw_pullback_sum(const FgAbelianGroup& group, const GroupElement& chi,
                           const GroupElement& xi0, const Sw3Table& table) {
    if (!(chi.group() == group))
        raise(errc::group_mismatch, "chi lives in " + chi.group().to_string() + ", expected " +
                                        group.to_string());
    if (!(xi0.group() == group))
        raise(errc::group_mismatch, "xi0 lives in " + xi0.group().to_string() + ", expected " +
                                        group.to_string());
    if (!(table.group() == group))
        raise(errc::group_mismatch, "table is over " + table.group().to_string() + ", expected " +
                                        group.to_string());

    Int sum = 0;
    for (const auto& [key, value] : table.entries())
        if (cyclic_membership(chi, key - xi0)) sum += value;
    return sum;
}

enum class SymplecticKind { Contradiction, RationalOrRuled, NoClaim };

inline const char* symplectic_kind_name(SymplecticKind kind) {
    switch (kind) {
        case SymplecticKind::Contradiction: return "Contradiction";
        case SymplecticKind::RationalOrRuled: return "RationalOrRuled";
        case SymplecticKind::NoClaim: return "NoClaim";
    }
    return "UnknownConclusion";
}

struct SymplecticConclusion {
    SymplecticKind kind = SymplecticKind::NoClaim;
    std::vector<std::string> candidates;
    std::string note;
};

/// Symplectic consequences: a symplectic manifold has nonvanishing invariant
/// at its canonical structure, so a fixed point forces b+ = 1, and the b+ = 1
/// survivors are the rational or ruled surfaces.
inline SymplecticConclusion symplectic_verdict(const WeightedOrbitSpace& y, std::int64_t b_plus,
                                               bool symplectic) {
    {
        std::vector<Violation> violations = validate(y);
        if (!violations.empty())
            raise(errc::invalid_input,
                  "presentation is not legally weighted: " + violations.front().to_string());
    }
    if (b_plus < 0) raise(errc::invalid_input, "b+ must be nonnegative");

    SymplecticConclusion out;
    if (!symplectic) {
        out.kind = SymplecticKind::NoClaim;
        out.note = "no symplectic hypothesis; nothing to conclude";
        return out;
    }
    if (!has_fixed_points(y)) {
        out.kind = SymplecticKind::NoClaim;
        out.note = "fixed-point-free action: the fixed-point argument does not apply";
        return out;
    }
    if (b_plus > 1) {
        out.kind = SymplecticKind::Contradiction;
        out.note = "a symplectic manifold has a structure with invariant +-1, but a circle action "
                   "with a fixed point and b+ > 1 forces the invariant to vanish; no such "
                   "manifold exists";
        return out;
    }
    if (b_plus == 0) {
        out.kind = SymplecticKind::Contradiction;
        out.note = "a symplectic form wedges with itself to a volume form, forcing b+ >= 1";
        return out;
    }
    out.kind = SymplecticKind::RationalOrRuled;
    out.candidates = {"CP^2", "S^2-bundle over a surface",
                      "~CP^2 blowups of CP^2 or of an S^2-bundle over a surface"};
    out.note = "b+ = 1 as required; the manifold is rational or ruled and also admits a "
               "symplectic circle action";
    return out;
}

}  // namespace sworbit
