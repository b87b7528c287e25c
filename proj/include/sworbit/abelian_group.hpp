#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sworbit/errors.hpp"
#include "sworbit/int_matrix.hpp"
#include "sworbit/integers.hpp"
#include "sworbit/smith.hpp"

namespace sworbit {

class GroupElement;

/// Finitely generated abelian group in canonical form:
/// Z^free_rank + Z/m_1 + ... + Z/m_k with 2 <= m_1 | m_2 | ... | m_k.
/// The canonical form is unique, so equality of groups is structural.
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;  // trivial group

    FgAbelianGroup(std::size_t free_rank, std::vector<Int> invariant_factors)
        : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i] < 2)
                raise(errc::invalid_input, "invariant factor below 2: " + factors_[i].str());
            if (i > 0 && factors_[i] % factors_[i - 1] != 0)
                raise(errc::invalid_input, "invariant factors do not form a divisor chain");
        }
    }

    std::size_t free_rank() const noexcept { return free_rank_; }
    const std::vector<Int>& invariant_factors() const noexcept { return factors_; }
    std::size_t torsion_rank() const noexcept { return factors_.size(); }
    bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }

    bool operator==(const FgAbelianGroup& other) const = default;

    GroupElement element(std::vector<Int> free_coords, std::vector<Int> torsion_coords) const;
    GroupElement identity() const;

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::ostringstream out;
        bool first = true;
        if (free_rank_ > 0) {
            out << "Z";
            if (free_rank_ > 1) out << "^" << free_rank_;
            first = false;
        }
        for (const Int& m : factors_) {
            if (!first) out << " + ";
            out << "Z/" << m;
            first = false;
        }
        return out.str();
    }

private:
    std::size_t free_rank_ = 0;
    std::vector<Int> factors_;
};

/// Element of an FgAbelianGroup.  Torsion coordinates are stored reduced into
/// [0, m_i), so equality of reduced coordinate vectors decides equality.
/// Elements carry their group by value; groups are tiny at this scale.
class GroupElement {
public:
    const FgAbelianGroup& group() const noexcept { return group_; }
    const std::vector<Int>& free_coords() const noexcept { return free_; }
    const std::vector<Int>& torsion_coords() const noexcept { return torsion_; }

    bool is_identity() const {
        for (const Int& c : free_)
            if (c != 0) return false;
        for (const Int& c : torsion_)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const GroupElement& other) const = default;

    /// Order of the cyclic subgroup generated by this element;
    /// nullopt when the free part is nonzero (infinite order).
    std::optional<Int> order() const {
        for (const Int& c : free_)
            if (c != 0) return std::nullopt;
        Int n = 1;
        const auto& factors = group_.invariant_factors();
        for (std::size_t i = 0; i < torsion_.size(); ++i)
            n = lcm_int(n, factors[i] / gcd_int(factors[i], torsion_[i]));
        return n;
    }

    std::string to_string() const {
        std::ostringstream out;
        out << "(";
        bool first = true;
        for (const Int& c : free_) {
            if (!first) out << ",";
            out << c;
            first = false;
        }
        for (const Int& c : torsion_) {
            if (!first) out << ",";
            out << c;
            first = false;
        }
        out << ")";
        return out.str();
    }

private:
    friend class FgAbelianGroup;
    friend GroupElement element_add(const GroupElement&, const GroupElement&);
    friend GroupElement element_negate(const GroupElement&);
    friend GroupElement element_scale(const GroupElement&, const Int&);

    GroupElement(FgAbelianGroup group, std::vector<Int> free_coords, std::vector<Int> torsion_coords)
        : group_(std::move(group)), free_(std::move(free_coords)), torsion_(std::move(torsion_coords)) {
        const auto& factors = group_.invariant_factors();
        for (std::size_t i = 0; i < torsion_.size(); ++i) torsion_[i] = mod_floor(torsion_[i], factors[i]);
    }

    FgAbelianGroup group_;
    std::vector<Int> free_;
    std::vector<Int> torsion_;
};

inline GroupElement FgAbelianGroup::element(std::vector<Int> free_coords,
                                            std::vector<Int> torsion_coords) const {
    if (free_coords.size() != free_rank_ || torsion_coords.size() != factors_.size())
        raise(errc::dimension_mismatch, "coordinate count does not match the group's rank");
    return GroupElement(*this, std::move(free_coords), std::move(torsion_coords));
}

inline GroupElement FgAbelianGroup::identity() const {
    return GroupElement(*this, std::vector<Int>(free_rank_, Int(0)),
                        std::vector<Int>(factors_.size(), Int(0)));
}

namespace detail {
inline void require_same_group(const GroupElement& a, const GroupElement& b) {
    if (!(a.group() == b.group()))
        raise(errc::parent_mismatch, "elements of " + a.group().to_string() + " and " +
                                         b.group().to_string() + " cannot be combined");
}
}  // namespace detail

inline GroupElement element_add(const GroupElement& a, const GroupElement& b) {
    detail::require_same_group(a, b);
    std::vector<Int> free = a.free_;
    std::vector<Int> torsion = a.torsion_;
    for (std::size_t i = 0; i < free.size(); ++i) free[i] += b.free_[i];
    for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] += b.torsion_[i];
    return GroupElement(a.group_, std::move(free), std::move(torsion));
}

inline GroupElement element_negate(const GroupElement& a) {
    std::vector<Int> free = a.free_;
    std::vector<Int> torsion = a.torsion_;
    for (Int& c : free) c = -c;
    for (Int& c : torsion) c = -c;
    return GroupElement(a.group_, std::move(free), std::move(torsion));
}

inline GroupElement element_scale(const GroupElement& a, const Int& k) {
    std::vector<Int> free = a.free_;
    std::vector<Int> torsion = a.torsion_;
    for (Int& c : free) c *= k;
    for (Int& c : torsion) c *= k;
    return GroupElement(a.group_, std::move(free), std::move(torsion));
}

inline GroupElement operator+(const GroupElement& a, const GroupElement& b) { return element_add(a, b); }
inline GroupElement operator-(const GroupElement& a) { return element_negate(a); }
inline GroupElement operator-(const GroupElement& a, const GroupElement& b) { return element_add(a, element_negate(b)); }
inline GroupElement operator*(const Int& k, const GroupElement& a) { return element_scale(a, k); }

/// Cokernel Z^generators / row-space(relations), in canonical form.
/// Invariant factors are the Smith divisors above 1; the free rank is the
/// generator count minus the relation rank.
inline FgAbelianGroup group_from_relations(std::size_t generators, const IntMatrix& relations) {
    if (relations.cols() != generators && !(relations.rows() == 0 && relations.cols() == 0))
        raise(errc::dimension_mismatch, "relation rows must have one entry per generator");
    SmithDecomposition snf = smith_normal_form(relations);
    std::vector<Int> factors;
    std::size_t rank = 0;
    for (const Int& d : snf.d) {
        if (d == 0) continue;
        ++rank;
        if (d > 1) factors.push_back(d);
    }
    return FgAbelianGroup(generators - rank, std::move(factors));
}

/// Decides y ∈ <x> and returns a witness k with k*x = y when one exists.
/// A nonzero free coordinate of x pins k; pure-torsion x is searched over
/// its cyclic order, which stays small at this scale.
inline std::optional<Int> cyclic_membership(const GroupElement& x, const GroupElement& y) {
    detail::require_same_group(x, y);

    const auto& xf = x.free_coords();
    const auto& yf = y.free_coords();
    for (std::size_t i = 0; i < xf.size(); ++i) {
        if (xf[i] == 0) continue;
        if (yf[i] % xf[i] != 0) return std::nullopt;
        Int k = yf[i] / xf[i];
        if (element_scale(x, k) == y) return k;
        return std::nullopt;
    }

    // x is pure torsion; y must be too.
    for (const Int& c : yf)
        if (c != 0) return std::nullopt;
    Int n = x.order().value();
    GroupElement acc = x.group().identity();
    for (Int k = 0; k < n; ++k) {
        if (acc == y) return k;
        acc = element_add(acc, x);
    }
    return std::nullopt;
}

}  // namespace sworbit
