#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "sworbit/abelian_group.hpp"

#include "support/generators.hpp"

using sworbit::FgAbelianGroup;
using sworbit::GroupElement;
using sworbit::Int;
using sworbit::IntMatrix;
using sworbit::cyclic_membership;
using sworbit::element_scale;
using sworbit::engine_error;
using sworbit::errc;
using sworbit::group_from_relations;

namespace {

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const engine_error& e) {
        return e.code();
    }
    FAIL("expected an engine_error");
    return errc::invalid_input;
}

}  // namespace

TEST_CASE("canonical form is enforced") {
    REQUIRE_NOTHROW(FgAbelianGroup(2, {Int(2), Int(4)}));
    REQUIRE_NOTHROW(FgAbelianGroup(0, {}));
    REQUIRE(code_of([] { FgAbelianGroup(0, {Int(1)}); }) == errc::invalid_input);
    REQUIRE(code_of([] { FgAbelianGroup(0, {Int(4), Int(2)}); }) == errc::invalid_input);
    REQUIRE(code_of([] { FgAbelianGroup(0, {Int(2), Int(3)}); }) == errc::invalid_input);
    REQUIRE(code_of([] { FgAbelianGroup(0, {Int(0)}); }) == errc::invalid_input);
}

TEST_CASE("cokernel presentations") {
    SECTION("no relations gives a free group") {
        FgAbelianGroup g = group_from_relations(2, IntMatrix(0, 0));
        REQUIRE(g.free_rank() == 2);
        REQUIRE(g.invariant_factors().empty());
    }
    SECTION("diagonal relations fold into invariant factors") {
        FgAbelianGroup g = group_from_relations(2, IntMatrix::from_rows({{2, 0}, {0, 3}}));
        REQUIRE(g.free_rank() == 0);
        REQUIRE(g.invariant_factors() == std::vector<Int>{6});
    }
    SECTION("single cyclic factor") {
        FgAbelianGroup g = group_from_relations(1, IntMatrix::from_rows({{4}}));
        REQUIRE(g.free_rank() == 0);
        REQUIRE(g.invariant_factors() == std::vector<Int>{4});
    }
    SECTION("unit relations vanish") {
        FgAbelianGroup g = group_from_relations(3, IntMatrix::from_rows({{1, 0, 0}, {0, 2, 4}}));
        REQUIRE(g.free_rank() == 1);
        REQUIRE(g.invariant_factors() == std::vector<Int>{2});
    }
    SECTION("ragged relation rows are rejected") {
        REQUIRE(code_of([] { group_from_relations(3, IntMatrix(2, 2)); }) ==
                errc::dimension_mismatch);
    }
}

TEST_CASE("element arithmetic reduces torsion coordinates") {
    FgAbelianGroup g(1, {Int(4)});
    GroupElement a = g.element({Int(2)}, {Int(3)});
    GroupElement b = g.element({Int(-1)}, {Int(2)});

    GroupElement sum = a + b;
    REQUIRE(sum.free_coords() == std::vector<Int>{1});
    REQUIRE(sum.torsion_coords() == std::vector<Int>{1});

    GroupElement neg = -a;
    REQUIRE(neg.free_coords() == std::vector<Int>{-2});
    REQUIRE(neg.torsion_coords() == std::vector<Int>{1});
    REQUIRE(a + neg == g.identity());

    REQUIRE(element_scale(a, Int(3)).torsion_coords() == std::vector<Int>{1});
    REQUIRE(Int(3) * a == element_scale(a, Int(3)));
    REQUIRE(a - b == a + (-b));

    REQUIRE(g.element({Int(0)}, {Int(-1)}).torsion_coords() == std::vector<Int>{3});
}

TEST_CASE("cross-group operations are rejected") {
    FgAbelianGroup g(1, {});
    FgAbelianGroup h(0, {Int(2)});
    GroupElement a = g.element({Int(1)}, {});
    GroupElement b = h.element({}, {Int(1)});
    REQUIRE(code_of([&] { (void)(a + b); }) == errc::parent_mismatch);
    REQUIRE(code_of([&] { (void)cyclic_membership(a, b); }) == errc::parent_mismatch);
    REQUIRE(code_of([&] { g.element({}, {}); }) == errc::dimension_mismatch);
}

TEST_CASE("element orders") {
    FgAbelianGroup g(0, {Int(6)});
    REQUIRE(g.element({}, {Int(2)}).order() == Int(3));
    REQUIRE(g.element({}, {Int(1)}).order() == Int(6));
    REQUIRE(g.identity().order() == Int(1));

    FgAbelianGroup free(1, {Int(2)});
    REQUIRE_FALSE(free.element({Int(1)}, {Int(0)}).order().has_value());
    REQUIRE(free.element({Int(0)}, {Int(1)}).order() == Int(2));
}

TEST_CASE("cyclic membership witnesses") {
    SECTION("torsion example") {
        FgAbelianGroup g(0, {Int(6)});
        GroupElement x = g.element({}, {Int(2)});
        auto k = cyclic_membership(x, g.element({}, {Int(4)}));
        REQUIRE(k == Int(2));
        REQUIRE_FALSE(cyclic_membership(x, g.element({}, {Int(3)})).has_value());
    }
    SECTION("free example") {
        FgAbelianGroup g(1, {});
        GroupElement x = g.element({Int(2)}, {});
        REQUIRE(cyclic_membership(x, g.element({Int(-6)}, {})) == Int(-3));
        REQUIRE_FALSE(cyclic_membership(x, g.element({Int(3)}, {})).has_value());
    }
    SECTION("mixed coordinates pin the witness") {
        FgAbelianGroup g(1, {Int(4)});
        GroupElement x = g.element({Int(1)}, {Int(1)});
        REQUIRE(cyclic_membership(x, g.element({Int(3)}, {Int(3)})) == Int(3));
        REQUIRE_FALSE(cyclic_membership(x, g.element({Int(3)}, {Int(2)})).has_value());
    }
    SECTION("identity generator") {
        FgAbelianGroup g(1, {});
        GroupElement zero = g.identity();
        REQUIRE(cyclic_membership(zero, zero) == Int(0));
        REQUIRE_FALSE(cyclic_membership(zero, g.element({Int(1)}, {})).has_value());
    }
    SECTION("property: k*x is always a member") {
        std::mt19937 rng(42);
        for (int i = 0; i < 300; ++i) {
            FgAbelianGroup g = gen::group(rng, 3);
            GroupElement x = gen::element(rng, g);
            Int k = gen::pick(rng, -20, 20);
            GroupElement y = element_scale(x, k);
            auto witness = cyclic_membership(x, y);
            REQUIRE(witness.has_value());
            REQUIRE(element_scale(x, *witness) == y);
        }
    }
    SECTION("property: non-members never get witnesses") {
        std::mt19937 rng(43);
        int rejected = 0;
        for (int i = 0; i < 300; ++i) {
            FgAbelianGroup g = gen::group(rng, 2);
            GroupElement x = gen::element(rng, g);
            GroupElement y = gen::element(rng, g);
            auto witness = cyclic_membership(x, y);
            if (witness)
                REQUIRE(element_scale(x, *witness) == y);
            else
                ++rejected;
        }
        REQUIRE(rejected > 0);
    }
}
