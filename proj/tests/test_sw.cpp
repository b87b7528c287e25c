#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "sworbit/seiberg_witten.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace sworbit;

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

WeightedOrbitSpace two_points() {
    WeightedOrbitSpace y;
    y.b1 = 1;
    y.isolated = {{+1}, {-1}};
    return y;
}

WeightedOrbitSpace free_circle() {
    WeightedOrbitSpace y;
    y.circles.push_back({{{3, 1}}, 0, 0});
    return y;
}

FgAbelianGroup z4() { return FgAbelianGroup(0, {4}); }

Sw3Table z4_table() {
    FgAbelianGroup g = z4();
    Sw3Table table(g);
    table.set(g.element({}, {0}), 5);
    table.set(g.element({}, {1}), 7);
    table.set(g.element({}, {2}), -2);
    table.set(g.element({}, {3}), 4);
    return table;
}

}  // namespace

TEST_CASE("table storage") {
    FgAbelianGroup g = z4();
    Sw3Table table(g);
    GroupElement one = g.element({}, {1});

    REQUIRE(table.get(one) == 0);
    table.set(one, 7);
    REQUIRE(table.get(one) == 7);
    table.set(one, -3);
    REQUIRE(table.get(one) == -3);
    REQUIRE(table.entries().size() == 1);

    // zero values are the default and need no storage
    table.set(g.element({}, {2}), 0);
    REQUIRE(table.entries().size() == 1);

    FgAbelianGroup other(0, {2});
    REQUIRE(code_of([&] { table.set(other.element({}, {1}), 1); }) == errc::group_mismatch);
}

TEST_CASE("vanishing verdict branches") {
    WeightedOrbitSpace y = two_points();

    SECTION("fixed point and b+ > 1") {
        SwVerdict v = sw_vanishing(y, 2);
        REQUIRE(v.kind == SwVerdictKind::Vanishes);
        REQUIRE(v.reason == SwReason::FixedPointAndBPlusGreaterThanOne);
    }
    SECTION("b+ = 1 gives no claim") {
        SwVerdict v = sw_vanishing(y, 1);
        REQUIRE(v.kind == SwVerdictKind::BPlusOneCase);
        REQUIRE_FALSE(v.reason.has_value());
    }
    SECTION("b+ = 0 is out of scope") {
        REQUIRE(sw_vanishing(y, 0).kind == SwVerdictKind::OutOfScope);
    }
    SECTION("fixed-point-free actions are routed to the value formula") {
        REQUIRE(sw_vanishing(free_circle(), 5).kind == SwVerdictKind::OutOfScope);
    }
    SECTION("bad inputs") {
        WeightedOrbitSpace bad;
        bad.isolated = {{+2}};
        REQUIRE(code_of([&] { sw_vanishing(bad, 2); }) == errc::invalid_input);
        REQUIRE(code_of([&] { sw_vanishing(y, -1); }) == errc::invalid_input);
    }
}

TEST_CASE("property: no vanishing claim without both hypotheses") {
    std::mt19937 rng(6101);
    for (int i = 0; i < 200; ++i) {
        WeightedOrbitSpace y = gen::any_valid(rng);
        std::int64_t b_plus = gen::pick(rng, 0, 3);
        SwVerdict v = sw_vanishing(y, b_plus);
        if (v.kind == SwVerdictKind::Vanishes) {
            REQUIRE(has_fixed_points(y));
            REQUIRE(b_plus > 1);
        }
        if (!has_fixed_points(y) || b_plus <= 1)
            REQUIRE(v.kind != SwVerdictKind::Vanishes);
    }
}

TEST_CASE("vanishing from a sphere certificate") {
    SphereCertificate cert;
    cert.kind = SphereKind::ArcBetweenTwoFixedPoints;
    cert.self_intersection = 0;

    SwVerdict v = sw_vanishing_from_sphere(cert, 2);
    REQUIRE(v.kind == SwVerdictKind::Vanishes);
    REQUIRE(v.reason == SwReason::EssentialSphereAndBPlusGreaterThanOne);

    REQUIRE(sw_vanishing_from_sphere(cert, 1).kind == SwVerdictKind::BPlusOneCase);
    REQUIRE(sw_vanishing_from_sphere(cert, 0).kind == SwVerdictKind::OutOfScope);

    cert.self_intersection = 1;
    REQUIRE(sw_vanishing_from_sphere(cert, 3).kind == SwVerdictKind::Vanishes);

    cert.self_intersection = -1;
    REQUIRE(code_of([&] { sw_vanishing_from_sphere(cert, 2); }) == errc::invalid_input);
}

TEST_CASE("pullback sum over a cyclic quotient") {
    FgAbelianGroup g = z4();
    Sw3Table table = z4_table();

    SECTION("order-two subgroup coset") {
        // <chi> = {0, 2}, so xi0 = 1 reaches {1, 3} and collects 7 + 4
        GroupElement chi = g.element({}, {2});
        GroupElement xi0 = g.element({}, {1});
        REQUIRE(sw_pullback_sum(g, chi, xi0, table) == 11);
    }
    SECTION("trivial chi sees only xi0 itself") {
        GroupElement chi = g.identity();
        REQUIRE(sw_pullback_sum(g, chi, g.element({}, {1}), table) == 7);
        REQUIRE(sw_pullback_sum(g, chi, g.element({}, {2}), table) == -2);
    }
    SECTION("generating chi sums the whole table") {
        GroupElement chi = g.element({}, {1});
        REQUIRE(sw_pullback_sum(g, chi, g.identity(), table) == 5 + 7 - 2 + 4);
    }
}

TEST_CASE("pullback sum over an infinite quotient group") {
    FgAbelianGroup g(1, {});
    Sw3Table table(g);
    table.set(g.element({-3}, {}), 5);
    table.set(g.element({0}, {}), 7);
    table.set(g.element({2}, {}), -2);
    table.set(g.element({7}, {}), 4);

    SECTION("a generator reaches every key") {
        REQUIRE(sw_pullback_sum(g, g.element({1}, {}), g.identity(), table) == 14);
    }
    SECTION("an even step only reaches the even keys") {
        GroupElement chi = g.element({2}, {});
        REQUIRE(sw_pullback_sum(g, chi, g.identity(), table) == 5);  // keys 0 and 2
        REQUIRE(sw_pullback_sum(g, chi, g.element({1}, {}), table) == 9);  // keys -3 and 7
    }
}

TEST_CASE("pullback sum respects the coset structure of a mixed group") {
    FgAbelianGroup g(0, {2, 4});
    Sw3Table table(g);
    table.set(g.element({}, {0, 0}), 1);
    table.set(g.element({}, {1, 0}), 2);
    table.set(g.element({}, {0, 2}), 4);
    table.set(g.element({}, {1, 2}), 8);

    GroupElement chi = g.element({}, {1, 0});
    // <chi> = {(0,0), (1,0)}; the xi0 = (0,2) coset picks up (0,2) and (1,2)
    REQUIRE(sw_pullback_sum(g, chi, g.element({}, {0, 2}), table) == 12);
    REQUIRE(sw_pullback_sum(g, chi, g.identity(), table) == 3);
}

TEST_CASE("pullback sum rejects mixed-group arguments") {
    FgAbelianGroup g = z4();
    FgAbelianGroup h(0, {2});
    Sw3Table table(g);
    REQUIRE(code_of([&] {
                sw_pullback_sum(g, h.element({}, {1}), g.identity(), table);
            }) == errc::group_mismatch);
    REQUIRE(code_of([&] {
                sw_pullback_sum(g, g.identity(), h.element({}, {1}), table);
            }) == errc::group_mismatch);
    Sw3Table wrong(h);
    REQUIRE(code_of([&] { sw_pullback_sum(g, g.identity(), g.identity(), wrong); }) ==
            errc::group_mismatch);
}

TEST_CASE("property: pullback sum is translation invariant") {
    std::mt19937 rng(6102);
    for (int i = 0; i < 120; ++i) {
        FgAbelianGroup g = gen::group(rng);
        Sw3Table table = gen::table(rng, g, 12);
        GroupElement chi = gen::element(rng, g);
        GroupElement xi0 = gen::element(rng, g);
        GroupElement shift = gen::element(rng, g);

        Sw3Table shifted(g);
        for (const auto& [key, value] : table.entries()) shifted.set(key + shift, value);

        REQUIRE(sw_pullback_sum(g, chi, xi0, table) ==
                sw_pullback_sum(g, chi, xi0 + shift, shifted));
    }
}

TEST_CASE("property: pullback sum matches the enumeration oracle") {
    std::mt19937 rng(6103);
    for (int i = 0; i < 150; ++i) {
        FgAbelianGroup g = gen::group(rng);
        Sw3Table table = gen::table(rng, g, 15);
        GroupElement chi = gen::element(rng, g);
        GroupElement xi0 = gen::element(rng, g);
        REQUIRE(sw_pullback_sum(g, chi, xi0, table) == oracles::coset_sum(g, chi, xi0, table));
    }
}

TEST_CASE("symplectic conclusions") {
    WeightedOrbitSpace y = two_points();

    SECTION("no hypothesis, no claim") {
        REQUIRE(symplectic_verdict(y, 2, false).kind == SymplecticKind::NoClaim);
    }
    SECTION("fixed point against b+ > 1 is impossible") {
        SymplecticConclusion c = symplectic_verdict(y, 2, true);
        REQUIRE(c.kind == SymplecticKind::Contradiction);
        REQUIRE(c.candidates.empty());
    }
    SECTION("b+ = 0 contradicts the volume form") {
        REQUIRE(symplectic_verdict(y, 0, true).kind == SymplecticKind::Contradiction);
    }
    SECTION("b+ = 1 narrows to the rational or ruled list") {
        SymplecticConclusion c = symplectic_verdict(y, 1, true);
        REQUIRE(c.kind == SymplecticKind::RationalOrRuled);
        REQUIRE(c.candidates.size() == 3);
        REQUIRE(c.candidates[0] == "CP^2");
    }
    SECTION("fixed-point-free actions carry no claim") {
        REQUIRE(symplectic_verdict(free_circle(), 2, true).kind == SymplecticKind::NoClaim);
    }
    SECTION("bad inputs") {
        WeightedOrbitSpace bad;
        bad.isolated = {{+2}};
        REQUIRE(code_of([&] { symplectic_verdict(bad, 2, true); }) == errc::invalid_input);
    }
}
