#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sworbit/orbit_space.hpp"

#include "support/generators.hpp"

using namespace sworbit;

namespace {

bool has_violation(const std::vector<Violation>& vs, ViolationKind kind) {
    for (const auto& v : vs)
        if (v.kind == kind) return true;
    return false;
}

}  // namespace

TEST_CASE("weight normalization") {
    REQUIRE(normalize_weight({5, 7}) == Weight{5, 2});
    REQUIRE(normalize_weight({5, -3}) == Weight{5, 2});
    REQUIRE(normalize_weight({1, 12}) == Weight{1, 0});
    REQUIRE_THROWS_AS(normalize_weight({0, 1}), engine_error);
    REQUIRE(weight_is_coprime({12, 5}));
    REQUIRE_FALSE(weight_is_coprime({4, 2}));
    REQUIRE(weight_is_normalized({5, 2}));
    REQUIRE_FALSE(weight_is_normalized({5, 5}));
}

TEST_CASE("validate accepts the balanced two-point quotient") {
    WeightedOrbitSpace y;
    y.isolated = {{+1}, {-1}};
    REQUIRE(validate(y).empty());
    REQUIRE(is_valid(y));
}

TEST_CASE("validate flags the documented violations") {
    SECTION("nonzero index sum") {
        WeightedOrbitSpace y;
        y.isolated = {{+1}};
        auto vs = validate(y);
        REQUIRE(has_violation(vs, ViolationKind::IndexSumNonzero));
    }
    SECTION("non-coprime weight") {
        WeightedOrbitSpace y;
        y.arcs.push_back({{{4, 2}}, 0});
        REQUIRE(has_violation(validate(y), ViolationKind::WeightNotCoprime));
    }
    SECTION("unnormalized weight") {
        WeightedOrbitSpace y;
        y.arcs.push_back({{{5, 7}}, 0});
        REQUIRE(has_violation(validate(y), ViolationKind::WeightNotNormalized));
    }
    SECTION("alpha below one") {
        WeightedOrbitSpace y;
        y.arcs.push_back({{{0, 1}}, 0});
        REQUIRE(has_violation(validate(y), ViolationKind::WeightAlphaNotPositive));
    }
    SECTION("simply weighted circle with two segments") {
        WeightedOrbitSpace y;
        y.circles.push_back({{{2, 1}, {3, 1}}, 0, 0});
        REQUIRE(has_violation(validate(y), ViolationKind::CircleFixedPointMismatch));
    }
    SECTION("multiply weighted circle with wrong segment count") {
        WeightedOrbitSpace y;
        y.circles.push_back({{{2, 1}, {3, 1}}, 3, 0});
        REQUIRE(has_violation(validate(y), ViolationKind::CircleFixedPointMismatch));
    }
    SECTION("empty segment list") {
        WeightedOrbitSpace y;
        y.arcs.push_back({{}, 0});
        REQUIRE(has_violation(validate(y), ViolationKind::EmptySegments));
    }
    SECTION("negative genus") {
        WeightedOrbitSpace y;
        y.boundaries.push_back({-1, 0});
        REQUIRE(has_violation(validate(y), ViolationKind::NegativeGenus));
    }
    SECTION("negative b1") {
        WeightedOrbitSpace y;
        y.b1 = -1;
        REQUIRE(has_violation(validate(y), ViolationKind::NegativeB1));
    }
    SECTION("euler class from a foreign group") {
        WeightedOrbitSpace y;
        FgAbelianGroup right(0, {Int(4)});
        FgAbelianGroup wrong(0, {Int(2)});
        y.pic_group = right;
        y.euler_class = wrong.element({}, {Int(1)});
        REQUIRE(has_violation(validate(y), ViolationKind::EulerClassGroupMismatch));
        y.euler_class = right.element({}, {Int(2)});
        REQUIRE(validate(y).empty());
    }
}

TEST_CASE("fixed point bookkeeping") {
    SECTION("two isolated points") {
        WeightedOrbitSpace y;
        y.isolated = {{+1}, {-1}};
        auto s = fixed_point_summary(y);
        REQUIRE(s.isolated_total == 2);
        REQUIRE(s.surface_genera.empty());
    }
    SECTION("an arc with three segments has four fixed points") {
        WeightedOrbitSpace y;
        y.arcs.push_back({{{2, 1}, {3, 1}, {5, 2}}, 0});
        auto s = fixed_point_summary(y);
        REQUIRE(s.isolated_total == 4);
    }
    SECTION("a genus-two boundary is a surface, not points") {
        WeightedOrbitSpace y;
        y.boundaries.push_back({2, 0});
        auto s = fixed_point_summary(y);
        REQUIRE(s.isolated_total == 0);
        REQUIRE(s.surface_genera == std::vector<std::int64_t>{2});
        REQUIRE(has_fixed_points(y));
    }
    SECTION("simply weighted circles contribute nothing") {
        WeightedOrbitSpace y;
        y.circles.push_back({{{3, 1}}, 0, 0});
        REQUIRE_FALSE(has_fixed_points(y));
    }
}

TEST_CASE("euler characteristic equals that of the fixed point set") {
    WeightedOrbitSpace s4;
    s4.isolated = {{+1}, {-1}};
    REQUIRE(euler_characteristic(s4) == 2);

    WeightedOrbitSpace empty;
    REQUIRE(euler_characteristic(empty) == 0);

    WeightedOrbitSpace mixed;
    mixed.isolated = {{+1}, {+1}, {-2}};
    mixed.boundaries.push_back({3, 0});
    REQUIRE(euler_characteristic(mixed) == 3 + 2 - 2 * 3);
}

TEST_CASE("euler characteristic is additive over disjoint unions") {
    std::mt19937 rng(321);
    for (int i = 0; i < 100; ++i) {
        WeightedOrbitSpace a = gen::any_valid(rng);
        WeightedOrbitSpace b = gen::any_valid(rng);
        WeightedOrbitSpace both = a;
        both.arcs.insert(both.arcs.end(), b.arcs.begin(), b.arcs.end());
        both.circles.insert(both.circles.end(), b.circles.begin(), b.circles.end());
        both.isolated.insert(both.isolated.end(), b.isolated.begin(), b.isolated.end());
        both.boundaries.insert(both.boundaries.end(), b.boundaries.begin(), b.boundaries.end());
        REQUIRE(euler_characteristic(both) == euler_characteristic(a) + euler_characteristic(b));
    }
}

TEST_CASE("betti data") {
    SECTION("trivial homology") {
        WeightedOrbitSpace y;
        y.isolated = {{+1}, {-1}};
        BettiData d = betti_data(y, 0);
        REQUIRE(d == BettiData{2, 0, 0, 0, 0});
    }
    SECTION("worked identity") {
        WeightedOrbitSpace y;
        y.b1 = 1;
        y.isolated = {{+1}, {-1}, {+2}, {-2}};  // chi = 4
        BettiData d = betti_data(y, 2);
        REQUIRE(d.chi == 4);
        REQUIRE(d.b2 == 4);
        REQUIRE(d.b_minus == 2);
    }
    SECTION("impossible split is rejected") {
        WeightedOrbitSpace y;
        y.isolated = {{+1}, {-1}};
        REQUIRE_THROWS_AS(betti_data(y, 1), engine_error);
        try {
            betti_data(y, 1);
        } catch (const engine_error& e) {
            REQUIRE(e.code() == errc::inconsistent_betti);
        }
    }
    SECTION("negative b2 is rejected") {
        WeightedOrbitSpace y;  // chi = 0, b1 = 0 forces b2 = -2
        REQUIRE_THROWS_AS(betti_data(y, 0), engine_error);
    }
    SECTION("identities hold on generated data") {
        std::mt19937 rng(77);
        for (int i = 0; i < 100; ++i) {
            auto c = gen::reduce_case(rng, static_cast<std::size_t>(i));
            BettiData d = betti_data(c.y, c.b_plus);
            REQUIRE(d.b2 == d.b_plus + d.b_minus);
            REQUIRE(d.chi == 2 - 2 * d.b1 + d.b2);
            REQUIRE(d.b2 >= 0);
            REQUIRE(d.b_minus >= 0);
        }
    }
}

TEST_CASE("canonicalize sorts and normalizes") {
    WeightedOrbitSpace y;
    y.isolated = {{+1}, {-1}};
    y.circles.push_back({{{3, 1}}, 0, 2});
    y.circles.push_back({{{2, 1}}, 0, -2});
    y.arcs.push_back({{{5, 7}}, 0});  // unnormalized on purpose
    WeightedOrbitSpace c = canonicalize(y);

    REQUIRE(c.arcs[0].segments[0] == Weight{5, 2});
    REQUIRE(c.circles[0].index == -2);
    REQUIRE(c.isolated[0].index == -1);

    REQUIRE(canonicalize(c) == c);

    WeightedOrbitSpace reordered = y;
    std::swap(reordered.circles[0], reordered.circles[1]);
    std::swap(reordered.isolated[0], reordered.isolated[1]);
    REQUIRE(canonicalize(reordered) == c);
}

TEST_CASE("validation is invariant under normalization") {
    std::mt19937 rng(555);
    for (int i = 0; i < 50; ++i) {
        WeightedOrbitSpace y = gen::any_valid(rng);
        WeightedOrbitSpace shifted = y;
        for (auto& a : shifted.arcs)
            for (auto& w : a.segments) w.beta += w.alpha * gen::pick(rng, 1, 3);
        for (auto& a : shifted.arcs)
            for (auto& w : a.segments) w = normalize_weight(w);
        REQUIRE(validate(shifted).empty() == validate(y).empty());
        REQUIRE(canonicalize(shifted).arcs == canonicalize(y).arcs);
    }
}
