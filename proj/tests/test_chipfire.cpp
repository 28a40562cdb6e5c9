#include "doctest.h"

#include "oracle_helpers.hpp"
#include "wheelzeta/chipfire.hpp"
#include "wheelzeta/errors.hpp"
#include "wheelzeta/wheel.hpp"

#include <algorithm>

#include <random>

using namespace wheelzeta;

namespace {
Configuration cfg(const WheelParams& p, Chips c) { return make_configuration(p, std::move(c)); }
} // namespace

TEST_CASE("firing rules") {
    const WheelParams p{3, 3, 2};
    CHECK(fire(cfg(p, {6, 0, 0}), 1).chips == Chips{0, 3, 1});
    CHECK_THROWS_AS(fire(cfg(p, {5, 0, 0}), 1), IllegalFire);
    CHECK(fire(cfg(p, {1, 2, 3}), 0).chips == Chips{3, 4, 5});
    CHECK_THROWS_AS(fire(cfg(p, {6, 2, 3}), 0), IllegalFire);
    CHECK_THROWS_AS(fire(cfg(p, {1, 2, 3}), 4), InvalidArgument);
    CHECK_THROWS_AS(make_configuration(p, {1, 2}), InvalidArgument);
}

TEST_CASE("stabilization") {
    const WheelParams p{3, 3, 2};
    CHECK(stabilize(cfg(p, {2, 8, 3})).chips == Chips{1, 0, 4});
    CHECK(stabilize(cfg(p, {2, 8, 3}), FiringPolicy::HighestIndex).chips == Chips{1, 0, 4});
    CHECK_THROWS_AS(stabilize(cfg(p, {-1, 0, 0})), InvalidArgument);
    CHECK(is_stable(cfg(p, {5, 5, 0})));
    CHECK_FALSE(is_stable(cfg(p, {6, 0, 0})));
    // k = 1: the loop edges return chips, net loss t per firing.
    CHECK(stabilize(cfg({1, 2, 3}, {13})).chips == Chips{4});
}

TEST_CASE("block test against the orbit test") {
    for (unsigned k = 1; k <= 4; ++k)
        for (std::int64_t q = 1; q <= 3; ++q)
            for (std::int64_t t = 1; t <= 3; ++t) {
                const WheelParams p{k, q, t};
                Configuration c{p, Chips(k, 0)};
                for (;;) {
                    CHECK(is_critical_blocks(c) == is_critical_dynamic(c));
                    std::size_t i = k;
                    while (i > 0 && c.chips[i - 1] == q + t) c.chips[--i] = 0;
                    if (i == 0) break;
                    ++c.chips[i - 1];
                }
            }
    CHECK_FALSE(is_critical(cfg({3, 3, 2}, {0, 5, 0})));
    CHECK(is_critical(cfg({3, 3, 2}, {4, 1, 0})));
    CHECK_THROWS_AS(is_critical_blocks(cfg({3, 0, 2}, {1, 1, 1})), Unsupported);
}

TEST_CASE("critical group orders match the independent count") {
    for (const auto& [k, q, t, n] : oracle::critical_counts) {
        const WheelParams p{static_cast<unsigned>(k), q, t};
        CAPTURE(p.to_string());
        const auto g = enumerate_criticals(p);
        CHECK(g.order() == n);
        CHECK(g.contains(g.identity));
    }
    CHECK(enumerate_criticals({3, 3, 2}).order() == 134);
    CHECK_THROWS_AS(enumerate_criticals({8, 3, 3}, 1000), ResourceLimit);
}

TEST_CASE("group operations") {
    const WheelParams p{3, 3, 2};
    CHECK(group_add(cfg(p, {2, 4, 2}), cfg(p, {0, 4, 1})).chips == Chips{1, 0, 4});
    CHECK_THROWS_AS(group_add(cfg(p, {2, 4, 2}), cfg({3, 3, 3}, {2, 4, 2})), InvalidArgument);
    for (const auto& [params, a, b, sum] : oracle::group_sums) {
        const WheelParams w{static_cast<unsigned>(params[0]), params[1], params[2]};
        CHECK(group_add(cfg(w, Chips(a.begin(), a.end())), cfg(w, Chips(b.begin(), b.end()))).chips == Chips(sum.begin(), sum.end()));
    }
    const auto g = enumerate_criticals(p);
    for (std::size_t i = 0; i < g.elements.size(); i += 5) {
        const auto& c = g.elements[i];
        CHECK(group_add(c, g.identity) == c);
        CHECK(group_add(c, group_inverse(c)) == g.identity);
        CHECK(group_scalar(3, c) == group_add(c, group_add(c, c)));
        CHECK(group_scalar(-1, c) == group_inverse(c));
        CHECK(group_scalar(0, c) == g.identity);
        CHECK(group_scalar(134, c) == g.identity);
    }
}

TEST_CASE("group axioms on a random sample") {
    std::mt19937_64 rng(7);
    const auto g = enumerate_criticals({4, 1, 2});
    std::uniform_int_distribution<std::size_t> pick(0, g.elements.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const auto &a = g.elements[pick(rng)], &b = g.elements[pick(rng)], &c = g.elements[pick(rng)];
        CHECK(group_add(a, b) == group_add(b, a));
        CHECK(group_add(group_add(a, b), c) == group_add(a, group_add(b, c)));
        CHECK(g.contains(group_add(a, b)));
    }
}

TEST_CASE("parse_chips") {
    CHECK(parse_chips("2, 4,2") == Chips{2, 4, 2});
    CHECK(parse_chips("-1") == Chips{-1});
    CHECK_THROWS_AS(parse_chips("2,,4"), InvalidArgument);
    CHECK_THROWS_AS(parse_chips("x"), InvalidArgument);
}

TEST_CASE("worked firing examples") {
    const WheelParams p{3, 3, 2};
    CHECK(fire(cfg(p, {2, 7, 2}), 2).chips == Chips{3, 1, 5});
    CHECK(stabilize(cfg(p, {2, 7, 2})).chips == Chips{3, 1, 5});
    CHECK(fire(cfg(p, {0, 5, 0}), 0).chips == Chips{2, 7, 2});
    CHECK_THROWS_AS(fire(cfg(p, {1, 1, 1}), 1), IllegalFire);
    CHECK(criticalize(cfg(p, {2, 8, 3})).chips == Chips{1, 0, 4});
    CHECK(is_critical_blocks(cfg(p, {4, 0, 3})));
    CHECK(is_critical_dynamic(cfg(p, {1, 0, 4})));
    CHECK_FALSE(is_critical_dynamic(cfg(p, {0, 5, 0})));
    CHECK_FALSE(is_critical_dynamic(cfg(p, {7, 0, 0})));
}

TEST_CASE("exhaustive group axioms on K(W_3(3,2))") {
    const auto g = enumerate_criticals({3, 3, 2});
    REQUIRE(g.elements.size() == 134);
    CHECK(group_add(g.identity, g.identity) == g.identity);
    CHECK(group_inverse(g.identity) == g.identity);
    for (const auto& c : g.elements) {
        CHECK(criticalize(c) == c);
        CHECK(group_add(g.identity, c) == c);
        const auto inv = group_inverse(c);
        CHECK(group_add(c, inv) == g.identity);
        CHECK(group_inverse(inv) == c);
        CHECK(class_representative(c.params, c.chips) == c);
        CHECK(std::any_of(c.chips.begin(), c.chips.end(), [](auto x) { return x >= 4; }));
        for (const auto& d : g.elements) CHECK(g.contains(group_add(c, d)));
    }
    const auto a = cfg({3, 3, 2}, {2, 4, 2}), b = cfg({3, 3, 2}, {0, 4, 1});
    CHECK(group_add(group_add(a, b), b) == group_add(a, group_add(b, b)));
    CHECK(group_scalar(2, a) == group_add(a, a));
    CHECK(group_scalar(1, a) == a);
}

TEST_CASE("class representatives") {
    const WheelParams p{3, 3, 2};
    const auto lap = reduced_laplacian(p);
    for (std::size_t r = 0; r < 3; ++r) {
        Chips row(3);
        for (std::size_t c = 0; c < 3; ++c) row[c] = to_int64(lap(r, c));
        CHECK(class_representative(p, row) == group_identity(p));
    }
    CHECK(class_representative(p, Chips{-1, -1, -1}) == group_inverse(class_representative(p, Chips{1, 1, 1})));
    CHECK_THROWS_AS(class_representative(p, Chips{1, 1}), InvalidArgument);
}

TEST_CASE("the one-vertex wheel") {
    for (std::int64_t q = 0; q <= 3; ++q)
        for (std::int64_t t = 1; t <= 4; ++t) {
            const auto g = enumerate_criticals({1, q, t});
            CHECK(g.elements.size() == static_cast<std::size_t>(t));
            for (const auto& c : g.elements) CHECK(c.chips[0] >= 1 + q);
        }
}

TEST_CASE("stabilization is independent of firing order") {
    std::mt19937_64 rng(3);
    for (unsigned k = 1; k <= 4; ++k)
        for (std::int64_t q = 0; q <= 2; ++q)
            for (std::int64_t t = 1; t <= 2; ++t) {
                const WheelParams p{k, q, t};
                std::uniform_int_distribution<std::int64_t> d(0, 5 * (1 + q + t));
                for (int i = 0; i < 200; ++i) {
                    Configuration c{p, Chips(k)};
                    for (auto& x : c.chips) x = d(rng);
                    CHECK(stabilize(c, FiringPolicy::LowestIndex) == stabilize(c, FiringPolicy::HighestIndex));
                }
            }
}
