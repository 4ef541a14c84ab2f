#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "manin/heights.hpp"
#include "manin/verify.hpp"

using namespace manin;
using namespace manin::heights;

TEST_CASE("normalize: examples, idempotence, rejection") {
    auto pt = [](std::initializer_list<i64> v) { return normalize(std::vector<i64>(v)); };
    CHECK(pt({4, 6}).coords == std::vector<i64>{2, 3});
    CHECK(pt({-1, 2}).coords == std::vector<i64>{1, -2});
    CHECK(pt({0, -5, 10}).coords == std::vector<i64>{0, 1, -2});
    std::vector<i64> zero{0, 0, 0};
    CHECK_THROWS_AS(normalize(zero), std::invalid_argument);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<i64> dist(-50, 50);
    for (int i = 0; i < 2000; ++i) {
        std::vector<i64> raw{dist(rng), dist(rng), dist(rng)};
        if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0) continue;
        ProjPoint p = normalize(raw);
        CHECK(normalize(p.coords).coords == p.coords);
    }
}

TEST_CASE("heights: examples and scaling invariance") {
    auto pt = [](std::initializer_list<i64> v) { return normalize(std::vector<i64>(v)); };
    CHECK(naive_height(pt({1, 2, 3})) == 3);
    CHECK(naive_height(pt({1, 0})) == 1);
    CHECK(naive_height(pt({7, -12})) == 12);
    CHECK(height(pt({1, 2, 3}), HeightSpec::anticanonical(2)) == 27);
    CHECK(height(pt({1, 0}), HeightSpec::naive()) == 1);
    CHECK(height(pt({2, 3}), HeightSpec::anticanonical(1)) == 9);
    CHECK_THROWS_AS(height(pt({1, 2}), HeightSpec::anticanonical(2)), std::invalid_argument);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<i64> dist(-30, 30);
    for (int i = 0; i < 2000; ++i) {
        std::vector<i64> raw{dist(rng), dist(rng)};
        if (raw[0] == 0 && raw[1] == 0) continue;
        i64 lambda = 0;
        while (lambda == 0) lambda = dist(rng);
        std::vector<i64> scaled{raw[0] * lambda, raw[1] * lambda};
        CHECK(height(normalize(raw), HeightSpec::anticanonical(1)) ==
              height(normalize(scaled), HeightSpec::anticanonical(1)));
    }
}

TEST_CASE("enumerate: tiny exact counts") {
    auto count_points = [](int dim, i64 T) {
        u64 n = 0;
        enumerate(dim, T, [&](std::span<const i64>) { ++n; });
        return n;
    };
    CHECK(count_points(1, 1) == 4);
    CHECK(count_points(1, 2) == 8);
    CHECK(count_points(2, 1) == 13);

    std::set<std::vector<i64>> pts;
    enumerate(1, 1, [&](std::span<const i64> p) { pts.insert(std::vector<i64>(p.begin(), p.end())); });
    std::set<std::vector<i64>> expect{{0, 1}, {1, 0}, {1, 1}, {1, -1}};
    CHECK(pts == expect);
}

TEST_CASE("enumerate: brute-force equality and visit uniqueness") {
    verify::SuiteResult r = verify::suite_enumeration(25, 8);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("enumerate: monotone in T and partition-independent") {
    std::set<std::vector<i64>> at10, at11, whole, split;
    enumerate(2, 10, [&](std::span<const i64> p) { at10.insert({p.begin(), p.end()}); });
    enumerate(2, 11, [&](std::span<const i64> p) { at11.insert({p.begin(), p.end()}); });
    for (const auto& p : at10) CHECK(at11.count(p) == 1);

    enumerate(2, 9, [&](std::span<const i64> p) { whole.insert({p.begin(), p.end()}); });
    for (i64 lo = 0; lo <= 9; lo += 2)
        enumerate_range(2, 9, lo, std::min<i64>(9, lo + 1),
                        [&](std::span<const i64> p) { split.insert({p.begin(), p.end()}); });
    CHECK(whole == split);
}

TEST_CASE("enumerate: P^1 density matches (12/pi^2) T^2 and the totient sum") {
    const i64 T = 10000;
    u64 n = 0;
    enumerate(1, T, [&](std::span<const i64>) { ++n; });
    // exact: 4 * sum_{k<=T} phi(k)
    std::vector<u32> phi(T + 1);
    for (i64 i = 0; i <= T; ++i) phi[i] = u32(i);
    for (i64 p = 2; p <= T; ++p)
        if (phi[p] == u32(p))  // p prime
            for (i64 m = p; m <= T; m += p) phi[m] -= phi[m] / u32(p);
    u64 tot = 0;
    for (i64 k = 1; k <= T; ++k) tot += phi[k];
    CHECK(n == 4 * tot);
    double predicted = 12.0 / (std::numbers::pi * std::numbers::pi) * double(T) * double(T);
    CHECK(std::abs(double(n) / predicted - 1.0) < 0.05);
}
