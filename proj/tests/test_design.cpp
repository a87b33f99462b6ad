#include <doctest.h>

#include <algorithm>

#include "design.hpp"
#include "error.hpp"
#include "oracles.hpp"

using namespace pbdtk;

namespace {

Design hand_near_pencil(int n) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> big;
    for (int i = 0; i < n - 1; ++i) big.push_back(i);
    blocks.push_back(big);
    for (int i = 0; i < n - 1; ++i) blocks.push_back({i, n - 1});
    return make_design(n, std::move(blocks));
}

} // namespace

TEST_SUITE("designs") {

TEST_CASE("near-pencils validate with both flags set") {
    for (int n = 3; n <= 40; ++n) {
        Design d = hand_near_pencil(n);
        auto r = validate_pbd(d);
        CHECK(r.ok);
        CHECK(r.is_nontrivial);
        CHECK(r.is_near_pencil);
        CHECK(sigma(d) == 3 * n - 3);
        CHECK(max_block_size(d) == n - 1);
        auto v = valencies(d);
        CHECK(v[static_cast<std::size_t>(n - 1)] == n - 1);
        for (int i = 0; i < n - 1; ++i) CHECK(v[static_cast<std::size_t>(i)] == 2);
        CHECK(oracle::covers_all_pairs_once(n, d.blocks));
    }
}

TEST_CASE("the all-pairs design on three points is a near-pencil") {
    Design d = make_design(3, {{0, 1}, {0, 2}, {1, 2}});
    auto r = validate_pbd(d);
    CHECK(r.ok);
    CHECK(r.is_near_pencil);
}

TEST_CASE("a single full block is balanced but trivial") {
    Design d = make_design(4, {{0, 1, 2, 3}});
    auto r = validate_pbd(d);
    CHECK(r.ok);
    CHECK_FALSE(r.is_nontrivial);
    CHECK_FALSE(r.is_near_pencil);
}

TEST_CASE("missing and duplicated pairs are reported precisely") {
    Design missing;
    missing.n = 4;
    missing.blocks = {{0, 1, 2}, {0, 3}, {1, 3}}; // pair (2,3) uncovered
    auto r1 = validate_pbd(missing);
    CHECK_FALSE(r1.ok);
    bool saw = false;
    for (const auto& v : r1.violations)
        if (v.kind == ViolationKind::coverage_missing && v.a == 2 && v.b == 3)
            saw = true;
    CHECK(saw);
    CHECK(r1.text().find("2") != std::string::npos);

    Design dup;
    dup.n = 4;
    dup.blocks = {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 1}};
    auto r2 = validate_pbd(dup);
    CHECK_FALSE(r2.ok);
    saw = false;
    for (const auto& v : r2.violations)
        if (v.kind == ViolationKind::coverage_duplicate && v.a == 0 && v.b == 1)
            saw = true;
    CHECK(saw);
}

TEST_CASE("structural defects are rejected by make_design") {
    CHECK_THROWS_AS(make_design(3, {{0, 1}, {1, 2}, {0, 2, 3}}), Error); // range
    CHECK_THROWS_AS(make_design(3, {{0, 0}, {1, 2}}), Error);           // dup point
    CHECK_THROWS_AS(make_design(3, {{0}, {1, 2}}), Error);              // size 1
}

TEST_CASE("canonicalization sorts blocks and block lists") {
    Design d;
    d.n = 4;
    d.blocks = {{3, 0}, {2, 1, 0}, {3, 1}, {3, 2}};
    canonicalize(d);
    CHECK(d.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}});
    CHECK(sigma(d) == 9);
}

TEST_CASE("valencies count blocks through each point") {
    Design d = make_design(4, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}});
    CHECK(valencies(d) == std::vector<std::int64_t>{2, 2, 2, 3});
}

TEST_CASE("resolution verification accepts classes that partition the points") {
    // K4 one-factorization as a resolvable design: three classes of two pairs
    Design d = make_design(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    // canonical block order: 01 02 03 12 13 23
    Resolution good;
    good.classes = {{0, 5}, {1, 4}, {2, 3}};
    CHECK(verify_resolution(d, good));

    Resolution overlap;
    overlap.classes = {{0, 5}, {1, 4}, {2, 4}}; // block 4 reused, block 3 missing
    CHECK_FALSE(verify_resolution(d, overlap));

    Resolution wrong;
    wrong.classes = {{0, 1}, {2, 4}, {3, 5}}; // classes do not partition points
    CHECK_FALSE(verify_resolution(d, wrong));
}

} // TEST_SUITE
