#include <doctest.h>

#include "oshape/oracle.hpp"

using namespace oshape;

TEST_CASE("brute longest on the worked instances") {
    auto omin = ShapeSpec::oshape(3, 3, 1, 1, 1, 1, 1, 1);
    auto r = brute_longest_path(omin, {1, 1}, {2, 3});
    CHECK(r.length == 7);
    CHECK(r.exhausted);
    // cross-check with the independent DP
    CHECK(dp_longest_path(omin, {1, 1}, {2, 3}) == 7);

    CHECK(brute_longest_path(ShapeSpec::rect(2, 2), {1, 1}, {2, 2}).length == 4);

    auto wide = ShapeSpec::oshape(5, 3, 3, 1, 1, 1, 1, 1);
    CHECK(brute_longest_path(wide, {2, 1}, {4, 1}).length == 11);
    CHECK(dp_longest_path(wide, {2, 1}, {4, 1}) == 11);
}

TEST_CASE("brute hamiltonian existence on the worked instances") {
    auto omin = ShapeSpec::oshape(3, 3, 1, 1, 1, 1, 1, 1);
    CHECK(brute_hamiltonian_exists(omin, {1, 1}, {2, 1}));
    CHECK_FALSE(brute_hamiltonian_exists(omin, {1, 1}, {2, 3}));
    CHECK(brute_hamiltonian_exists(ShapeSpec::rect(3, 1), {1, 1}, {3, 1}));
}

TEST_CASE("witness paths are valid and deterministic") {
    auto wide = ShapeSpec::oshape(5, 3, 3, 1, 1, 1, 1, 1);
    auto r1 = brute_longest_path(wide, {2, 1}, {4, 1});
    auto r2 = brute_longest_path(wide, {2, 1}, {4, 1});
    CHECK(r1.witness.pts == r2.witness.pts);
    CHECK(validate_path(wide, r1.witness, {2, 1}, {4, 1}).valid);
    CHECK(r1.witness.size() == r1.length);
}

TEST_CASE("the two oracle implementations agree on small instances") {
    InstanceFilter f;
    f.max_vertices = 12;
    f.max_m = 6;
    f.max_n = 6;
    f.rect = f.lshape = f.cshape = f.oshape = true;
    for (const auto& spec : enumerate_specs(f)) {
        for_each_endpoint_pair(spec, [&](GridPoint s, GridPoint t) {
            const int dfs = brute_longest_path(spec, s, t).length;
            const int dp = dp_longest_path(spec, s, t);
            REQUIRE(dfs == dp);
            REQUIRE(brute_hamiltonian_exists(spec, s, t) ==
                    (dfs == vertex_count(spec)));
        });
    }
}

TEST_CASE("instance enumeration matches the counting identities") {
    InstanceFilter f3;
    f3.max_vertices = 64;
    f3.max_m = 3;
    f3.max_n = 3;
    auto only = enumerate_specs(f3);
    REQUIRE(only.size() == 1);
    CHECK(only[0] == ShapeSpec::oshape(3, 3, 1, 1, 1, 1, 1, 1));

    InstanceFilter f43;
    f43.max_vertices = 64;
    f43.max_m = 4;
    f43.max_n = 3;
    int count43 = 0;
    for (const auto& spec : enumerate_specs(f43))
        if (spec.m == 4 && spec.n == 3) ++count43;
    CHECK(count43 == 3);

    int pairs = 0;
    for_each_endpoint_pair(only[0], [&](GridPoint, GridPoint) { ++pairs; });
    CHECK(pairs == 28);
}

TEST_CASE("oracle caps") {
    auto big = ShapeSpec::rect(10, 10);
    CHECK_THROWS_AS(brute_longest_path(big, {1, 1}, {10, 10}), std::invalid_argument);
    CHECK_THROWS_AS(brute_hamiltonian_exists(big, {1, 1}, {10, 10}),
                    std::invalid_argument);
}
