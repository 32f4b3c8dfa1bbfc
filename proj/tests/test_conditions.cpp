#include <doctest.h>

#include "oshape/conditions.hpp"
#include "oshape/oracle.hpp"

using namespace oshape;

TEST_CASE("cut vertices and cut pairs") {
    CHECK(is_cut_vertex(ShapeSpec::rect(3, 1), {2, 1}));
    CHECK_FALSE(is_cut_vertex(ShapeSpec::rect(3, 3), {2, 2}));
    auto omin = ShapeSpec::oshape(3, 3, 1, 1, 1, 1, 1, 1);
    for (auto p : all_points(omin)) CHECK_FALSE(is_cut_vertex(omin, p));

    auto wide = ShapeSpec::oshape(5, 3, 3, 1, 1, 1, 1, 1);
    CHECK(is_vertex_cut_pair(wide, {2, 1}, {4, 1}));
    CHECK_FALSE(is_vertex_cut_pair(omin, {1, 1}, {2, 1}));
    CHECK(is_vertex_cut_pair(omin, {1, 2}, {2, 1}));
}

TEST_CASE("rectangular and L/C forbidden conditions on the worked instances") {
    CHECK(check_rlc_forbidden(ShapeSpec::rect(3, 1), {1, 1}, {2, 1}) ==
          RlcCondition::F1);
    CHECK_FALSE(check_rlc_forbidden(ShapeSpec::cshape(2, 3, 1, 1, 1, 1), {1, 1},
                                    {1, 3}));
    // F3 pattern (Fig. 6(d)): L with m-k = 1, n-l = 2, l = 1, k >= 2
    auto l3 = ShapeSpec::lshape(3, 3, 2, 1);
    CHECK(check_rlc_forbidden(l3, {1, 2}, {2, 3}) == RlcCondition::F3);
    CHECK(check_rlc_forbidden(l3, {1, 3}, {2, 2}) == RlcCondition::F3);
    // F6: C with a = 1 and both endpoints above the notch
    auto c6 = ShapeSpec::cshape(2, 3, 1, 1, 1, 1);
    CHECK(check_rlc_forbidden(c6, {1, 1}, {2, 1}) == RlcCondition::F6);
}

TEST_CASE("theorem-2 soundness: forbidden iff no Hamiltonian path (desk scale)") {
    InstanceFilter f;
    f.max_vertices = 14;
    f.max_m = 8;
    f.max_n = 8;
    f.rect = f.lshape = f.cshape = true;
    f.oshape = false;
    for (const auto& spec : enumerate_specs(f)) {
        for_each_endpoint_pair(spec, [&](GridPoint s, GridPoint t) {
            const bool forbidden = check_rlc_forbidden(spec, s, t).has_value();
            const bool exists = brute_hamiltonian_exists(spec, s, t);
            if (forbidden == exists) {
                CAPTURE(to_string(spec));
                CAPTURE(to_string(s));
                CAPTURE(to_string(t));
                auto cond = check_rlc_forbidden(spec, s, t);
                CAPTURE(cond ? to_string(*cond) : "none");
                REQUIRE(forbidden != exists);
            }
        });
    }
}

TEST_CASE("theorem-7 soundness: O forbidden iff no Hamiltonian path (desk scale)") {
    InstanceFilter f;
    f.max_vertices = 16;
    f.max_m = 9;
    f.max_n = 9;
    for (const auto& spec : enumerate_specs(f)) {
        for_each_endpoint_pair(spec, [&](GridPoint s, GridPoint t) {
            const auto verdict = check_o_forbidden(spec, s, t);
            const bool exists = brute_hamiltonian_exists(spec, s, t);
            if (verdict.has_value() == exists) {
                CAPTURE(to_string(spec));
                CAPTURE(to_string(s));
                CAPTURE(to_string(t));
                CAPTURE(verdict ? verdict->describe() : "none");
                REQUIRE(verdict.has_value() != exists);
            }
        });
    }
}

TEST_CASE("worked verdicts") {
    auto omin = ShapeSpec::oshape(3, 3, 1, 1, 1, 1, 1, 1);
    auto v1 = check_o_forbidden(omin, {1, 1}, {2, 3});
    REQUIRE(v1.has_value());
    CHECK(v1->cls == ConditionClass::F10_1);
    CHECK_FALSE(check_o_forbidden(omin, {1, 1}, {2, 1}).has_value());

    auto wide = ShapeSpec::oshape(5, 3, 3, 1, 1, 1, 1, 1);
    auto v2 = check_o_forbidden(wide, {2, 1}, {4, 1});
    REQUIRE(v2.has_value());
    CHECK(v2->cls == ConditionClass::F1);
}

TEST_CASE("classification of the worked instances") {
    auto wide = ShapeSpec::oshape(5, 3, 3, 1, 1, 1, 1, 1);
    CHECK(classify_longest_case(wide, {2, 1}, {4, 1}).cls == ConditionClass::O1);
    auto omin = ShapeSpec::oshape(3, 3, 1, 1, 1, 1, 1, 1);
    CHECK(classify_longest_case(omin, {1, 1}, {2, 3}).cls == ConditionClass::O4a);
    CHECK(classify_longest_case(omin, {1, 1}, {2, 1}).cls == ConditionClass::O0);
}

TEST_CASE("classification totality and O0 consistency (desk scale)") {
    InstanceFilter f;
    f.max_vertices = 14;
    f.max_m = 8;
    f.max_n = 8;
    for (const auto& spec : enumerate_specs(f)) {
        for_each_endpoint_pair(spec, [&](GridPoint s, GridPoint t) {
            Verdict v = classify_longest_case(spec, s, t);  // must not throw
            const bool forbidden = check_o_forbidden(spec, s, t).has_value();
            REQUIRE(forbids_hamiltonian(v.cls) == forbidden);
        });
    }
}

TEST_CASE("forbidden check is isometry invariant (samples)") {
    auto spec = ShapeSpec::oshape(5, 4, 2, 1, 1, 2, 1, 2);
    for_each_endpoint_pair(spec, [&](GridPoint s, GridPoint t) {
        const bool base = check_o_forbidden(spec, s, t).has_value();
        for (Sym sym : kAllSyms) {
            SymmetryTransform tf{sym, spec.m, spec.n};
            auto mapped = transform_spec(spec, sym);
            CHECK(check_o_forbidden(mapped, tf.apply(s), tf.apply(t)).has_value() ==
                  base);
        }
    });
}
