#include <doctest.h>

#include <set>

#include "oshape/canonical.hpp"
#include "oshape/oracle.hpp"
#include "oshape/shape.hpp"

using namespace oshape;

namespace {

std::set<GridPoint> point_set(const ShapeSpec& s) {
    auto v = all_points(s);
    return {v.begin(), v.end()};
}

std::set<GridPoint> placed_point_set(const PlacedShape& p) {
    std::set<GridPoint> out;
    for (auto q : all_points(p.spec)) out.insert(p.to_parent(q));
    return out;
}

}  // namespace

TEST_CASE("contains_point on the minimal O-shape") {
    auto o = ShapeSpec::oshape(3, 3, 1, 1, 1, 1, 1, 1);
    CHECK_FALSE(contains_point(o, {2, 2}));  // the hole cell
    CHECK(contains_point(o, {1, 1}));
    auto wide = ShapeSpec::oshape(5, 3, 3, 1, 1, 1, 1, 1);
    CHECK_FALSE(contains_point(wide, {3, 2}));  // hole spans x in [2,4], y = 2
    CHECK(contains_point(wide, {1, 2}));
    CHECK(contains_point(wide, {5, 2}));
}

TEST_CASE("neighbors, frozen order and hole filtering") {
    auto o = ShapeSpec::oshape(3, 3, 1, 1, 1, 1, 1, 1);
    auto n1 = neighbors(o, {1, 1});
    CHECK(n1 == std::vector<GridPoint>{{2, 1}, {1, 2}});
    auto r22 = ShapeSpec::rect(2, 2);
    auto n2 = neighbors(r22, {1, 1});
    CHECK(n2 == std::vector<GridPoint>{{2, 1}, {1, 2}, {2, 2}});
    auto wide = ShapeSpec::oshape(5, 3, 3, 1, 1, 1, 1, 1);
    auto n3 = neighbors(wide, {3, 1});
    CHECK(n3 == std::vector<GridPoint>{{4, 1}, {2, 1}});
}

TEST_CASE("vertex counts") {
    CHECK(vertex_count(ShapeSpec::oshape(3, 3, 1, 1, 1, 1, 1, 1)) == 8);
    CHECK(vertex_count(ShapeSpec::oshape(5, 3, 3, 1, 1, 1, 1, 1)) == 12);
    CHECK(vertex_count(ShapeSpec::cshape(2, 3, 1, 1, 1, 1)) == 5);
}

TEST_CASE("vertex_count equals exhaustive membership count") {
    InstanceFilter f;
    f.max_vertices = 64;
    f.max_m = 8;
    f.max_n = 8;
    f.rect = f.lshape = f.cshape = f.oshape = true;
    for (const auto& spec : enumerate_specs(f)) {
        int count = 0;
        for (int y = 1; y <= spec.n; ++y)
            for (int x = 1; x <= spec.m; ++x)
                if (contains_point(spec, {x, y})) ++count;
        CHECK(count == vertex_count(spec));
    }
}

TEST_CASE("adjacency is symmetric") {
    InstanceFilter f;
    f.max_vertices = 40;
    f.max_m = 6;
    f.max_n = 6;
    f.rect = f.lshape = f.cshape = f.oshape = true;
    for (const auto& spec : enumerate_specs(f))
        for (auto p : all_points(spec))
            for (auto q : neighbors(spec, p)) {
                auto back = neighbors(spec, q);
                CHECK(std::find(back.begin(), back.end(), p) != back.end());
            }
}

TEST_CASE("separate splits the wide O-shape per the worked examples") {
    auto wide = ShapeSpec::oshape(5, 3, 3, 1, 1, 1, 1, 1);
    auto [left, right] = separate(wide, Axis::Vertical, 1);
    CHECK(left.spec == ShapeSpec::rect(1, 3));
    CHECK(right.spec == ShapeSpec::cshape(4, 3, 3, 1, 1, 1));

    auto [l2, r2] = separate(ShapeSpec::rect(4, 2), Axis::Vertical, 2);
    CHECK(l2.spec == ShapeSpec::rect(2, 2));
    CHECK(r2.spec == ShapeSpec::rect(2, 2));

    auto [l3, r3] = separate(wide, Axis::Vertical, 3);
    CHECK(l3.spec == ShapeSpec::cshape(3, 3, 2, 1, 1, 1));
    CHECK(r3.spec == ShapeSpec::cshape(2, 3, 1, 1, 1, 1));
}

TEST_CASE("separate partitions the vertex set exactly") {
    InstanceFilter f;
    f.max_vertices = 36;
    f.max_m = 6;
    f.max_n = 6;
    f.rect = f.lshape = f.cshape = f.oshape = true;
    for (const auto& spec : enumerate_specs(f)) {
        auto whole = point_set(spec);
        for (Axis axis : {Axis::Vertical, Axis::Horizontal}) {
            const int hi = axis == Axis::Vertical ? spec.m : spec.n;
            for (int cut = 1; cut < hi; ++cut) {
                std::pair<PlacedShape, PlacedShape> parts;
                try {
                    parts = separate(spec, axis, cut);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                auto sa = placed_point_set(parts.first);
                auto sb = placed_point_set(parts.second);
                std::set<GridPoint> uni = sa;
                uni.insert(sb.begin(), sb.end());
                CHECK(uni == whole);
                CHECK(sa.size() + sb.size() == whole.size());
            }
        }
    }
}

TEST_CASE("symmetries invert and transform specs consistently") {
    auto spec = ShapeSpec::oshape(6, 5, 2, 1, 1, 3, 2, 2);
    for (Sym sym : kAllSyms) {
        SymmetryTransform tf{sym, spec.m, spec.n};
        auto mapped = transform_spec(spec, sym);
        REQUIRE(spec_valid(mapped));
        // membership is preserved and the transform round-trips
        for (auto p : all_points(spec)) {
            CHECK(contains_point(mapped, tf.apply(p)));
            CHECK(tf.unapply(tf.apply(p)) == p);
        }
        CHECK(vertex_count(mapped) == vertex_count(spec));
    }
}

TEST_CASE("canonicalize lands in a reference orientation") {
    // every valid O-shape with m,n <= 7 normalizes
    InstanceFilter f;
    f.max_vertices = 1000;
    f.max_m = 7;
    f.max_n = 7;
    for (const auto& spec : enumerate_specs(f)) {
        auto pts = all_points(spec);
        auto ci = canonicalize(spec, pts.front(), pts.back());
        CHECK(canonical_family(ci.spec) != 0);
        CHECK(ci.s.x <= ci.t.x);
        CHECK(contains_point(ci.spec, ci.s));
        CHECK(contains_point(ci.spec, ci.t));
        // transform maps original points onto canonical ones bijectively
        CHECK(ci.to_original(ci.s) == (ci.swapped ? pts.back() : pts.front()));
    }

    auto o = ShapeSpec::oshape(3, 3, 1, 1, 1, 1, 1, 1);
    auto ci = canonicalize(o, {1, 1}, {2, 1});
    CHECK(ci.spec == o);
    CHECK(ci.transform.kind == Sym::Identity);
}
