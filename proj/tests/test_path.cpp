#include <doctest.h>

#include "oshape/path.hpp"

using namespace oshape;

namespace {
PathSeq open_path(std::initializer_list<GridPoint> pts) {
    PathSeq p;
    p.pts = pts;
    return p;
}
PathSeq cycle(std::initializer_list<GridPoint> pts) {
    PathSeq p;
    p.pts = pts;
    p.closed = true;
    return p;
}
}  // namespace

TEST_CASE("validate_path catches each violation") {
    auto o = ShapeSpec::oshape(3, 3, 1, 1, 1, 1, 1, 1);
    CHECK(validate_path(o, open_path({{1, 1}, {2, 1}}), {1, 1}, {2, 1}).valid);
    auto bad_step = validate_path(o, open_path({{1, 1}, {2, 3}}), {1, 1}, {2, 3});
    CHECK_FALSE(bad_step.valid);
    CHECK(bad_step.reason.find("non-adjacent") != std::string::npos);
    auto out = validate_path(o, open_path({{1, 1}, {2, 1}, {2, 2}}), {1, 1}, {2, 2});
    CHECK_FALSE(out.valid);
    CHECK(out.reason.find("out-of-shape") != std::string::npos);
    auto rep = validate_path(o, open_path({{1, 1}, {2, 1}, {1, 1}}), {1, 1}, {1, 1});
    CHECK_FALSE(rep.valid);
    CHECK(rep.reason.find("repeat") != std::string::npos);
}

TEST_CASE("concat joins disjoint adjacent-ended paths") {
    auto p = concat_paths(open_path({{1, 1}, {1, 2}}), open_path({{2, 3}, {3, 3}}));
    CHECK(p.pts == std::vector<GridPoint>{{1, 1}, {1, 2}, {2, 3}, {3, 3}});
    auto q = concat_paths(open_path({{1, 1}}), open_path({{2, 2}}));
    CHECK(q.size() == 2);
    CHECK_THROWS_AS(concat_paths(open_path({{1, 1}, {2, 1}}),
                                 open_path({{2, 1}, {3, 1}})),
                    std::invalid_argument);
}

TEST_CASE("combine_cycle_cycle merges along a parallel edge pair") {
    auto c1 = cycle({{1, 1}, {2, 1}, {2, 2}, {1, 2}});
    auto c2 = cycle({{3, 1}, {4, 1}, {4, 2}, {3, 2}});
    auto merged = combine_cycle_cycle(c1, c2, GridEdge({2, 1}, {2, 2}),
                                      GridEdge({3, 1}, {3, 2}));
    CHECK(merged.closed);
    CHECK(merged.size() == 8);
    CHECK(check_pathseq(merged).valid);
    CHECK_THROWS_AS(combine_cycle_cycle(c1, c2, GridEdge({1, 1}, {2, 1}),
                                        GridEdge({4, 1}, {4, 2})),
                    std::invalid_argument);
}

TEST_CASE("combine_cycle_path keeps the path endpoints") {
    auto p = open_path({{1, 1}, {2, 1}});
    auto c = cycle({{1, 2}, {2, 2}, {2, 3}, {1, 3}});
    auto merged = combine_cycle_path(c, p, GridEdge({1, 2}, {2, 2}),
                                     GridEdge({1, 1}, {2, 1}));
    CHECK(merged.size() == 6);
    CHECK(merged.start() == GridPoint{1, 1});
    CHECK(merged.end() == GridPoint{2, 1});
    CHECK(check_pathseq(merged).valid);
}

TEST_CASE("absorb_vertex splices an adjoining cell") {
    auto c = cycle({{1, 1}, {2, 1}, {2, 2}, {1, 2}});
    auto bigger = absorb_vertex(c, {3, 1}, GridEdge({2, 1}, {2, 2}));
    CHECK(bigger.size() == 5);
    CHECK(bigger.closed);
    CHECK(check_pathseq(bigger).valid);

    auto p = open_path({{1, 1}, {2, 1}});
    auto q = absorb_vertex(p, {1, 2}, GridEdge({1, 1}, {2, 1}));
    CHECK(q.pts == std::vector<GridPoint>{{1, 1}, {1, 2}, {2, 1}});

    CHECK_THROWS_AS(absorb_vertex(c, {4, 4}, GridEdge({2, 1}, {2, 2})),
                    std::invalid_argument);
}

TEST_CASE("close_path_with_cycle forms a cycle over the union") {
    auto c = cycle({{1, 1}, {2, 1}, {2, 2}, {1, 2}});
    auto p = open_path({{3, 1}, {3, 2}});
    auto merged = close_path_with_cycle(c, p, GridEdge({2, 1}, {2, 2}));
    CHECK(merged.closed);
    CHECK(merged.size() == 6);
    CHECK(check_pathseq(merged).valid);
}

TEST_CASE("parallel edge predicate accepts either pairing") {
    CHECK(parallel_edges(GridEdge({2, 1}, {2, 2}), GridEdge({3, 1}, {3, 2})));
    CHECK(parallel_edges(GridEdge({2, 1}, {2, 2}), GridEdge({3, 2}, {3, 1})));
    CHECK_FALSE(parallel_edges(GridEdge({1, 1}, {2, 1}), GridEdge({4, 1}, {4, 2})));
}
