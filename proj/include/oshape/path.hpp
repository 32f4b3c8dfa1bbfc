#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oshape/shape.hpp"

namespace oshape {

// Ordered sequence of distinct points with consecutive king-move adjacency.
// A closed sequence is a cycle: the last point is adjacent to the first and
// the closing edge is implied, not stored.
struct PathSeq {
    std::vector<GridPoint> pts;
    bool closed = false;

    int size() const { return static_cast<int>(pts.size()); }
    GridPoint start() const { return pts.front(); }
    GridPoint end() const { return pts.back(); }

    // Edges in order; includes the closing edge for cycles.
    std::vector<GridEdge> edges() const;
    bool has_edge(GridEdge e) const;
    bool visits(GridPoint p) const;
};

struct PathCheck {
    bool valid = true;
    std::string reason;  // first violated rule when invalid
};

// Structural invariants only (distinctness, adjacency, closure).
PathCheck check_pathseq(const PathSeq& p);

// Full validation inside a shape with required endpoints. For closed paths the
// endpoints are ignored and closure is required instead.
PathCheck validate_path(const ShapeSpec& spec, const PathSeq& p, GridPoint s, GridPoint t);

// Concatenation P1 => P2: vertex-disjoint, end(P1) adjacent to start(P2).
PathSeq concat_paths(const PathSeq& p1, const PathSeq& p2);

// Path/cycle combinators. Preconditions are enforced; violations throw
// std::invalid_argument. All outputs cover exactly the union of the inputs.
PathSeq combine_cycle_cycle(const PathSeq& c1, const PathSeq& c2, GridEdge e1, GridEdge e2);
PathSeq combine_cycle_path(const PathSeq& c, const PathSeq& p, GridEdge e1, GridEdge e2);
PathSeq absorb_vertex(const PathSeq& c_or_p, GridPoint x, GridEdge edge);
PathSeq close_path_with_cycle(const PathSeq& c, const PathSeq& p, GridEdge edge);

// Remap every point; used to hop between local and parent frames.
PathSeq map_path(const PathSeq& p, const PlacedShape& placement);   // local -> parent
PathSeq reverse_path(const PathSeq& p);

// First edge of `hay` parallel to some edge of `needle` under the given
// predicate on the hay edge (e.g. restricted to a boundary). Returns the pair.
std::optional<std::pair<GridEdge, GridEdge>> find_parallel_edges(
    const PathSeq& hay, const PathSeq& needle);

}  // namespace oshape
