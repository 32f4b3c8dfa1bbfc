#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace oshape {

// Lattice point, 1-indexed, origin at the upper-left corner.
// x is the column (grows rightward), y is the row (grows downward).
struct GridPoint {
    int x = 0;
    int y = 0;

    auto operator<=>(const GridPoint&) const = default;
};

inline GridPoint pt(int x, int y) { return GridPoint{x, y}; }

// King-move adjacency: both coordinate differences at most 1, not both 0.
inline bool adjacent(GridPoint a, GridPoint b) {
    const int dx = a.x - b.x, dy = a.y - b.y;
    return dx >= -1 && dx <= 1 && dy >= -1 && dy <= 1 && (dx != 0 || dy != 0);
}

// Fixed neighbor iteration order: E, W, S, N, SE, NW, SW, NE.
// Witness paths produced by the search code depend on this order; keep it frozen.
inline constexpr std::array<std::pair<int, int>, 8> kNeighborOffsets = {{
    {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {-1, 1}, {1, -1},
}};

// Undirected edge; stored with the lexicographically smaller endpoint first.
struct GridEdge {
    GridPoint u, v;

    GridEdge() = default;
    GridEdge(GridPoint a, GridPoint b) {
        if (b < a) std::swap(a, b);
        u = a;
        v = b;
    }

    auto operator<=>(const GridEdge&) const = default;
};

// Parallel edges in the sense used by the path/cycle combinators: the endpoints
// are pairwise adjacent across the two structures. Both pairings are accepted.
inline bool parallel_edges(GridEdge e1, GridEdge e2) {
    return (adjacent(e1.u, e2.u) && adjacent(e1.v, e2.v)) ||
           (adjacent(e1.u, e2.v) && adjacent(e1.v, e2.u));
}

// The eight axis-aligned isometries of an m-by-n box.
enum class Sym : std::uint8_t {
    Identity,
    FlipX,          // mirror columns: x -> m+1-x
    FlipY,          // mirror rows:    y -> n+1-y
    Rot180,
    Transpose,      // (x,y) -> (y,x); box becomes n-by-m
    Rot90,          // clockwise; box becomes n-by-m
    Rot270,         // counter-clockwise; box becomes n-by-m
    AntiTranspose,  // (x,y) -> (n+1-y, m+1-x); box becomes n-by-m
};

inline constexpr std::array<Sym, 8> kAllSyms = {
    Sym::Identity, Sym::FlipX,     Sym::FlipY, Sym::Rot180,
    Sym::Transpose, Sym::Rot90,    Sym::Rot270, Sym::AntiTranspose,
};

inline bool sym_swaps_axes(Sym s) {
    return s == Sym::Transpose || s == Sym::Rot90 || s == Sym::Rot270 ||
           s == Sym::AntiTranspose;
}

// Apply a symmetry of the m-by-n box to p. For axis-swapping symmetries the
// image lives in the n-by-m box.
inline GridPoint sym_apply(Sym s, GridPoint p, int m, int n) {
    switch (s) {
        case Sym::Identity:      return p;
        case Sym::FlipX:         return {m + 1 - p.x, p.y};
        case Sym::FlipY:         return {p.x, n + 1 - p.y};
        case Sym::Rot180:        return {m + 1 - p.x, n + 1 - p.y};
        case Sym::Transpose:     return {p.y, p.x};
        case Sym::Rot90:         return {n + 1 - p.y, p.x};
        case Sym::Rot270:        return {p.y, m + 1 - p.x};
        case Sym::AntiTranspose: return {n + 1 - p.y, m + 1 - p.x};
    }
    return p;
}

inline Sym sym_inverse(Sym s) {
    switch (s) {
        case Sym::Rot90:  return Sym::Rot270;
        case Sym::Rot270: return Sym::Rot90;
        default:          return s;  // the rest are involutions
    }
}

// A symmetry bound to its domain box, as stored alongside canonical instances.
struct SymmetryTransform {
    Sym kind = Sym::Identity;
    int m = 0;  // domain box width
    int n = 0;  // domain box height

    GridPoint apply(GridPoint p) const { return sym_apply(kind, p, m, n); }
    GridPoint unapply(GridPoint p) const {
        const bool sw = sym_swaps_axes(kind);
        return sym_apply(sym_inverse(kind), p, sw ? n : m, sw ? m : n);
    }
};

inline const char* sym_name(Sym s) {
    switch (s) {
        case Sym::Identity:      return "identity";
        case Sym::FlipX:         return "flip-x";
        case Sym::FlipY:         return "flip-y";
        case Sym::Rot180:        return "rot180";
        case Sym::Transpose:     return "transpose";
        case Sym::Rot90:         return "rot90";
        case Sym::Rot270:        return "rot270";
        case Sym::AntiTranspose: return "anti-transpose";
    }
    return "?";
}

inline std::string to_string(GridPoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace oshape
