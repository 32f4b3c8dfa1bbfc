#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oshape/geom.hpp"

namespace oshape {

// Catalog of shapes handled by the solvers. All are vertex-induced subgraphs
// of the king-move lattice:
//   Rect(m,n)                 full m-by-n block
//   LShape(m,n,k,l)           Rect(m,n) minus the k-by-l block at the upper-right corner
//   CShape(m,n,k,l,c,d)       Rect(m,n) minus a k-by-l block touching the right border,
//                             c rows above it and d rows below (n = c+d+l)
//   OShape(m,n,k,l,a,b,c,d)   Rect(m,n) minus an interior k-by-l block with margins
//                             a (left), b (right), c (top), d (bottom); m = a+b+k, n = c+d+l
enum class ShapeKind : std::uint8_t { Rect, LShape, CShape, OShape };

struct ShapeSpec {
    ShapeKind kind = ShapeKind::Rect;
    int m = 0, n = 0;
    int k = 0, l = 0;
    int a = 0, b = 0, c = 0, d = 0;

    static ShapeSpec rect(int m, int n) {
        ShapeSpec s;
        s.kind = ShapeKind::Rect;
        s.m = m;
        s.n = n;
        return s;
    }
    static ShapeSpec lshape(int m, int n, int k, int l) {
        ShapeSpec s;
        s.kind = ShapeKind::LShape;
        s.m = m;
        s.n = n;
        s.k = k;
        s.l = l;
        s.a = m - k;
        return s;
    }
    static ShapeSpec cshape(int m, int n, int k, int l, int c, int d) {
        ShapeSpec s;
        s.kind = ShapeKind::CShape;
        s.m = m;
        s.n = n;
        s.k = k;
        s.l = l;
        s.c = c;
        s.d = d;
        s.a = m - k;
        return s;
    }
    static ShapeSpec oshape(int m, int n, int k, int l, int a, int b, int c, int d) {
        ShapeSpec s;
        s.kind = ShapeKind::OShape;
        s.m = m;
        s.n = n;
        s.k = k;
        s.l = l;
        s.a = a;
        s.b = b;
        s.c = c;
        s.d = d;
        return s;
    }

    bool operator==(const ShapeSpec&) const = default;
};

bool spec_valid(const ShapeSpec& s);
void require_valid(const ShapeSpec& s);

// Column/row extent of the removed block; empty for rectangles.
// Hole cells are {(x,y) : hole_x0 <= x <= hole_x1, hole_y0 <= y <= hole_y1}.
struct HoleBox {
    int x0 = 1, x1 = 0, y0 = 1, y1 = 0;  // empty by default
    bool empty() const { return x1 < x0 || y1 < y0; }
    bool contains(GridPoint p) const {
        return !empty() && p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
};

HoleBox hole_box(const ShapeSpec& s);

inline bool contains_point(const ShapeSpec& s, GridPoint p) {
    if (p.x < 1 || p.x > s.m || p.y < 1 || p.y > s.n) return false;
    return !hole_box(s).contains(p);
}

int vertex_count(const ShapeSpec& s);

// In-shape neighbors of p, in the frozen offset order.
std::vector<GridPoint> neighbors(const ShapeSpec& s, GridPoint p);
int degree(const ShapeSpec& s, GridPoint p);

// All vertices, row-major (y, then x ascending).
std::vector<GridPoint> all_points(const ShapeSpec& s);

// A shape spec embedded in a parent coordinate frame: local points are mapped
// through `sym` (over the local bounding box) and then translated.
struct PlacedShape {
    ShapeSpec spec;
    Sym sym = Sym::Identity;
    int dx = 0, dy = 0;

    GridPoint to_parent(GridPoint local) const {
        GridPoint q = sym_apply(sym, local, spec.m, spec.n);
        return {q.x + dx, q.y + dy};
    }
    GridPoint to_local(GridPoint parent) const {
        GridPoint q{parent.x - dx, parent.y - dy};
        const bool sw = sym_swaps_axes(sym);
        return sym_apply(sym_inverse(sym), q, sw ? spec.n : spec.m,
                         sw ? spec.m : spec.n);
    }
    bool contains_parent(GridPoint parent) const {
        return contains_point(spec, to_local(parent));
    }
};

enum class Axis : std::uint8_t { Vertical, Horizontal };

// Split `s` into the part with columns <= cut (rows <= cut for horizontal
// separations) and the rest. Both parts must be catalog shapes; throws
// std::invalid_argument otherwise (cut-out-of-range, cut-produces-non-catalog-shape).
std::pair<PlacedShape, PlacedShape> separate(const ShapeSpec& s, Axis axis, int cut);

// Transform an O-shape spec by a box symmetry (margins permute accordingly).
ShapeSpec transform_spec(const ShapeSpec& s, Sym sym);

std::string to_string(const ShapeSpec& s);

}  // namespace oshape
