#include "oshape/shape.hpp"

#include <algorithm>

namespace oshape {

bool spec_valid(const ShapeSpec& s) {
    switch (s.kind) {
        case ShapeKind::Rect:
            return s.m >= 1 && s.n >= 1;
        case ShapeKind::LShape:
            return s.m >= 1 && s.n >= 1 && s.k >= 1 && s.l >= 1 && s.k < s.m &&
                   s.l < s.n;
        case ShapeKind::CShape:
            return s.m >= 2 && s.n >= 3 && s.k >= 1 && s.l >= 1 && s.c >= 1 &&
                   s.d >= 1 && s.n == s.c + s.d + s.l && s.k < s.m;
        case ShapeKind::OShape:
            return s.m >= 3 && s.n >= 3 && s.k >= 1 && s.l >= 1 && s.a >= 1 &&
                   s.b >= 1 && s.c >= 1 && s.d >= 1 && s.m == s.a + s.b + s.k &&
                   s.n == s.c + s.d + s.l;
    }
    return false;
}

void require_valid(const ShapeSpec& s) {
    if (!spec_valid(s)) throw std::invalid_argument("invalid shape spec: " + to_string(s));
}

HoleBox hole_box(const ShapeSpec& s) {
    switch (s.kind) {
        case ShapeKind::Rect:
            return {};
        case ShapeKind::LShape:
            return {s.m - s.k + 1, s.m, 1, s.l};
        case ShapeKind::CShape:
            return {s.m - s.k + 1, s.m, s.c + 1, s.c + s.l};
        case ShapeKind::OShape:
            return {s.a + 1, s.a + s.k, s.c + 1, s.c + s.l};
    }
    return {};
}

int vertex_count(const ShapeSpec& s) {
    if (s.kind == ShapeKind::Rect) return s.m * s.n;
    return s.m * s.n - s.k * s.l;
}

std::vector<GridPoint> neighbors(const ShapeSpec& s, GridPoint p) {
    if (!contains_point(s, p))
        throw std::invalid_argument("point not in shape: " + to_string(p) + " of " + to_string(s));
    std::vector<GridPoint> out;
    out.reserve(8);
    for (auto [dx, dy] : kNeighborOffsets) {
        GridPoint q{p.x + dx, p.y + dy};
        if (contains_point(s, q)) out.push_back(q);
    }
    return out;
}

int degree(const ShapeSpec& s, GridPoint p) {
    int deg = 0;
    for (auto [dx, dy] : kNeighborOffsets)
        if (contains_point(s, {p.x + dx, p.y + dy})) ++deg;
    return deg;
}

std::vector<GridPoint> all_points(const ShapeSpec& s) {
    std::vector<GridPoint> out;
    out.reserve(static_cast<size_t>(vertex_count(s)));
    for (int y = 1; y <= s.n; ++y)
        for (int x = 1; x <= s.m; ++x)
            if (contains_point(s, {x, y})) out.push_back({x, y});
    return out;
}

namespace {

// Identify the set {(x,y) : 1<=x<=m, 1<=y<=n} minus `hole` as a catalog spec
// in its own local frame, together with the placement mapping local points
// into that frame. Returns nullopt when the region is not a catalog shape.
std::optional<PlacedShape> classify_region(int m, int n, HoleBox hole) {
    if (m < 1 || n < 1) return std::nullopt;
    if (hole.empty()) return PlacedShape{ShapeSpec::rect(m, n), Sym::Identity, 0, 0};

    const int hw = hole.x1 - hole.x0 + 1;
    const int hh = hole.y1 - hole.y0 + 1;
    if (hw == m && hh == n) return std::nullopt;  // nothing left

    const bool at_left = hole.x0 == 1, at_right = hole.x1 == m;
    const bool at_top = hole.y0 == 1, at_bottom = hole.y1 == n;
    const int sides = (at_left ? 1 : 0) + (at_right ? 1 : 0) + (at_top ? 1 : 0) +
                      (at_bottom ? 1 : 0);

    if (sides == 0)
        return PlacedShape{ShapeSpec::oshape(m, n, hw, hh, hole.x0 - 1, m - hole.x1,
                                             hole.y0 - 1, n - hole.y1),
                           Sym::Identity, 0, 0};

    if (sides == 1) {
        // C-shape; canonical C has the bite on the right border.
        if (at_right)
            return PlacedShape{ShapeSpec::cshape(m, n, hw, hh, hole.y0 - 1, n - hole.y1),
                               Sym::Identity, 0, 0};
        if (at_left)
            return PlacedShape{ShapeSpec::cshape(m, n, hw, hh, hole.y0 - 1, n - hole.y1),
                               Sym::FlipX, 0, 0};
        if (at_bottom)  // Transpose carries the canonical right bite to the bottom
            return PlacedShape{ShapeSpec::cshape(n, m, hh, hw, hole.x0 - 1, m - hole.x1),
                               Sym::Transpose, 0, 0};
        // at_top: Rot270 carries the canonical right bite to the top
        return PlacedShape{ShapeSpec::cshape(n, m, hh, hw, hole.x0 - 1, m - hole.x1),
                           Sym::Rot270, 0, 0};
    }

    if (sides == 2 && !(at_left && at_right) && !(at_top && at_bottom)) {
        // Corner bite: L-shape, canonical L has the bite at the upper-right.
        Sym sym;
        if (at_right && at_top) sym = Sym::Identity;
        else if (at_left && at_top) sym = Sym::FlipX;
        else if (at_right && at_bottom) sym = Sym::FlipY;
        else sym = Sym::Rot180;  // left+bottom
        return PlacedShape{ShapeSpec::lshape(m, n, hw, hh), sym, 0, 0};
    }

    // Full-span bite along one side leaves a rectangle; a full-span bite
    // through the middle splits the region in two.
    if (hh == n && at_left && !at_right)
        return PlacedShape{ShapeSpec::rect(m - hw, n), Sym::Identity, hw, 0};
    if (hh == n && at_right && !at_left)
        return PlacedShape{ShapeSpec::rect(m - hw, n), Sym::Identity, 0, 0};
    if (hw == m && at_top && !at_bottom)
        return PlacedShape{ShapeSpec::rect(m, n - hh), Sym::Identity, 0, hh};
    if (hw == m && at_bottom && !at_top)
        return PlacedShape{ShapeSpec::rect(m, n - hh), Sym::Identity, 0, 0};
    return std::nullopt;
}

PlacedShape with_offset(PlacedShape p, int dx, int dy) {
    p.dx += dx;
    p.dy += dy;
    return p;
}

}  // namespace

std::pair<PlacedShape, PlacedShape> separate(const ShapeSpec& s, Axis axis, int cut) {
    require_valid(s);
    const HoleBox hole = hole_box(s);
    if (axis == Axis::Vertical) {
        if (cut < 1 || cut >= s.m) throw std::invalid_argument("cut out of range");
        HoleBox h1 = hole, h2 = hole;
        h1.x1 = std::min(hole.x1, cut);
        h2.x0 = std::max(hole.x0, cut + 1);
        auto left = classify_region(cut, s.n, h1.x0 <= h1.x1 ? h1 : HoleBox{});
        HoleBox h2l = h2;  // shift into the right part's local frame
        h2l.x0 -= cut;
        h2l.x1 -= cut;
        auto right = classify_region(s.m - cut, s.n, h2l.x0 <= h2l.x1 ? h2l : HoleBox{});
        if (!left || !right)
            throw std::invalid_argument("cut produces non-catalog shape");
        return {*left, with_offset(*right, cut, 0)};
    }
    if (cut < 1 || cut >= s.n) throw std::invalid_argument("cut out of range");
    HoleBox h1 = hole, h2 = hole;
    h1.y1 = std::min(hole.y1, cut);
    h2.y0 = std::max(hole.y0, cut + 1);
    auto top = classify_region(s.m, cut, h1.y0 <= h1.y1 ? h1 : HoleBox{});
    HoleBox h2l = h2;
    h2l.y0 -= cut;
    h2l.y1 -= cut;
    auto bottom = classify_region(s.m, s.n - cut, h2l.y0 <= h2l.y1 ? h2l : HoleBox{});
    if (!top || !bottom)
        throw std::invalid_argument("cut produces non-catalog shape");
    return {*top, with_offset(*bottom, 0, cut)};
}

ShapeSpec transform_spec(const ShapeSpec& s, Sym sym) {
    require_valid(s);
    if (s.kind == ShapeKind::Rect)
        return sym_swaps_axes(sym) ? ShapeSpec::rect(s.n, s.m) : s;
    if (s.kind != ShapeKind::OShape)
        throw std::invalid_argument("transform_spec supports Rect and OShape");
    switch (sym) {
        case Sym::Identity:      return s;
        case Sym::FlipX:         return ShapeSpec::oshape(s.m, s.n, s.k, s.l, s.b, s.a, s.c, s.d);
        case Sym::FlipY:         return ShapeSpec::oshape(s.m, s.n, s.k, s.l, s.a, s.b, s.d, s.c);
        case Sym::Rot180:        return ShapeSpec::oshape(s.m, s.n, s.k, s.l, s.b, s.a, s.d, s.c);
        case Sym::Transpose:     return ShapeSpec::oshape(s.n, s.m, s.l, s.k, s.c, s.d, s.a, s.b);
        case Sym::Rot90:         return ShapeSpec::oshape(s.n, s.m, s.l, s.k, s.d, s.c, s.a, s.b);
        case Sym::Rot270:        return ShapeSpec::oshape(s.n, s.m, s.l, s.k, s.c, s.d, s.b, s.a);
        case Sym::AntiTranspose: return ShapeSpec::oshape(s.n, s.m, s.l, s.k, s.d, s.c, s.b, s.a);
    }
    return s;
}

std::string to_string(const ShapeSpec& s) {
    switch (s.kind) {
        case ShapeKind::Rect:
            return "R(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")";
        case ShapeKind::LShape:
            return "L(" + std::to_string(s.m) + "," + std::to_string(s.n) + ";" +
                   std::to_string(s.k) + "," + std::to_string(s.l) + ")";
        case ShapeKind::CShape:
            return "C(" + std::to_string(s.m) + "," + std::to_string(s.n) + ";" +
                   std::to_string(s.k) + "," + std::to_string(s.l) + ";" +
                   std::to_string(s.c) + "," + std::to_string(s.d) + ")";
        case ShapeKind::OShape:
            return "O(" + std::to_string(s.m) + "," + std::to_string(s.n) + ";" +
                   std::to_string(s.k) + "," + std::to_string(s.l) + ";" +
                   std::to_string(s.a) + "," + std::to_string(s.b) + "," +
                   std::to_string(s.c) + "," + std::to_string(s.d) + ")";
    }
    return "?";
}

}  // namespace oshape
