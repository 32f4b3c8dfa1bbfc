#include "oshape/conditions.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace oshape {

namespace {

// Connected component count of the shape minus up to two cells, by BFS over
// the bounding box. Linear in the shape area.
struct RemovalScan {
    int components = 0;
    int largest = 0;
};

RemovalScan scan_without(const ShapeSpec& spec, GridPoint r1, GridPoint r2) {
    const int w = spec.m, h = spec.n;
    std::vector<std::uint8_t> state(static_cast<size_t>(w) * h, 0);  // 1 in-shape, 2 seen
    auto idx = [w](GridPoint p) { return static_cast<size_t>(p.y - 1) * w + (p.x - 1); };
    int total = 0;
    for (int y = 1; y <= h; ++y)
        for (int x = 1; x <= w; ++x) {
            GridPoint p{x, y};
            if (contains_point(spec, p) && p != r1 && p != r2) {
                state[idx(p)] = 1;
                ++total;
            }
        }
    RemovalScan out;
    std::vector<GridPoint> stack;
    for (int y = 1; y <= h && total > 0; ++y)
        for (int x = 1; x <= w; ++x) {
            GridPoint p{x, y};
            if (state[idx(p)] != 1) continue;
            ++out.components;
            int size = 0;
            stack.assign(1, p);
            state[idx(p)] = 2;
            while (!stack.empty()) {
                GridPoint q = stack.back();
                stack.pop_back();
                ++size;
                for (auto [dx, dy] : kNeighborOffsets) {
                    GridPoint r{q.x + dx, q.y + dy};
                    if (r.x < 1 || r.x > w || r.y < 1 || r.y > h) continue;
                    if (state[idx(r)] != 1) continue;
                    state[idx(r)] = 2;
                    stack.push_back(r);
                }
            }
            out.largest = std::max(out.largest, size);
        }
    return out;
}

const GridPoint kNowhere{-1, -1};

}  // namespace

bool is_cut_vertex(const ShapeSpec& spec, GridPoint v) {
    if (!contains_point(spec, v))
        throw std::invalid_argument("point not in shape: " + to_string(v));
    return scan_without(spec, v, kNowhere).components > 1;
}

bool is_vertex_cut_pair(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    if (s == t) throw std::invalid_argument("identical points");
    if (!contains_point(spec, s) || !contains_point(spec, t))
        throw std::invalid_argument("point not in shape");
    return scan_without(spec, s, t).components > 1;
}

int largest_component_without(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    return scan_without(spec, s, t).largest;
}

const char* to_string(RlcCondition c) {
    switch (c) {
        case RlcCondition::F1: return "F1";
        case RlcCondition::F2: return "F2";
        case RlcCondition::F3: return "F3";
        case RlcCondition::F4: return "F4";
        case RlcCondition::F5: return "F5";
        case RlcCondition::F6: return "F6";
    }
    return "?";
}

namespace {

bool has_stray_leaf(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    for (auto p : all_points(spec))
        if (p != s && p != t && degree(spec, p) == 1) return true;
    return false;
}

bool pair_is(GridPoint s, GridPoint t, GridPoint a, GridPoint b) {
    return (s == a && t == b) || (s == b && t == a);
}

// L-shape conditions are stated for the canonical orientation; the
// anti-transpose maps that orientation onto itself, so patterns are checked
// in both frames. Same idea for C-shapes and the vertical flip.
struct RlcFrame {
    ShapeSpec spec;
    GridPoint s, t;
};

std::vector<RlcFrame> rlc_frames(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    std::vector<RlcFrame> out;
    out.push_back({spec, s, t});
    if (spec.kind == ShapeKind::LShape) {
        SymmetryTransform tf{Sym::AntiTranspose, spec.m, spec.n};
        out.push_back({ShapeSpec::lshape(spec.n, spec.m, spec.l, spec.k), tf.apply(s),
                       tf.apply(t)});
    } else if (spec.kind == ShapeKind::CShape) {
        SymmetryTransform tf{Sym::FlipY, spec.m, spec.n};
        out.push_back({ShapeSpec::cshape(spec.m, spec.n, spec.k, spec.l, spec.d, spec.c),
                       tf.apply(s), tf.apply(t)});
    }
    return out;
}

bool l_f3(const ShapeSpec& g, GridPoint s, GridPoint t) {
    return g.m - g.k == 1 && g.n - g.l == 2 && g.l == 1 && g.k >= 2 &&
           (pair_is(s, t, {1, 2}, {2, 3}) || pair_is(s, t, {1, 3}, {2, 2}));
}

bool c_f4(const ShapeSpec& g, GridPoint s, GridPoint t) {
    if (g.m != 3 || g.m - g.k != 2) return false;
    const bool top = g.c == 1 && (pair_is(s, t, {1, 1}, {2, 2}) || pair_is(s, t, {1, 2}, {2, 1}));
    const bool bottom = g.d == 1 && (pair_is(s, t, {1, g.n}, {2, g.n - 1}) ||
                                     pair_is(s, t, {1, g.n - 1}, {2, g.n}));
    return top || bottom;
}

bool c_f5(const ShapeSpec& g, GridPoint s, GridPoint t) {
    if (g.n != 3 || g.k != 1 || g.c != 1 || g.d != 1) return false;
    const int a = g.m - g.k;
    const int dy = std::abs(s.y - t.y);
    if (a >= 2 && s.x == g.m - 1 && t.x == g.m - 1 && dy == 2) return true;
    if (a == 2 && dy == 2 && ((s.x == 1 && t.x == 2) || (s.x == 2 && t.x == 1)))
        return true;
    if (a > 2) {
        if (t == GridPoint{g.m - 1, 2} && s.x < g.m - 1) return true;
        if (s == GridPoint{g.m - 1, 2} && t.x < g.m - 1) return true;
    }
    return false;
}

bool c_f6(const ShapeSpec& g, GridPoint s, GridPoint t) {
    if (g.m - g.k != 1) return false;
    return (s.y <= g.c && t.y <= g.c) || (s.y > g.c + g.l && t.y > g.c + g.l);
}

}  // namespace

std::optional<RlcCondition> check_rlc_forbidden(const ShapeSpec& spec, GridPoint s,
                                                GridPoint t) {
    require_valid(spec);
    if (spec.kind == ShapeKind::OShape)
        throw std::invalid_argument("wrong shape family for check_rlc_forbidden");
    if (s == t || !contains_point(spec, s) || !contains_point(spec, t))
        throw std::invalid_argument("endpoints must be distinct in-shape points");

    if (vertex_count(spec) == 1) throw std::invalid_argument("degenerate shape");
    if (is_cut_vertex(spec, s) || is_cut_vertex(spec, t) || is_vertex_cut_pair(spec, s, t))
        return RlcCondition::F1;
    if (has_stray_leaf(spec, s, t)) return RlcCondition::F2;

    for (const RlcFrame& fr : rlc_frames(spec, s, t)) {
        if (spec.kind == ShapeKind::LShape) {
            if (l_f3(fr.spec, fr.s, fr.t)) return RlcCondition::F3;
        } else if (spec.kind == ShapeKind::CShape) {
            if (c_f4(fr.spec, fr.s, fr.t)) return RlcCondition::F4;
            if (c_f5(fr.spec, fr.s, fr.t)) return RlcCondition::F5;
            if (c_f6(fr.spec, fr.s, fr.t)) return RlcCondition::F6;
        }
    }
    return std::nullopt;
}

const char* to_string(ConditionClass c) {
    switch (c) {
        case ConditionClass::O0:      return "O0";
        case ConditionClass::O1:      return "O1";
        case ConditionClass::O2:      return "O2";
        case ConditionClass::O3:      return "O3";
        case ConditionClass::O4a:     return "O4a";
        case ConditionClass::O4b:     return "O4b";
        case ConditionClass::F11:     return "F11";
        case ConditionClass::F12_1:   return "F12(1)";
        case ConditionClass::F12_2:   return "F12(2)";
        case ConditionClass::F13_1_1: return "F13(1.1)";
        case ConditionClass::F13_1_2: return "F13(1.2)";
        case ConditionClass::F13_1_3: return "F13(1.3)";
        case ConditionClass::F13_2_1: return "F13(2.1)";
        case ConditionClass::F13_2_2: return "F13(2.2)";
        case ConditionClass::F13_2_3: return "F13(2.3)";
        case ConditionClass::F13_3:   return "F13(3)";
        case ConditionClass::F1:      return "F1";
        case ConditionClass::F10_1:   return "F10(1)";
        case ConditionClass::F10_2:   return "F10(2)";
    }
    return "?";
}

std::string Verdict::describe() const {
    std::string out = to_string(cls);
    out += " in frame ";
    out += sym_name(frame.kind);
    out += " s'=" + to_string(fs) + " t'=" + to_string(ft);
    for (const auto& [name, p] : witnesses) out += " " + name + "=" + to_string(p);
    return out;
}

namespace {

struct OFrame {
    ShapeSpec spec;
    SymmetryTransform tf;
    GridPoint lo, hi;   // endpoints ordered by x, then y
    bool lo_is_orig_s;
};

std::vector<OFrame> o_frames(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    std::vector<OFrame> out;
    out.reserve(8);
    for (Sym sym : kAllSyms) {
        OFrame f;
        f.spec = transform_spec(spec, sym);
        f.tf = SymmetryTransform{sym, spec.m, spec.n};
        GridPoint ps = f.tf.apply(s), pt_ = f.tf.apply(t);
        f.lo_is_orig_s = true;
        if (pt_.x < ps.x || (pt_.x == ps.x && pt_.y < ps.y)) {
            std::swap(ps, pt_);
            f.lo_is_orig_s = false;
        }
        f.lo = ps;
        f.hi = pt_;
        out.push_back(f);
    }
    return out;
}

struct OCtx {
    bool adj = false;
    bool cut = false;  // F1: endpoint cut vertex or {s,t} vertex cut
};

struct Hit {
    ConditionClass cls;
    std::vector<std::pair<std::string, GridPoint>> wit;
};

// Condition guards, evaluated with (es, et) playing the roles the paper
// names s and t. The caller iterates orientation frames and both role
// assignments.
std::optional<Hit> guard_f10(const ShapeSpec& g, GridPoint es, GridPoint et,
                             const OCtx& ctx) {
    if (!(g.a == 1 && g.b == 1 && g.c == 1 && g.d == 1)) return std::nullopt;
    if (ctx.adj || ctx.cut) return std::nullopt;
    const bool s_corner = es == GridPoint{1, 1} || es == GridPoint{1, g.n};
    const bool t_corner = et == GridPoint{1, 1} || et == GridPoint{1, g.n};
    if (s_corner && es.x != et.x && es.y != et.y)
        return Hit{ConditionClass::F10_1, {}};
    if (g.l >= 3 && (s_corner || t_corner) && es.x == et.x &&
        std::abs(es.y - et.y) > 2)
        return Hit{ConditionClass::F10_2, {}};
    return std::nullopt;
}

std::optional<Hit> guard_f11(const ShapeSpec& g, GridPoint es, GridPoint et,
                             const OCtx& ctx) {
    if (!(g.c == 1 && g.a >= 2 && g.b >= 2 && g.d >= 2 && g.k >= 5)) return std::nullopt;
    if (ctx.adj || ctx.cut) return std::nullopt;
    for (GridPoint e : {es, et}) {
        if (e.y == 1 && e.x >= g.a + 3 && e.x <= g.a + g.k - 2) {
            return Hit{ConditionClass::F11,
                       {{"u", {g.a + 1, 1}}, {"v", {g.a + g.k, 1}}, {"t", e}}};
        }
    }
    return std::nullopt;
}

std::optional<Hit> guard_f12(const ShapeSpec& g, GridPoint es, GridPoint et,
                             const OCtx&) {
    if (!(g.c == 1 && g.d == 1 && g.a >= 2 && g.b >= 2 && g.k >= 3)) return std::nullopt;
    if (es.x <= g.a && et.x >= g.a + 3) return Hit{ConditionClass::F12_1, {}};
    if (es.x >= g.a + 1 && es.x <= g.a + g.k - 2 && et.x >= g.a + g.k + 1)
        return Hit{ConditionClass::F12_2, {}};
    return std::nullopt;
}

std::optional<Hit> guard_f13(const ShapeSpec& g, GridPoint es, GridPoint et,
                             const OCtx& ctx) {
    if (!(g.b == 1 && g.c == 1 && g.a >= 2)) return std::nullopt;
    if (ctx.adj) return std::nullopt;
    const int m = g.m, n = g.n, a = g.a, k = g.k, l = g.l, d = g.d, cl = g.c + g.l;

    // (1): both endpoints right of the left block, t at the top-right corner.
    if (es.x >= a + 1 && et.x >= a + 1 && et == GridPoint{m, 1} &&
        (d == 1 || (d >= 2 && es.y <= cl && et.y <= cl))) {
        if (k >= 3 && es.y == 1 && es.x <= m - 3)
            return Hit{ConditionClass::F13_1_1, {{"s", es}, {"t", et}}};
        if (es.y == n && es.x <= m - 1)
            return Hit{ConditionClass::F13_1_2, {{"s", es}, {"t", et}}};
        if (l >= 3 && es.x == et.x && es.y >= 4)
            return Hit{ConditionClass::F13_1_3, {{"s", es}, {"t", et}}};
    }
    // (2): d >= 2, t beside the hole, s in the left block or below the hole.
    if (d >= 2 && et.x >= a + 1 && et.y <= cl &&
        (es.x <= a || (es.x >= a + 1 && es.y >= cl + 1))) {
        if (k >= 3 && et.y == 1 && et.x >= a + 3 && et.x <= m - 1)
            return Hit{ConditionClass::F13_2_1,
                       {{"u", {a + 1, 1}}, {"z", {m, cl - 1}}, {"t", et}}};
        if (l >= 3 && et.x == m && et.y >= 2 && et.y <= l - 1)
            return Hit{ConditionClass::F13_2_2,
                       {{"u", {a + 1, 1}}, {"v", {m, cl}}, {"t", et}}};
        if (k >= 3 && l >= 3 && et == GridPoint{m, 1})
            return Hit{ConditionClass::F13_2_3,
                       {{"u", {a + 1, 1}}, {"v", {m, cl}}, {"t", et}}};
    }
    // (3): d = 1, endpoints on opposite sides of the left separation.
    if (d == 1 && es.x <= a && et.x >= a + 1 &&
        ((et.y >= 2 && et.y <= cl) || (k >= 3 && et.x >= a + 3)))
        return Hit{ConditionClass::F13_3, {{"s", es}, {"t", et}}};
    return std::nullopt;
}

std::optional<Hit> guard_o1(const ShapeSpec& g, GridPoint es, GridPoint et,
                            const OCtx& ctx) {
    if (!(ctx.cut && g.c == 1 && g.k >= 3 && es.y == 1 && et.y == 1)) return std::nullopt;
    return Hit{ConditionClass::O1, {{"s", es}, {"t", et}}};
}

std::optional<Hit> guard_o2(const ShapeSpec& g, GridPoint es, GridPoint et,
                            const OCtx& ctx) {
    if (!(ctx.cut && g.c == 1 && g.b == 1 && es.y == 1 && es.x >= g.a + 1 &&
          es.x <= g.a + g.k && et.x == g.m))
        return std::nullopt;
    return Hit{ConditionClass::O2, {{"s", es}, {"t", et}}};
}

std::optional<Hit> guard_o3(const ShapeSpec& g, GridPoint es, GridPoint et,
                            const OCtx& ctx) {
    if (!(ctx.cut && g.c == 1 && g.d == 1 && es.y == 1 && et.y == g.n &&
          es.x >= g.a + 1 && es.x <= g.a + g.k && et.x >= g.a + 1 &&
          et.x <= g.a + g.k))
        return std::nullopt;
    return Hit{ConditionClass::O3, {{"s", es}, {"t", et}}};
}

std::optional<Hit> guard_o4(const ShapeSpec& g, GridPoint es, GridPoint et,
                            const OCtx&) {
    if (!(g.a == 1 && g.c == 1 && es == GridPoint{1, 1})) return std::nullopt;
    std::vector<std::pair<std::string, GridPoint>> wit = {
        {"u", {1, g.c + 1}}, {"q", {1, g.c + 2}}, {"v", {g.m, g.c + 1}},
        {"z", {g.m, g.c + 2}}};
    if (g.d == 1 && et.y == g.n && es.x != et.x)
        return Hit{ConditionClass::O4a, std::move(wit)};
    if (es.x == et.x && g.l >= 3 && et.y >= 4)
        return Hit{ConditionClass::O4b, std::move(wit)};
    return std::nullopt;
}

using GuardFn = std::optional<Hit> (*)(const ShapeSpec&, GridPoint, GridPoint,
                                       const OCtx&);

std::optional<Verdict> scan_frames(const std::vector<OFrame>& frames, const OCtx& ctx,
                                   GuardFn guard) {
    for (const OFrame& f : frames) {
        struct Role {
            GridPoint es, et;
            bool swapped;
        };
        const Role roles[2] = {{f.lo, f.hi, !f.lo_is_orig_s},
                               {f.hi, f.lo, f.lo_is_orig_s}};
        for (const Role& r : roles) {
            if (auto hit = guard(f.spec, r.es, r.et, ctx)) {
                Verdict v;
                v.cls = hit->cls;
                v.frame_spec = f.spec;
                v.frame = f.tf;
                v.fs = r.es;
                v.ft = r.et;
                v.s_role_swapped = r.swapped;
                v.witnesses = std::move(hit->wit);
                return v;
            }
        }
    }
    return std::nullopt;
}

OCtx make_ctx(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    OCtx ctx;
    ctx.adj = adjacent(s, t);
    ctx.cut = is_cut_vertex(spec, s) || is_cut_vertex(spec, t) ||
              is_vertex_cut_pair(spec, s, t);
    return ctx;
}

Verdict o0_verdict(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    const CanonicalInstance ci = canonicalize(spec, s, t);
    Verdict v;
    v.cls = ConditionClass::O0;
    v.frame_spec = ci.spec;
    v.frame = ci.transform;
    v.fs = ci.s;
    v.ft = ci.t;
    v.s_role_swapped = ci.swapped;
    return v;
}

Verdict f1_verdict(const std::vector<OFrame>& frames) {
    const OFrame& f = frames.front();
    Verdict v;
    v.cls = ConditionClass::F1;
    v.frame_spec = f.spec;
    v.frame = f.tf;
    v.fs = f.lo;
    v.ft = f.hi;
    v.s_role_swapped = !f.lo_is_orig_s;
    return v;
}

void require_o_instance(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    require_valid(spec);
    if (spec.kind != ShapeKind::OShape)
        throw std::invalid_argument("wrong shape family: expected O-shape");
    if (s == t || !contains_point(spec, s) || !contains_point(spec, t))
        throw std::invalid_argument("endpoints must be distinct in-shape points");
}

}  // namespace

std::optional<Verdict> check_o_forbidden(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    require_o_instance(spec, s, t);
    const auto frames = o_frames(spec, s, t);
    const OCtx ctx = make_ctx(spec, s, t);
    if (ctx.cut) return f1_verdict(frames);
    for (GuardFn g : {guard_f10, guard_f11, guard_f12, guard_f13})
        if (auto v = scan_frames(frames, ctx, g)) return v;
    return std::nullopt;
}

Verdict classify_longest_case(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    require_o_instance(spec, s, t);
    const auto frames = o_frames(spec, s, t);
    const OCtx ctx = make_ctx(spec, s, t);
    if (ctx.cut) {
        for (GuardFn g : {guard_o1, guard_o2, guard_o3})
            if (auto v = scan_frames(frames, ctx, g)) return *v;
        return f1_verdict(frames);  // generic vertex cut; bound by component size
    }
    // Same forbidden scan as check_o_forbidden, so O0 means exactly "not
    // forbidden". Non-cut forbidden instances are then refined: F11-F13 keep
    // their label, F10 instances are re-expressed as O4.
    std::optional<Verdict> forb;
    for (GuardFn g : {guard_f10, guard_f11, guard_f12, guard_f13}) {
        forb = scan_frames(frames, ctx, g);
        if (forb) break;
    }
    if (!forb) return o0_verdict(spec, s, t);
    for (GuardFn g : {guard_f11, guard_f12, guard_f13, guard_o4})
        if (auto v = scan_frames(frames, ctx, g)) return *v;
    return *forb;  // F10 pattern with no O4 reading; bound handled case by case
}

}  // namespace oshape
