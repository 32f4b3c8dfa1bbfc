#include "oshape/path.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oshape {

std::vector<GridEdge> PathSeq::edges() const {
    std::vector<GridEdge> out;
    if (pts.size() < 2) return out;
    out.reserve(pts.size());
    for (size_t i = 0; i + 1 < pts.size(); ++i) out.emplace_back(pts[i], pts[i + 1]);
    if (closed) out.emplace_back(pts.back(), pts.front());
    return out;
}

bool PathSeq::has_edge(GridEdge e) const {
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (GridEdge(pts[i], pts[i + 1]) == e) return true;
    return closed && pts.size() >= 2 && GridEdge(pts.back(), pts.front()) == e;
}

bool PathSeq::visits(GridPoint p) const {
    return std::find(pts.begin(), pts.end(), p) != pts.end();
}

PathCheck check_pathseq(const PathSeq& p) {
    if (p.pts.empty()) return {false, "empty"};
    std::set<GridPoint> seen;
    for (auto q : p.pts)
        if (!seen.insert(q).second) return {false, "repeat " + to_string(q)};
    for (size_t i = 0; i + 1 < p.pts.size(); ++i)
        if (!adjacent(p.pts[i], p.pts[i + 1]))
            return {false, "non-adjacent step " + to_string(p.pts[i]) + "->" +
                               to_string(p.pts[i + 1])};
    if (p.closed) {
        if (p.size() < 4) return {false, "closed path shorter than 4"};
        if (!adjacent(p.pts.back(), p.pts.front()))
            return {false, "endpoints of closed path not adjacent"};
    }
    return {};
}

PathCheck validate_path(const ShapeSpec& spec, const PathSeq& p, GridPoint s, GridPoint t) {
    for (auto q : p.pts)
        if (!contains_point(spec, q)) return {false, "out-of-shape " + to_string(q)};
    PathCheck basic = check_pathseq(p);
    if (!basic.valid) return basic;
    if (!p.closed) {
        if (p.start() != s)
            return {false, "wrong start " + to_string(p.start()) + " != " + to_string(s)};
        if (p.end() != t)
            return {false, "wrong end " + to_string(p.end()) + " != " + to_string(t)};
    }
    return {};
}

namespace {

void require_disjoint(const PathSeq& a, const PathSeq& b) {
    std::set<GridPoint> seen(a.pts.begin(), a.pts.end());
    for (auto q : b.pts)
        if (seen.count(q)) throw std::invalid_argument("not-disjoint at " + to_string(q));
}

// Rotate a cycle so that the removed edge becomes the implied closing edge;
// the result runs ...->e-endpoint and starts at the other endpoint.
std::vector<GridPoint> open_cycle_at(const PathSeq& c, GridEdge e) {
    if (!c.closed) throw std::invalid_argument("edge-not-in-cycle: input not closed");
    const auto& v = c.pts;
    const size_t k = v.size();
    for (size_t i = 0; i < k; ++i) {
        const size_t j = (i + 1) % k;
        if (GridEdge(v[i], v[j]) == e) {
            std::vector<GridPoint> out;
            out.reserve(k);
            for (size_t t = 0; t < k; ++t) out.push_back(v[(j + t) % k]);
            return out;  // starts at v[j], ends at v[i]
        }
    }
    throw std::invalid_argument("edge-not-in-cycle");
}

}  // namespace

PathSeq concat_paths(const PathSeq& p1, const PathSeq& p2) {
    if (p1.closed || p2.closed)
        throw std::invalid_argument("concat requires open paths");
    require_disjoint(p1, p2);
    if (!adjacent(p1.end(), p2.start()))
        throw std::invalid_argument("ends-not-adjacent " + to_string(p1.end()) + " " +
                                    to_string(p2.start()));
    PathSeq out;
    out.pts = p1.pts;
    out.pts.insert(out.pts.end(), p2.pts.begin(), p2.pts.end());
    return out;
}

PathSeq combine_cycle_cycle(const PathSeq& c1, const PathSeq& c2, GridEdge e1, GridEdge e2) {
    require_disjoint(c1, c2);
    if (!parallel_edges(e1, e2)) throw std::invalid_argument("edges-not-parallel");
    auto a = open_cycle_at(c1, e1);  // a.front() ~ a.back() via e1
    auto b = open_cycle_at(c2, e2);
    // Need a.back() ~ b.front() and b.back() ~ a.front().
    for (int flip = 0; flip < 2; ++flip) {
        if (adjacent(a.back(), b.front()) && adjacent(b.back(), a.front())) {
            PathSeq out;
            out.pts = a;
            out.pts.insert(out.pts.end(), b.begin(), b.end());
            out.closed = true;
            return out;
        }
        std::reverse(b.begin(), b.end());
    }
    throw std::invalid_argument("edges-not-parallel: no consistent orientation");
}

PathSeq combine_cycle_path(const PathSeq& c, const PathSeq& p, GridEdge e1, GridEdge e2) {
    if (p.closed) throw std::invalid_argument("second argument must be open");
    require_disjoint(c, p);
    if (!parallel_edges(e1, e2)) throw std::invalid_argument("edges-not-parallel");
    // Splice the opened cycle into p in place of e2, keeping p's endpoints.
    const auto& v = p.pts;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        if (GridEdge(v[i], v[i + 1]) != e2) continue;
        auto a = open_cycle_at(c, e1);
        for (int flip = 0; flip < 2; ++flip) {
            if (adjacent(v[i], a.front()) && adjacent(a.back(), v[i + 1])) {
                PathSeq out;
                out.pts.assign(v.begin(), v.begin() + static_cast<long>(i) + 1);
                out.pts.insert(out.pts.end(), a.begin(), a.end());
                out.pts.insert(out.pts.end(), v.begin() + static_cast<long>(i) + 1, v.end());
                return out;
            }
            std::reverse(a.begin(), a.end());
        }
        throw std::invalid_argument("edges-not-parallel: no consistent orientation");
    }
    throw std::invalid_argument("edge-not-in-path");
}

PathSeq absorb_vertex(const PathSeq& c_or_p, GridPoint x, GridEdge edge) {
    if (c_or_p.visits(x)) throw std::invalid_argument("already-contained");
    if (!adjacent(x, edge.u) || !adjacent(x, edge.v))
        throw std::invalid_argument("not-adjoining");
    const auto& v = c_or_p.pts;
    const size_t k = v.size();
    const size_t last = c_or_p.closed ? k : k - 1;
    for (size_t i = 0; i < last; ++i) {
        const size_t j = (i + 1) % k;
        if (GridEdge(v[i], v[j]) == edge) {
            PathSeq out = c_or_p;
            out.pts.insert(out.pts.begin() + static_cast<long>(i) + 1, x);
            return out;
        }
    }
    throw std::invalid_argument("edge-not-in-path");
}

PathSeq close_path_with_cycle(const PathSeq& c, const PathSeq& p, GridEdge edge) {
    if (p.closed) throw std::invalid_argument("second argument must be open");
    require_disjoint(c, p);
    auto a = open_cycle_at(c, edge);  // runs u1-side...v1-side around the cycle
    // Need a.back() ~ start(p) and a.front() ~ end(p), in either orientation.
    for (int flip = 0; flip < 2; ++flip) {
        if (adjacent(a.back(), p.start()) && adjacent(a.front(), p.end())) {
            PathSeq out;
            out.pts = a;
            out.pts.insert(out.pts.end(), p.pts.begin(), p.pts.end());
            out.closed = true;
            return out;
        }
        std::reverse(a.begin(), a.end());
    }
    throw std::invalid_argument("edge endpoints do not adjoin the path ends");
}

PathSeq map_path(const PathSeq& p, const PlacedShape& placement) {
    PathSeq out;
    out.closed = p.closed;
    out.pts.reserve(p.pts.size());
    for (auto q : p.pts) out.pts.push_back(placement.to_parent(q));
    return out;
}

PathSeq reverse_path(const PathSeq& p) {
    PathSeq out = p;
    std::reverse(out.pts.begin(), out.pts.end());
    return out;
}

std::optional<std::pair<GridEdge, GridEdge>> find_parallel_edges(const PathSeq& hay,
                                                                 const PathSeq& needle) {
    for (auto e1 : hay.edges())
        for (auto e2 : needle.edges())
            if (parallel_edges(e1, e2)) return std::make_pair(e1, e2);
    return std::nullopt;
}

}  // namespace oshape
