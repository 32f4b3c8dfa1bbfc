#include "oshape/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace oshape {

int oracle_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("SOLVER_ORACLE_CAP")) {
            const int v = std::atoi(env);
            if (v >= 4) return v;
        }
        return 22;
    }();
    return cap;
}

namespace {

// Dense index over the shape's vertices, row-major, plus adjacency bitmasks.
struct IndexedGraph {
    std::vector<GridPoint> verts;
    std::vector<std::uint32_t> adj;          // adjacency as vertex-index bitmask
    std::vector<std::vector<int>> nbr;       // neighbor indices, frozen offset order
    int index_of(GridPoint p) const {
        auto it = std::lower_bound(verts.begin(), verts.end(), p,
                                   [](GridPoint a, GridPoint b) {
                                       return a.y != b.y ? a.y < b.y : a.x < b.x;
                                   });
        if (it == verts.end() || !(*it == p)) return -1;
        return static_cast<int>(it - verts.begin());
    }
};

IndexedGraph build_graph(const ShapeSpec& spec) {
    IndexedGraph g;
    g.verts = all_points(spec);
    const int n = static_cast<int>(g.verts.size());
    g.adj.assign(n, 0);
    g.nbr.resize(n);
    for (int i = 0; i < n; ++i) {
        for (auto [dx, dy] : kNeighborOffsets) {
            GridPoint q{g.verts[i].x + dx, g.verts[i].y + dy};
            if (!contains_point(spec, q)) continue;
            const int j = g.index_of(q);
            g.adj[i] |= 1u << j;
            g.nbr[i].push_back(j);
        }
    }
    return g;
}

std::uint32_t component_of(const IndexedGraph& g, int start, std::uint32_t allowed) {
    std::uint32_t comp = 1u << start, frontier = comp;
    while (frontier) {
        std::uint32_t next = 0;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.adj[v] & allowed & ~comp;
        }
        comp |= next;
        frontier = next;
    }
    return comp;
}

struct DfsState {
    const IndexedGraph* g;
    int t;
    std::uint64_t steps = 0, budget = 0;
    bool exhausted = true;
    int best = 0;
    std::vector<int> cur, best_path;

    // Remaining vertices reachable from cur and still connected to t bound the
    // achievable length; prune when even that cannot beat the best.
    void run(int v, std::uint32_t visited) {
        if (budget && ++steps > budget) {
            exhausted = false;
            return;
        }
        cur.push_back(v);
        if (v == t) {
            if (static_cast<int>(cur.size()) > best) {
                best = static_cast<int>(cur.size());
                best_path = cur;
            }
        } else {
            const std::uint32_t free = ~visited;
            const std::uint32_t comp = component_of(*g, v, free);
            if (comp & (1u << t)) {
                const int bound =
                    static_cast<int>(cur.size()) + std::popcount(comp) - 1;
                if (bound > best) {
                    for (int u : g->nbr[v])
                        if (!(visited & (1u << u)))
                            run(u, visited | (1u << u));
                }
            }
        }
        cur.pop_back();
    }
};

}  // namespace

BruteResult brute_longest_path(const ShapeSpec& spec, GridPoint s, GridPoint t,
                               std::uint64_t budget) {
    require_valid(spec);
    if (s == t) throw std::invalid_argument("identical endpoints");
    if (vertex_count(spec) > oracle_cap())
        throw std::invalid_argument("too-large for oracle");
    IndexedGraph g = build_graph(spec);
    const int si = g.index_of(s), ti = g.index_of(t);
    if (si < 0 || ti < 0) throw std::invalid_argument("endpoint not in shape");
    DfsState st;
    st.g = &g;
    st.t = ti;
    st.budget = budget;
    st.run(si, 1u << si);
    BruteResult out;
    out.length = st.best;
    out.exhausted = st.exhausted;
    for (int i : st.best_path) out.witness.pts.push_back(g.verts[i]);
    return out;
}

std::vector<int> dp_longest_from(const ShapeSpec& spec, GridPoint s) {
    require_valid(spec);
    const int nv = vertex_count(spec);
    if (nv > 24) throw std::invalid_argument("too-large for oracle DP");
    IndexedGraph g = build_graph(spec);
    const int si = g.index_of(s);
    if (si < 0) throw std::invalid_argument("endpoint not in shape");
    // reach[mask] = bitmask of vertices v such that some simple path from s
    // covering exactly `mask` ends at v. Masks are enumerated ascending, which
    // respects the subset order.
    std::vector<std::uint32_t> reach(1u << nv, 0);
    std::vector<int> best(nv, 0);
    reach[1u << si] = 1u << si;
    best[si] = 1;
    const std::uint32_t full = (1u << nv) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = reach[mask];
        if (!ends || !(mask & (1u << si))) continue;
        const int len = std::popcount(mask);
        while (ends) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            if (len > best[v]) best[v] = len;
            std::uint32_t nxt = g.adj[v] & ~mask;
            while (nxt) {
                const int u = std::countr_zero(nxt);
                nxt &= nxt - 1;
                reach[mask | (1u << u)] |= 1u << u;
            }
        }
    }
    return best;
}

int dp_longest_path(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    IndexedGraph g = build_graph(spec);
    const int ti = g.index_of(t);
    if (ti < 0) throw std::invalid_argument("endpoint not in shape");
    return dp_longest_from(spec, s)[ti];
}

bool brute_hamiltonian_exists(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    require_valid(spec);
    if (s == t) throw std::invalid_argument("identical endpoints");
    const int nv = vertex_count(spec);
    if (nv > 24) throw std::invalid_argument("too-large for oracle DP");
    return dp_longest_path(spec, s, t) == nv;
}

std::vector<ShapeSpec> enumerate_specs(const InstanceFilter& f) {
    std::vector<ShapeSpec> out;
    const auto keep = [&](const ShapeSpec& s) {
        if (spec_valid(s) && vertex_count(s) <= f.max_vertices) out.push_back(s);
    };
    if (f.rect)
        for (int m = 1; m <= f.max_m; ++m)
            for (int n = 1; n <= f.max_n; ++n) keep(ShapeSpec::rect(m, n));
    if (f.lshape)
        for (int m = 2; m <= f.max_m; ++m)
            for (int n = 2; n <= f.max_n; ++n)
                for (int k = 1; k < m; ++k)
                    for (int l = 1; l < n; ++l) keep(ShapeSpec::lshape(m, n, k, l));
    if (f.cshape)
        for (int m = 2; m <= f.max_m; ++m)
            for (int n = 3; n <= f.max_n; ++n)
                for (int k = 1; k < m; ++k)
                    for (int l = 1; l <= n - 2; ++l)
                        for (int c = 1; c + l < n; ++c)
                            keep(ShapeSpec::cshape(m, n, k, l, c, n - c - l));
    if (f.oshape)
        for (int m = 3; m <= f.max_m; ++m)
            for (int n = 3; n <= f.max_n; ++n)
                for (int k = 1; k <= m - 2; ++k)
                    for (int l = 1; l <= n - 2; ++l)
                        for (int a = 1; a + k < m; ++a)
                            for (int c = 1; c + l < n; ++c)
                                keep(ShapeSpec::oshape(m, n, k, l, a, m - a - k, c,
                                                       n - c - l));
    return out;
}

void for_each_endpoint_pair(const ShapeSpec& spec,
                            const std::function<void(GridPoint, GridPoint)>& fn) {
    const auto pts = all_points(spec);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) fn(pts[i], pts[j]);
}

}  // namespace oshape
