#include "oshape/render.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace oshape {

namespace {

char base36(int v) {
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

char arrow_for(GridPoint from, GridPoint to) {
    const int dx = to.x - from.x, dy = to.y - from.y;
    if (dx == 0) return dy > 0 ? 'v' : '^';
    if (dy == 0) return dx > 0 ? '>' : '<';
    if (dx > 0) return dy > 0 ? '\\' : '/';
    return dy > 0 ? '/' : '\\';
}

}  // namespace

std::string ascii_render(const ShapeSpec& spec, const std::optional<PathSeq>& path) {
    require_valid(spec);
    std::map<GridPoint, char> mark;
    if (path) {
        for (auto p : path->pts)
            if (!contains_point(spec, p))
                throw std::invalid_argument("invalid-path: out-of-shape " + to_string(p));
        const bool arrows = path->size() > 1296;
        for (int i = 0; i < path->size(); ++i) {
            GridPoint p = path->pts[static_cast<size_t>(i)];
            if (arrows) {
                mark[p] = i + 1 < path->size()
                              ? arrow_for(p, path->pts[static_cast<size_t>(i) + 1])
                              : '*';
            } else {
                const int v = i + 1;  // visit order, 1-based
                mark[p] = v < 36 * 36 ? base36(v % 36) : '*';
            }
        }
        if (!path->closed && path->size() >= 1) {
            mark[path->start()] = 'S';
            mark[path->end()] = 'T';
        }
    }
    std::ostringstream out;
    for (int y = 1; y <= spec.n; ++y) {
        for (int x = 1; x <= spec.m; ++x) {
            GridPoint p{x, y};
            if (!contains_point(spec, p)) out << ' ';
            else if (auto it = mark.find(p); it != mark.end()) out << it->second;
            else out << '.';
            if (x < spec.m) out << ' ';
        }
        out << '\n';
    }
    return out.str();
}

std::string svg_render(const ShapeSpec& spec, const std::optional<PathSeq>& path) {
    require_valid(spec);
    const int cell = 20, pad = 10;
    const int w = spec.m * cell + 2 * pad, h = spec.n * cell + 2 * pad;
    auto cx = [&](GridPoint p) { return pad + (p.x - 1) * cell + cell / 2; };
    auto cy = [&](GridPoint p) { return pad + (p.y - 1) * cell + cell / 2; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    for (int y = 1; y <= spec.n; ++y)
        for (int x = 1; x <= spec.m; ++x) {
            if (!contains_point(spec, {x, y})) continue;
            out << "<rect x=\"" << pad + (x - 1) * cell << "\" y=\""
                << pad + (y - 1) * cell << "\" width=\"" << cell << "\" height=\""
                << cell << "\" fill=\"#f4f4f4\" stroke=\"#999\"/>\n";
        }
    if (path && path->size() >= 2) {
        for (auto p : path->pts)
            if (!contains_point(spec, p))
                throw std::invalid_argument("invalid-path: out-of-shape " + to_string(p));
        out << "<polyline fill=\"none\" stroke=\"#c33\" stroke-width=\"2\" points=\"";
        for (auto p : path->pts) out << cx(p) << "," << cy(p) << " ";
        if (path->closed) out << cx(path->start()) << "," << cy(path->start()) << " ";
        out << "\"/>\n";
        if (!path->closed) {
            out << "<circle cx=\"" << cx(path->start()) << "\" cy=\"" << cy(path->start())
                << "\" r=\"4\" fill=\"#383\"/>\n";
            out << "<circle cx=\"" << cx(path->end()) << "\" cy=\"" << cy(path->end())
                << "\" r=\"4\" fill=\"#338\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace oshape
