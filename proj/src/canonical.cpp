#include "oshape/canonical.hpp"

#include <stdexcept>

namespace oshape {

int canonical_family(const ShapeSpec& s) {
    if (s.kind != ShapeKind::OShape) return 0;
    if (s.a == 1 && s.b == 1 && s.c == 1 && s.d == 1) return 1;
    if (s.a >= 2 && s.c == 1) return 2;
    if (s.a >= 2 && s.b >= 2 && s.c >= 2 && s.d >= 2) return 3;
    return 0;
}

CanonicalInstance canonicalize(const ShapeSpec& spec, GridPoint s, GridPoint t) {
    require_valid(spec);
    if (spec.kind != ShapeKind::OShape)
        throw std::invalid_argument("canonicalize expects an O-shape");
    if (s == t || !contains_point(spec, s) || !contains_point(spec, t))
        throw std::invalid_argument("endpoints must be distinct in-shape points");

    for (Sym sym : kAllSyms) {
        const ShapeSpec cand = transform_spec(spec, sym);
        if (canonical_family(cand) == 0) continue;
        SymmetryTransform tf{sym, spec.m, spec.n};
        GridPoint cs = tf.apply(s), ct = tf.apply(t);
        bool swapped = false;
        if (ct.x < cs.x || (ct.x == cs.x && ct.y < cs.y)) {
            std::swap(cs, ct);
            swapped = true;
        }
        return CanonicalInstance{cand, cs, ct, tf, swapped};
    }
    // Every valid O-shape admits a canonical orientation; asserted by tests.
    throw std::logic_error("no canonical orientation for " + to_string(spec));
}

}  // namespace oshape
