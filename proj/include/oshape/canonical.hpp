#pragma once

#include "oshape/shape.hpp"

namespace oshape {

// An O-shape instance mapped onto one of the three reference orientations:
//   (1) a = b = c = d = 1,  (2) a >= 2 and c = 1,  (3) a, b, c, d >= 2.
// `transform` maps original coordinates to canonical ones; `swapped` records
// whether the endpoints changed roles to restore s_x <= t_x.
struct CanonicalInstance {
    ShapeSpec spec;
    GridPoint s, t;
    SymmetryTransform transform;
    bool swapped = false;

    GridPoint to_original(GridPoint canonical_pt) const {
        return transform.unapply(canonical_pt);
    }
};

// Which reference orientation a spec is in, or 0 if none.
int canonical_family(const ShapeSpec& spec);

CanonicalInstance canonicalize(const ShapeSpec& spec, GridPoint s, GridPoint t);

}  // namespace oshape
